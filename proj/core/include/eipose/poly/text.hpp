#ifndef EIPOSE_POLY_TEXT_HPP
#define EIPOSE_POLY_TEXT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eipose/poly/poly.hpp"

namespace eipose {

/// Canonical text form: terms descending under `order`, e.g.
/// "3*x^2*y - 1/2*x + 7". Parsing accepts the same grammar.
std::string to_text(const Poly &p, const MonomialOrder &order);
std::string to_text(const Poly &p); // internal grevlex order

Poly parse_poly(const std::string &text, const AmbientPtr &ambient);

/// Golden-file listing: '#' comment lines, then "vars: a b c", then one
/// polynomial per line.
void write_basis_text(std::ostream &os, const std::vector<Poly> &polys, const MonomialOrder &order);
std::vector<Poly> read_basis_text(std::istream &is);

} // namespace eipose

#endif
