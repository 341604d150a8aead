#include "eipose/poly/text.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace eipose {

namespace {

std::string term_body(const Ambient &ambient, const Monomial &m) {
    std::string out;
    for (int v = 0; v < ambient.size(); ++v) {
        const int e = m.exponent(v);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ambient.name(v);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

} // namespace

std::string to_text(const Poly &p, const MonomialOrder &order) {
    if (p.is_zero())
        return "0";
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const Term &a, const Term &b) { return order.greater(a.mon, b.mon); });
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        Rational c = terms[i].coef;
        if (i == 0) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        const std::string body = term_body(*p.ambient(), terms[i].mon);
        if (body.empty())
            out += c.get_str();
        else if (c == 1)
            out += body;
        else
            out += c.get_str() + "*" + body;
    }
    return out;
}

std::string to_text(const Poly &p) {
    return to_text(p, MonomialOrder::grevlex(p.ambient()->size()));
}

namespace {

struct Cursor {
    const std::string &s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " + msg);
    }
};

mpz_class parse_integer(Cursor &c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start)
        c.fail("expected an integer");
    return mpz_class(c.s.substr(start, c.i - start));
}

std::string parse_name(Cursor &c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        ++c.i;
    if (c.i == start)
        c.fail("expected a variable name");
    return c.s.substr(start, c.i - start);
}

// term := [rational] ('*'? name ('^' int)?)*
Term parse_term(Cursor &c, const AmbientPtr &ambient) {
    Term t{Monomial(ambient->size()), Rational(1)};
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        mpz_class num = parse_integer(c);
        mpz_class den(1);
        if (c.peek() == '/') {
            ++c.i;
            den = parse_integer(c);
        }
        t.coef = Rational(num, den);
        t.coef.canonicalize();
        saw_factor = true;
    }
    while (true) {
        if (c.peek() == '*') {
            ++c.i;
        } else if (saw_factor) {
            break; // factors after the first must be '*'-joined
        }
        if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
            c.fail("expected a variable after '*'");
        const std::string name = parse_name(c);
        const int var = ambient->index_of(name);
        if (var < 0)
            c.fail("unknown variable '" + name + "'");
        int e = 1;
        if (c.peek() == '^') {
            ++c.i;
            e = static_cast<int>(parse_integer(c).get_si());
        }
        t.mon.set_exponent(var, t.mon.exponent(var) + e);
        saw_factor = true;
    }
    return t;
}

} // namespace

Poly parse_poly(const std::string &text, const AmbientPtr &ambient) {
    Cursor c{text};
    std::vector<Term> terms;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.i;
    }
    if (c.done())
        throw std::invalid_argument("empty polynomial text");
    if (c.peek() == '0') {
        size_t save = c.i;
        ++c.i;
        if (c.done())
            return Poly::zero(ambient);
        c.i = save;
    }
    while (true) {
        Term t = parse_term(c, ambient);
        t.coef *= sign;
        terms.push_back(std::move(t));
        if (c.done())
            break;
        const char op = c.peek();
        if (op != '+' && op != '-')
            c.fail(std::string("unexpected character '") + op + "'");
        sign = op == '-' ? -1 : 1;
        ++c.i;
    }
    return Poly::from_terms(ambient, std::move(terms));
}

void write_basis_text(std::ostream &os, const std::vector<Poly> &polys, const MonomialOrder &order) {
    os << "vars:";
    if (!polys.empty())
        for (const auto &n : polys[0].ambient()->names())
            os << ' ' << n;
    os << '\n';
    for (const auto &p : polys)
        os << to_text(p, order) << '\n';
}

std::vector<Poly> read_basis_text(std::istream &is) {
    std::string line;
    AmbientPtr ambient;
    std::vector<Poly> polys;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("vars:", 0) == 0) {
            std::istringstream ls(line.substr(5));
            std::vector<std::string> names;
            std::string n;
            while (ls >> n)
                names.push_back(n);
            ambient = make_ambient(std::move(names));
            continue;
        }
        if (!ambient)
            throw std::invalid_argument("basis listing is missing the vars: header");
        polys.push_back(parse_poly(line, ambient));
    }
    return polys;
}

} // namespace eipose
