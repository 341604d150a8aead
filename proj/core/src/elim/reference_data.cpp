#include "eipose/elim/problems.hpp"
#include "eipose/poly/text.hpp"

// Embedded reference data: the generator forms printed in the literature
// (transcribed verbatim, term order preserved) and the frozen outputs of
// derive_generators(), so solvers can instantiate generators without the
// Groebner engine.

namespace eipose::reference {

namespace {

AmbientPtr efk_xl_ambient() {
    static const AmbientPtr a = make_ambient(
        {"f11", "f12", "f13", "f21", "f22", "f23", "f31", "f32", "f33", "y13", "y23", "y33"});
    return a;
}

AmbientPtr h_ambient() {
    static const AmbientPtr a =
        make_ambient({"h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8", "h9"});
    return a;
}

} // namespace

AmbientPtr f_ambient() {
    static const AmbientPtr a =
        make_ambient({"f11", "f12", "f13", "f21", "f22", "f23", "f31", "f32", "f33"});
    return a;
}

const Poly &fef_cubic() {
    static const Poly p = parse_poly(
        "f11*f22*f33 - f11*f23*f32 - f12*f21*f33 + f12*f23*f31 + f13*f21*f32 - f13*f22*f31",
        f_ambient());
    return p;
}

const Poly &fef_quintic() {
    static const Poly p = parse_poly(
        "f11*f13^3*f31 + f13^2*f21*f23*f31 + f11*f13*f23^2*f31"
        " + f21*f23^3*f31"
        " - f11*f13*f31^3 - f21*f23*f31^3"
        " + f12*f13^3*f32 + f13^2*f22*f23*f32"
        " + f12*f13*f23^2*f32 + f22*f23^3*f32 - f12*f13*f31^2*f32 - f12^2*f13^2*f33"
        " - f11*f13*f31*f32^2 - f21*f23*f31*f32^2 - f12*f13*f32^3"
        " - f22*f23*f32^3"
        " - f11^2*f13^2*f33"
        " - f22*f23*f31^2*f32"
        " - 2*f11*f13*f21*f23*f33"
        " - 2*f12*f13*f22*f23*f33 - f21^2*f23^2*f33 - f22^2*f23^2*f33"
        " + f11^2*f31^2*f33 + f21^2*f31^2*f33"
        " + 2*f11*f12*f31*f32*f33"
        " + 2*f21*f22*f31*f32*f33"
        " + f12^2*f32^2*f33 + f22^2*f32^2*f33",
        f_ambient());
    return p;
}

const Poly &hf_quartic() {
    static const Poly p = parse_poly(
        "h1*h2*h7^2 + h4*h5*h7^2 - h1^2*h7*h8 + h2^2*h7*h8"
        " - h4^2*h7*h8 + h5^2*h7*h8 - h1*h2*h8^2 - h4*h5*h8^2",
        h_ambient());
    return p;
}

std::vector<Poly> ef_minors() {
    const AmbientPtr &a = f_ambient();
    auto v = [&](const char *n) { return Poly::variable(a, n); };
    // Maximal minors of [F^T | v] with v = (c2.c3, -c1.c3, 0), the columns
    // c_i of F; the published matrix is its row-transposed twin (there the
    // unknown-focal camera takes the transposed role).
    const Poly c2c3 = v("f12") * v("f13") + v("f22") * v("f23") + v("f32") * v("f33");
    const Poly c1c3 = v("f11") * v("f13") + v("f21") * v("f23") + v("f31") * v("f33");
    const Poly zero = Poly::zero(a);
    Poly m[3][4] = {{v("f11"), v("f21"), v("f31"), c2c3},
                    {v("f12"), v("f22"), v("f32"), -c1c3},
                    {v("f13"), v("f23"), v("f33"), zero}};
    std::vector<Poly> minors;
    for (int drop = 0; drop < 4; ++drop) {
        int c[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != drop)
                c[k++] = j;
        minors.push_back(m[0][c[0]] * (m[1][c[1]] * m[2][c[2]] - m[1][c[2]] * m[2][c[1]]) -
                         m[0][c[1]] * (m[1][c[0]] * m[2][c[2]] - m[1][c[2]] * m[2][c[0]]) +
                         m[0][c[2]] * (m[1][c[0]] * m[2][c[1]] - m[1][c[1]] * m[2][c[0]]));
    }
    return minors;
}

std::vector<Poly> efk_quadrics() {
    const AmbientPtr &a = efk_xl_ambient();
    auto v = [&](const char *n) { return Poly::variable(a, n); };
    return {
        v("f13") * v("y23") - v("f23") * v("y13"),
        v("f13") * v("y33") - v("f33") * v("y13"),
        v("f23") * v("y33") - v("f33") * v("y23"),
    };
}

namespace {

std::vector<Poly> parse_all(const AmbientPtr &a, const std::vector<const char *> &texts) {
    std::vector<Poly> out;
    out.reserve(texts.size());
    for (const char *t : texts)
        out.push_back(parse_poly(t, a));
    return out;
}

const std::vector<const char *> kFrozenFef = {
    "f13*f22*f31 - f12*f23*f31 - f13*f21*f32 + f11*f23*f32 + f12*f21*f33 - f11*f22*f33",
    "f11*f13^3*f31 + f13^2*f21*f23*f31 + f11*f13*f23^2*f31 + f21*f23^3*f31 - f11*f13*f31^3 - "
    "f21*f23*f31^3 + f12*f13^3*f32 + f13^2*f22*f23*f32 + f12*f13*f23^2*f32 + f22*f23^3*f32 - "
    "f12*f13*f31^2*f32 - f22*f23*f31^2*f32 - f11*f13*f31*f32^2 - f21*f23*f31*f32^2 - "
    "f12*f13*f32^3 - f22*f23*f32^3 - f11^2*f13^2*f33 - f12^2*f13^2*f33 - "
    "2*f11*f13*f21*f23*f33 - 2*f12*f13*f22*f23*f33 - f21^2*f23^2*f33 - f22^2*f23^2*f33 + "
    "f11^2*f31^2*f33 + f21^2*f31^2*f33 + 2*f11*f12*f31*f32*f33 + 2*f21*f22*f31*f32*f33 + "
    "f12^2*f32^2*f33 + f22^2*f32^2*f33",
};

const std::vector<const char *> kFrozenEf = {
    "f13*f22*f31 - f12*f23*f31 - f13*f21*f32 + f11*f23*f32 + f12*f21*f33 - f11*f22*f33",
    "f11*f13*f23*f31 + f21*f23^2*f31 + f12*f13*f23*f32 + f22*f23^2*f32 - f11*f13*f21*f33 - "
    "f12*f13*f22*f33 - f21^2*f23*f33 - f22^2*f23*f33 + f23*f31^2*f33 + f23*f32^2*f33 - "
    "f21*f31*f33^2 - f22*f32*f33^2",
    "f11*f13^2*f31 + f13*f21*f23*f31 + f12*f13^2*f32 + f13*f22*f23*f32 - f11^2*f13*f33 - "
    "f12^2*f13*f33 - f11*f21*f23*f33 - f12*f22*f23*f33 + f13*f31^2*f33 + f13*f32^2*f33 - "
    "f11*f31*f33^2 - f12*f32*f33^2",
    "f11*f13^2*f21 + f12*f13^2*f22 - f11^2*f13*f23 - f12^2*f13*f23 + f13*f21^2*f23 + "
    "f13*f22^2*f23 - f11*f21*f23^2 - f12*f22*f23^2 + f13*f21*f31*f33 - f11*f23*f31*f33 + "
    "f13*f22*f32*f33 - f12*f23*f32*f33",
};

const std::vector<const char *> kFrozenEfk = {
    "f33*y23 - f23*y33",
    "f33*y13 - f13*y33",
    "f23*y13 - f13*y23",
    "f22*f31*y13 - f21*f32*y13 - f12*f31*y23 + f11*f32*y23 + f12*f21*y33 - f11*f22*y33",
    "f13*f22*f31 - f12*f23*f31 - f13*f21*f32 + f11*f23*f32 + f12*f21*f33 - f11*f22*f33",
    "f11*f31*y13*y23 + f12*f32*y13*y23 + f21*f31*y23^2 + f22*f32*y23^2 - f11*f21*y13*y33 - "
    "f12*f22*y13*y33 - f21^2*y23*y33 - f22^2*y23*y33 + f31^2*y23*y33 + f32^2*y23*y33 - "
    "f21*f31*y33^2 - f22*f32*y33^2",
    "f11*f13*f31*y23 + f21*f23*f31*y23 + f12*f13*f32*y23 + f22*f23*f32*y23 - f11*f13*f21*y33 - "
    "f12*f13*f22*y33 - f21^2*f23*y33 - f22^2*f23*y33 + f23*f31^2*y33 + f23*f32^2*y33 - "
    "f21*f31*f33*y33 - f22*f32*f33*y33",
    "f11*f31*y13^2 + f12*f32*y13^2 + f21*f31*y13*y23 + f22*f32*y13*y23 - f11^2*y13*y33 - "
    "f12^2*y13*y33 + f31^2*y13*y33 + f32^2*y13*y33 - f11*f21*y23*y33 - f12*f22*y23*y33 - "
    "f11*f31*y33^2 - f12*f32*y33^2",
    "f11*f21*y13^2 + f12*f22*y13^2 - f11^2*y13*y23 - f12^2*y13*y23 + f21^2*y13*y23 + "
    "f22^2*y13*y23 - f11*f21*y23^2 - f12*f22*y23^2 + f21*f31*y13*y33 + f22*f32*y13*y33 - "
    "f11*f31*y23*y33 - f12*f32*y23*y33",
    "f11*f13*f31*y13 + f12*f13*f32*y13 + f13*f21*f31*y23 + f13*f22*f32*y23 - f11^2*f13*y33 - "
    "f12^2*f13*y33 - f11*f21*f23*y33 - f12*f22*f23*y33 + f13*f31^2*y33 + f13*f32^2*y33 - "
    "f11*f31*f33*y33 - f12*f32*f33*y33",
    "f11*f13*f21*y13 + f12*f13*f22*y13 - f11^2*f13*y23 - f12^2*f13*y23 + f13*f21^2*y23 + "
    "f13*f22^2*y23 - f11*f21*f23*y23 - f12*f22*f23*y23 + f13*f21*f31*y33 - f11*f23*f31*y33 + "
    "f13*f22*f32*y33 - f12*f23*f32*y33",
    "f11*f13*f23*f31 + f21*f23^2*f31 + f12*f13*f23*f32 + f22*f23^2*f32 - f11*f13*f21*f33 - "
    "f12*f13*f22*f33 - f21^2*f23*f33 - f22^2*f23*f33 + f23*f31^2*f33 + f23*f32^2*f33 - "
    "f21*f31*f33^2 - f22*f32*f33^2",
    "f11*f13^2*f31 + f13*f21*f23*f31 + f12*f13^2*f32 + f13*f22*f23*f32 - f11^2*f13*f33 - "
    "f12^2*f13*f33 - f11*f21*f23*f33 - f12*f22*f23*f33 + f13*f31^2*f33 + f13*f32^2*f33 - "
    "f11*f31*f33^2 - f12*f32*f33^2",
    "f11*f13^2*f21 + f12*f13^2*f22 - f11^2*f13*f23 - f12^2*f13*f23 + f13*f21^2*f23 + "
    "f13*f22^2*f23 - f11*f21*f23^2 - f12*f22*f23^2 + f13*f21*f31*f33 - f11*f23*f31*f33 + "
    "f13*f22*f32*f33 - f12*f23*f32*f33",
};

const std::vector<const char *> kFrozenHf = {
    "h1*h2*h7^2 + h4*h5*h7^2 - h1^2*h7*h8 + h2^2*h7*h8 - h4^2*h7*h8 + h5^2*h7*h8 - "
    "h1*h2*h8^2 - h4*h5*h8^2",
};

} // namespace

const std::vector<Poly> &frozen_generators(ProblemId id) {
    static const std::vector<Poly> fef = parse_all(f_ambient(), kFrozenFef);
    static const std::vector<Poly> ef = parse_all(f_ambient(), kFrozenEf);
    static const std::vector<Poly> efk = parse_all(efk_xl_ambient(), kFrozenEfk);
    static const std::vector<Poly> hf = parse_all(h_ambient(), kFrozenHf);
    switch (id) {
    case ProblemId::FEF:
        return fef;
    case ProblemId::EF:
        return ef;
    case ProblemId::EFK:
        return efk;
    case ProblemId::Hf:
        return hf;
    }
    throw std::logic_error("unknown problem id");
}

} // namespace eipose::reference
