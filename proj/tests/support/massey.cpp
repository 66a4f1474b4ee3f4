#include "massey.hpp"

#include "ainf/linalg.hpp"

namespace ainf::testing {

namespace {

Vector bar(const GradedSpace& space, const Vector& w) {
    int deg = *w.degree_in(space);
    return sign_of_parity(1 + deg) * w;
}

std::vector<Vector> cocycles(const Dga& a, int degree) {
    std::vector<Vector> out;
    const auto& basis = a.space()->in_degree(degree);
    for (const auto& z : degree_block(a.d(), degree).nullspace()) {
        Vector v;
        for (std::size_t k = 0; k < z.size(); ++k) v.add_term(basis[k], z[k]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

bool MasseySet::contains(const Vector& cls) const {
    EchelonBasis span;
    for (const auto& v : indeterminacy) span.insert(v);
    return span.reduce(cls - particular).is_zero();
}

std::optional<MasseySet> massey_triple(const Dga& a, const SplittingData& s, const Vector& x, const Vector& y,
                                       const Vector& z) {
    const GradedSpace& space = *a.space();
    if (x.is_zero() || y.is_zero() || z.is_zero()) return std::nullopt;
    int dx = *x.degree_in(space), dy = *y.degree_in(space), dz = *z.degree_in(space);

    Vector xy = a.multiply(bar(space, x), y);
    Vector yz = a.multiply(bar(space, y), z);
    std::optional<Vector> pa = xy.is_zero() ? Vector{} : solve_linear(a.d(), xy);
    std::optional<Vector> pb = yz.is_zero() ? Vector{} : solve_linear(a.d(), yz);
    if (!pa || !pb) return std::nullopt;

    MasseySet out;
    // |a| = |x| + |y| − 1
    Vector abar = sign_of_parity(1 + dx + dy - 1) * *pa;
    out.particular = s.class_coordinates(a.multiply(abar, z) + a.multiply(bar(space, x), *pb));

    // a ranges over pa + Z^{|x|+|y|−1}, b over pb + Z^{|y|+|z|−1}.
    for (const auto& c : cocycles(a, dx + dy - 1))
        out.indeterminacy.push_back(s.class_coordinates(a.multiply(c, z)));
    for (const auto& c : cocycles(a, dy + dz - 1))
        out.indeterminacy.push_back(s.class_coordinates(a.multiply(x, c)));
    return out;
}

}  // namespace ainf::testing
