#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf/transfer.hpp"
#include "massey.hpp"
#include "models.hpp"

using namespace ainf;

namespace {

Vector eval(const MultiLinearMap& m, std::initializer_list<BasisIndex> key) { return m.at(Tuple(key)); }

// F_3 = m_2(f_1⊗f_2 − f_2⊗f_1) − f_2(m_2⊗1 − 1⊗m_2), written out per tuple.
Vector F3_by_hand(const Dga& a, const TransferResult& t, BasisIndex x, BasisIndex y, BasisIndex z) {
    const auto& f1 = t.morphism->f(1);
    const auto& f2 = t.morphism->f(2);
    const auto& m2 = t.minimal->m(2);
    const auto& H = *t.minimal->space();
    Vector out = sign_of_parity(H.degree(x)) * a.multiply(eval(f1, {x}), eval(f2, {y, z}));
    out -= a.multiply(eval(f2, {x, y}), eval(f1, {z}));
    std::array<Vector, 2> xy_z{eval(m2, {x, y}), Vector::basis(z)};
    std::array<Vector, 2> x_yz{Vector::basis(x), eval(m2, {y, z})};
    out -= f2.evaluate(xy_z);
    out += f2.evaluate(x_yz);
    return out;
}

BasisIndex cls(const TransferResult& t, const std::string& label) { return t.minimal->space()->index_of(label); }

}  // namespace

TEST_CASE("F_3 matches the written-out formula") {
    std::mt19937_64 rng(21);
    std::vector<Dga> algebras{testing::kodaira_thurston(), testing::heisenberg()};
    for (int i = 0; i < 4; ++i) algebras.push_back(testing::transport(testing::random_dga(rng, 10), rng));
    for (const Dga& a : algebras) {
        auto t = begin_transfer(std::make_shared<const AInfStructure>(AInfStructure::from_dga(a, 3)),
                                compute_splitting(a.d()), 3);
        CHECK_THROWS_AS(compute_F_p(t, 3), DependencyError);
        transfer_step(t, 2);
        auto F = compute_F_p(t, 3);
        auto n = static_cast<BasisIndex>(t.minimal->space()->dim());
        for (BasisIndex x = 0; x < n; ++x)
            for (BasisIndex y = 0; y < n; ++y)
                for (BasisIndex z = 0; z < n; ++z) CHECK(F.at({x, y, z}) == F3_by_hand(a, t, x, y, z));
    }
}

TEST_CASE("Kodaira-Thurston F_3 and m_3") {
    Dga kt = testing::kodaira_thurston();
    auto t = kadeishvili_transfer(kt, compute_splitting(kt.d()), 4);
    const auto& A = *kt.space();
    BasisIndex e1 = cls(t, "[e1]"), e2 = cls(t, "[e2]");
    // f_2(e1, e2) = Q(−e1e2) = −e4, f_2(e2, e1) = e4, so F_3 = −e1e4 + e4e1 = −2 e1e4.
    CHECK(t.morphism->f(2).at({e1, e2}) == -1 * kt.element("e4"));
    Vector want = Vector::basis(A.index_of("e1*e4"), -2);
    t.level = 2;
    CHECK(compute_F_p(t, 3).at({e1, e2, e1}) == want);
    CHECK(t.minimal->m(3).at({e1, e2, e1}) == Vector::basis(cls(t, "[e1*e4]"), -2));
    CHECK_FALSE(t.minimal->m(3).is_zero());
}

TEST_CASE("transfer output satisfies the identities") {
    Dga kt = testing::kodaira_thurston();
    auto t = kadeishvili_transfer(kt, compute_splitting(kt.d()), 5);
    CHECK(t.minimal->minimal());
    CHECK(check_stasheff(*t.minimal, 5).passed());
    CHECK(check_morphism(*t.morphism, 5).passed());
    // m_2 is the cohomology product
    auto ring = cohomology_ring(kt);
    CHECK(t.minimal->m(2) == ring.ring.product());
}

TEST_CASE("formal inputs transfer to themselves") {
    for (const Dga& a : {testing::torus(4), make_cpn_cohomology(3)}) {
        auto t = kadeishvili_transfer(a, compute_splitting(a.d()), 6);
        CHECK(t.minimal->m(2) == a.product());
        for (int p = 3; p <= 6; ++p) CHECK(t.minimal->m(p).is_zero());
        for (int p = 2; p <= 6; ++p) CHECK(t.morphism->f(p).is_zero());
    }
}

TEST_CASE("strictly unital transfer") {
    Dga kt = testing::kodaira_thurston();
    auto t = strictly_unital_transfer(kt, 5);
    REQUIRE(t.minimal->unit());
    auto u = *t.minimal->unit();
    CHECK(check_strict_unitality(*t.minimal, u).passed());
    CHECK(check_strict_unitality(*t.morphism, u, *kt.unit()).passed());
    for (const auto& [key, value] : t.minimal->m(3).table()) CHECK(std::find(key.begin(), key.end(), u) == key.end());
    for (std::size_t x = 0; x < t.minimal->space()->dim(); ++x) {
        CHECK(t.morphism->f(2).at({u, static_cast<BasisIndex>(x)}).is_zero());
        CHECK(t.morphism->f(2).at({static_cast<BasisIndex>(x), u}).is_zero());
    }
}

TEST_CASE("strictly unital transfer rejects an exact unit") {
    GradedSpace g;
    g.add("v", -1);
    g.add("1", 0);
    auto space = make_space(std::move(g));
    GradedLinearMap d(space, space, 1);
    d.set_column(0, Vector::basis(1));
    MultiLinearMap m(space, space, 2, 0);
    m.set({1, 1}, Vector::basis(1));
    m.set({1, 0}, Vector::basis(0));
    m.set({0, 1}, Vector::basis(0));
    Dga a(space, d, m, 1);
    CHECK(check_dga_axioms(a).passed());
    CHECK_THROWS_AS(strictly_unital_transfer(a, 3), InvalidInput);
}

TEST_CASE("Massey oracle on the Heisenberg model") {
    Dga h = testing::heisenberg();
    auto s = compute_splitting(h.d());
    const auto& A = *h.space();
    Vector e1 = Vector::basis(A.index_of("e1")), e2 = Vector::basis(A.index_of("e2"));
    auto set = testing::massey_triple(h, s, e1, e1, e2);
    REQUIRE(set);
    // ⟨e1, e1, e2⟩: a = 0, b with db = ē1 e2 = e1e2 → b = e3, value x̄b = e1e3.
    CHECK(set->particular == s.class_coordinates(Vector::basis(A.index_of("e1*e3"))));
    CHECK_FALSE(set->contains(Vector{}));
}

TEST_CASE("transferred m_3 lies in the Massey set") {
    std::mt19937_64 rng(99);
    int admissible = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Dga a = testing::transport(testing::random_dga(rng, 10), rng);
        auto t = strictly_unital_transfer(a, 3);
        const auto& H = *t.minimal->space();
        auto n = static_cast<BasisIndex>(H.dim());
        for (BasisIndex x = 0; x < n; ++x)
            for (BasisIndex y = 0; y < n; ++y)
                for (BasisIndex z = 0; z < n; ++z) {
                    if (!t.minimal->m(2).at({x, y}).is_zero() || !t.minimal->m(2).at({y, z}).is_zero()) continue;
                    auto set = testing::massey_triple(a, t.splitting, t.splitting.harmonic()[static_cast<std::size_t>(x)],
                                                      t.splitting.harmonic()[static_cast<std::size_t>(y)],
                                                      t.splitting.harmonic()[static_cast<std::size_t>(z)]);
                    REQUIRE(set);
                    ++admissible;
                    Vector m3 = sign_of_parity(H.degree(y) + 1) * t.minimal->m(3).at({x, y, z});
                    CHECK(set->contains(m3));
                }
    }
    CHECK(admissible > 0);
}

TEST_CASE("vanishing profile") {
    // Kodaira–Thurston: degree-1 classes, no degree bound.
    auto kt = strictly_unital_transfer(testing::kodaira_thurston(), 4);
    auto c = vanishing_profile(*kt.minimal);
    CHECK_FALSE(c.degree_bound);
    CHECK_FALSE(c.certified_from);
    CHECK(c.connectivity == 0);

    // S^3 × S^3: classes in 0, 3, 3, 6; two 3-classes already reach the top.
    Dga s3s3 = make_free_graded_commutative_dga({{"a", 3}, {"b", 3}}, {});
    auto t = strictly_unital_transfer(s3s3, 6);
    auto c2 = vanishing_profile(*t.minimal);
    REQUIRE(c2.degree_bound);
    CHECK(*c2.degree_bound == 3);
    CHECK(c2.certified_from == 3);
    CHECK(c2.connectivity == 2);
    CHECK(c2.connectivity_bound == 3);
    CHECK(c2.top_degree == 6);
}
