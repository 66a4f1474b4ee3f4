#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf/linalg.hpp"
#include "ainf/splitting.hpp"
#include "models.hpp"

using namespace ainf;

namespace {

struct TwoTerm {
    SpacePtr space;
    GradedLinearMap d;
};

TwoTerm two_term() {
    GradedSpace g;
    g.add("x", 1);
    g.add("y", 2);
    auto space = make_space(std::move(g));
    GradedLinearMap d(space, space, 1);
    d.set_column(0, Vector::basis(1));
    return {space, d};
}

}  // namespace

TEST_CASE("scalars format canonically") {
    CHECK(format_scalar(Scalar(3)) == "3/1");
    CHECK(format_scalar(Scalar(-6, 4)) == "-3/2");
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK_THROWS_AS(parse_scalar("1/0"), MalformedInput);
    CHECK_THROWS_AS(parse_scalar("abc"), MalformedInput);
    CHECK_THROWS_AS(parse_scalar("1/-2"), MalformedInput);
}

TEST_CASE("graded space rejects duplicate labels") {
    GradedSpace g;
    g.add("a", 0);
    CHECK_THROWS_AS(g.add("a", 3), MalformedInput);
    CHECK(g.shifted(-1).degree(0) == -1);
}

TEST_CASE("vectors drop zero coefficients") {
    Vector v = Vector::basis(2, 3);
    v.add_term(2, -3);
    CHECK(v.is_zero());
}

TEST_CASE("linear maps check degrees") {
    auto [space, d] = two_term();
    CHECK_THROWS_AS(d.set_column(0, Vector::basis(0)), MalformedInput);
}

TEST_CASE("solve_linear on a two-term complex") {
    auto [space, d] = two_term();
    auto x = solve_linear(d, Vector::basis(1));
    REQUIRE(x);
    CHECK(*x == Vector::basis(0));
    GradedLinearMap zero(space, space, 1);
    auto z = solve_linear(zero, Vector{});
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_FALSE(solve_linear(zero, Vector::basis(1)));
    CHECK_THROWS_AS(solve_linear(d, Vector::basis(0) + Vector::basis(1)), MalformedInput);
}

TEST_CASE("solve_linear on the Kodaira-Thurston differential") {
    Dga kt = testing::kodaira_thurston();
    const auto& space = *kt.space();
    Vector target = Vector::basis(space.index_of("e1*e2"));
    auto x = solve_linear(kt.d(), target);
    REQUIRE(x);
    CHECK(kt.d().apply(*x) == target);
    CHECK(*x == Vector::basis(space.index_of("e4")));
    // Deterministic: same answer twice.
    CHECK(*solve_linear(kt.d(), target) == *x);
}

TEST_CASE("splitting of the zero differential") {
    Dga t4 = testing::torus(4);
    auto s = compute_splitting(t4.d());
    CHECK(s.exact().empty());
    CHECK(s.complement().empty());
    CHECK(s.harmonic().size() == 16);
}

TEST_CASE("splitting of a two-term complex") {
    auto [space, d] = two_term();
    auto s = compute_splitting(d);
    REQUIRE(s.exact().size() == 1);
    CHECK(s.exact()[0] == Vector::basis(1));
    CHECK(s.complement()[0] == Vector::basis(0));
    CHECK(s.harmonic().empty());
    CHECK(apply_homotopy_Q(s, Vector::basis(1)) == Vector::basis(0));
    CHECK(apply_homotopy_Q(s, Vector{}).is_zero());
}

TEST_CASE("Kodaira-Thurston splitting") {
    Dga kt = testing::kodaira_thurston();
    auto s = compute_splitting(kt.d());
    std::vector<std::size_t> betti;
    for (auto [deg, n] : s.betti()) betti.push_back(n);
    CHECK(betti == std::vector<std::size_t>{1, 3, 4, 3, 1});
    // Independent count: dim ker − dim im per degree.
    auto ranks = ranks_by_degree(kt.d());
    auto dims = kt.space()->dims();
    for (auto [deg, n] : s.betti()) {
        std::size_t rank_in = ranks.count(deg - 1) ? ranks[deg - 1] : 0;
        CHECK(n == dims[deg] - ranks[deg] - rank_in);
    }
    const auto& space = *kt.space();
    CHECK(apply_homotopy_Q(s, Vector::basis(space.index_of("e1*e2"))) == Vector::basis(space.index_of("e4")));
    CHECK_THROWS_AS(apply_homotopy_Q(s, Vector::basis(space.index_of("e1"))), NotExact);
}

TEST_CASE("splitting identities hold basis-wise") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Dga a = testing::transport(testing::random_dga(rng, 10), rng);
        auto s = compute_splitting(a.d());
        for (std::size_t i = 0; i < a.space()->dim(); ++i) {
            Vector v = Vector::basis(static_cast<BasisIndex>(i));
            auto parts = s.coordinates(v);
            Vector back;
            for (const auto& [j, c] : parts.exact) back.axpy(c, s.exact()[static_cast<std::size_t>(j)]);
            for (const auto& [j, c] : parts.harmonic) back.axpy(c, s.harmonic()[static_cast<std::size_t>(j)]);
            for (const auto& [j, c] : parts.complement) back.axpy(c, s.complement()[static_cast<std::size_t>(j)]);
            CHECK(back == v);
        }
        for (std::size_t j = 0; j < s.complement().size(); ++j) {
            CHECK(s.homotopy(a.d().apply(s.complement()[j])) == s.complement()[j]);
            CHECK(a.d().apply(s.homotopy(s.exact()[j])) == s.exact()[j]);
        }
    }
}

TEST_CASE("splitting rejects d squared nonzero") {
    GradedSpace g;
    g.add("a", 0);
    g.add("b", 1);
    g.add("c", 2);
    auto space = make_space(std::move(g));
    GradedLinearMap d(space, space, 1);
    d.set_column(0, Vector::basis(1));
    d.set_column(1, Vector::basis(2));
    CHECK_THROWS_AS(compute_splitting(d), AxiomViolation);
}

TEST_CASE("splitting with a preferred representative") {
    Dga kt = testing::kodaira_thurston();
    const auto& space = *kt.space();
    Vector pref = Vector::basis(space.index_of("e1")) + Vector::basis(space.index_of("e2"));
    std::vector<Vector> preferred{pref};
    auto s = compute_splitting(kt.d(), preferred);
    CHECK(s.harmonic()[1] == pref);
}

TEST_CASE("from_bases validates the decomposition") {
    auto [space, d] = two_term();
    CHECK_THROWS_AS(SplittingData::from_bases(d, {Vector::basis(1)}, {Vector::basis(0)}), InvalidInput);
    CHECK_THROWS_AS(SplittingData::from_bases(d, {}, {}), InvalidInput);
}
