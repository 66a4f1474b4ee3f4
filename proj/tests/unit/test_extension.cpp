#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf/extension.hpp"
#include "ainf/linalg.hpp"
#include "massey.hpp"
#include "models.hpp"

using namespace ainf;

namespace {

std::map<int, std::size_t> betti(const Dga& a) {
    auto b = compute_splitting(a.d()).betti();
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    return b;
}

Vector torus_omega(const Dga& t, int n) {
    Vector w;
    for (int j = 1; j <= n; ++j)
        w += t.multiply(t.element("e" + std::to_string(2 * j - 1)), t.element("e" + std::to_string(2 * j)));
    return w;
}

// dim A^k − rank(L into A^k) + dim ker(L on A^{k − |θ|}), by direct rank counts.
std::map<int, std::size_t> expected_dims(const Dga& a, const Vector& omega, int theta_degree) {
    const GradedSpace& s = *a.space();
    int wd = theta_degree + 1;
    GradedLinearMap L(a.space(), a.space(), wd);
    for (std::size_t i = 0; i < s.dim(); ++i)
        L.set_column(static_cast<BasisIndex>(i), a.multiply(omega, Vector::basis(static_cast<BasisIndex>(i))));
    auto ranks = ranks_by_degree(L);
    std::map<int, std::size_t> out;
    for (auto [d, n] : s.dims()) {
        std::size_t r_in = ranks.count(d - wd) ? ranks.at(d - wd) : 0;
        std::size_t r_out = ranks.count(d) ? ranks.at(d) : 0;
        if (n > r_in) out[d] += n - r_in;
        if (n > r_out) out[d + theta_degree] += n - r_out;
    }
    return out;
}

}  // namespace

TEST_CASE("extension of CP^1 by w") {
    Dga c1 = make_cpn_cohomology(1);
    auto ext = extend_dga(c1, c1.element("w"), 1);
    const auto& s = *ext.dga.space();
    CHECK(s.dim() == 4);
    CHECK(s.label(2) == "th");
    CHECK(s.label(3) == "th*w");
    CHECK(s.degree(3) == 3);
    CHECK(betti(ext.dga) == std::map<int, std::size_t>{{0, 1}, {3, 1}});
    CHECK(ext.dga.differential(Vector::basis(2)) == c1.element("w"));
}

TEST_CASE("extension product and differential rules") {
    Dga t4 = testing::torus(4);
    Vector omega = torus_omega(t4, 2);
    auto ext = extend_dga(t4, omega, 1);
    CHECK(ext.dga.space()->dim() == 32);
    CHECK(check_dga_axioms(ext.dga).passed());
    const auto& s = *ext.dga.space();
    auto e1 = s.index_of("e1"), te2 = s.index_of("th*e2"), te3 = s.index_of("th*e3");
    // e1 · θe2 = −θ(e1e2), θe2 · e1 = θ(e2e1) = −θ(e1e2)
    CHECK(ext.dga.product().at({e1, te2}) == Vector::basis(s.index_of("th*e1*e2"), -1));
    CHECK(ext.dga.product().at({te2, e1}) == Vector::basis(s.index_of("th*e1*e2"), -1));
    CHECK(ext.dga.product().at({te2, te3}).is_zero());
    CHECK(ext.dga.differential(Vector::basis(te3)) == ext.embed(t4.multiply(omega, t4.element("e3"))));

    // Kodaira–Thurston: d(θe4) = ω e4 − θ e1e2
    Dga kt = testing::kodaira_thurston();
    Vector w = kt.element("e1*e3");
    auto kext = extend_dga(kt, w, 1);
    CHECK(check_dga_axioms(kext.dga).passed());
    const auto& ks = *kext.dga.space();
    Vector want = kext.embed(kt.multiply(w, kt.element("e4"))) - Vector::basis(ks.index_of("th*e1*e2"));
    CHECK(kext.dga.differential(Vector::basis(ks.index_of("th*e4"))) == want);
}

TEST_CASE("zero omega gives a closed theta") {
    Dga t2 = testing::torus(2);
    auto ext = extend_dga(t2, Vector{}, 3);
    CHECK(ext.dga.differential(Vector::basis(ext.theta(*t2.unit()))).is_zero());
    auto b = betti(ext.dga);
    CHECK(b[3] == 1);
    CHECK(b[5] == 1);
}

TEST_CASE("extension preconditions") {
    Dga kt = testing::kodaira_thurston();
    CHECK_THROWS_AS(extend_dga(kt, kt.element("e3*e4"), 1), InvalidInput);
    CHECK_THROWS_AS(extend_dga(kt, kt.element("e1"), 0), InvalidInput);
    CHECK_THROWS_AS(extend_dga(kt, kt.element("e1*e3"), 3), InvalidInput);
    CHECK_THROWS_AS(extend_dga(kt, kt.element("e1*e3") + kt.element("e1"), 1), InvalidInput);
}

TEST_CASE("extension cohomology matches the quotient plus kernel count") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Dga a = testing::random_formal(rng, 12);
        Vector omega = testing::random_closed(a, 2, rng);
        if (omega.is_zero()) continue;
        auto ext = extend_dga(a, omega, 1);
        CHECK(check_dga_axioms(ext.dga).passed());
        CHECK(betti(ext.dga) == expected_dims(a, omega, 1));
    }
    Dga t4 = testing::torus(4);
    CHECK(betti(extend_dga(t4, torus_omega(t4, 2), 1).dga) == expected_dims(t4, torus_omega(t4, 2), 1));
}

TEST_CASE("extension morphism") {
    Dga kt = testing::kodaira_thurston();
    auto id = GradedLinearMap::identity(kt.space());
    Vector wa = kt.element("e1*e3");
    auto a = extend_dga(kt, wa, 1);
    auto same = extension_morphism(id, a, a, Vector{});
    CHECK(same.g == GradedLinearMap::identity(a.dga.space()));
    CHECK(same.report.passed());

    // ω_B = ω_A + d e4
    Vector wb = wa + kt.element("e1*e2");
    auto b = extend_dga(kt, wb, 1);
    auto shifted = extension_morphism(id, a, b, kt.element("e4"));
    CHECK(shifted.report.passed());
    CHECK(shifted.report.find("g-quasi-isomorphism")->passed);
    CHECK_THROWS_AS(extension_morphism(id, a, b, Vector{}), InvalidWitness);

    // e1 ↦ e1 from T^1 into T^2 is a dga map but not a quasi-isomorphism.
    Dga t1 = testing::torus(1), t2 = testing::torus(2);
    GradedLinearMap inc(t1.space(), t2.space(), 0);
    inc.set_column(0, t2.element("1"));
    inc.set_column(1, t2.element("e1"));
    auto r = extension_morphism(inc, extend_dga(t1, Vector{}, 1), extend_dga(t2, Vector{}, 1), Vector{});
    CHECK_FALSE(r.report.find("f-quasi-isomorphism")->passed);
    CHECK_FALSE(r.report.find("g-quasi-isomorphism")->passed);
    CHECK(r.report.find("g-product")->passed);

    GradedLinearMap twice(t1.space(), t1.space(), 0);
    twice.set_column(0, t1.element("1"));
    twice.set_column(1, t1.element("e1", 2));
    CHECK(extension_morphism(twice, extend_dga(t1, Vector{}, 1), extend_dga(t1, Vector{}, 1), Vector{})
              .report.passed());
    GradedLinearMap bad(t2.space(), t2.space(), 0);
    for (BasisIndex i = 0; i < 4; ++i) bad.set_column(i, Vector::basis(i));
    bad.set_column(3, Vector{});
    CHECK_THROWS_AS(extension_morphism(bad, extend_dga(t2, Vector{}, 1), extend_dga(t2, Vector{}, 1), Vector{}),
                    InvalidInput);
}

TEST_CASE("formal extension model on T4") {
    Dga t4 = testing::torus(4);
    Vector omega = torus_omega(t4, 2);
    auto model = formal_extension_minimal_model(t4, omega, 5);
    CHECK(model.report.passed());
    const auto& t = model.transfer;
    CHECK(check_stasheff(*t.minimal, 5).passed());
    CHECK(check_morphism(*t.morphism, 5).passed());
    REQUIRE(t.minimal->unit());
    CHECK(check_strict_unitality(*t.minimal, *t.minimal->unit()).passed());
    CHECK(t.minimal->space()->dims() == expected_dims(t4, omega, 1));
    CHECK(model.ideal.size() + model.complement_of_ideal.size() == 16);
    CHECK(model.kernel_of_L.size() + model.complement_of_kernel.size() == 16);
    CHECK_FALSE(t.minimal->m(3).is_zero());
    for (int p = 4; p <= 5; ++p) CHECK(t.minimal->m(p).is_zero());

    // f_1 of a class is α0 + θβ0 with α0 ∈ A^C and β0 ∈ ker L
    for (std::size_t j = 0; j < t.minimal->space()->dim(); ++j) {
        auto [alpha, beta] = model.extension.split(t.morphism->f(1).at({static_cast<BasisIndex>(j)}));
        CHECK(t4.multiply(omega, beta).is_zero());
        for (const auto& [i, c] : alpha) {
            bool in_complement = false;
            for (const auto& v : model.complement_of_ideal) in_complement = in_complement || v == Vector::basis(i);
            CHECK(in_complement);
        }
    }
}

TEST_CASE("formal extension model agrees with the generic transfer") {
    Dga t4 = testing::torus(4);
    Vector omega = torus_omega(t4, 2);
    auto model = formal_extension_minimal_model(t4, omega, 3);
    const auto& ext = model.extension;
    const auto& m = model.transfer;
    auto generic_split = compute_splitting(ext.dga.d(), m.splitting.harmonic());
    REQUIRE(generic_split.harmonic() == m.splitting.harmonic());
    auto generic = kadeishvili_transfer(ext.dga, generic_split, 3);
    CHECK(generic.minimal->m(2) == m.minimal->m(2));

    const auto& H = *m.minimal->space();
    auto n = static_cast<BasisIndex>(H.dim());
    int compared = 0;
    for (BasisIndex x = 0; x < n; ++x)
        for (BasisIndex y = 0; y < n; ++y)
            for (BasisIndex z = 0; z < n; ++z) {
                if (!m.minimal->m(2).at({x, y}).is_zero() || !m.minimal->m(2).at({y, z}).is_zero()) continue;
                const auto& h = m.splitting.harmonic();
                auto set = testing::massey_triple(ext.dga, generic_split, h[static_cast<std::size_t>(x)],
                                                  h[static_cast<std::size_t>(y)], h[static_cast<std::size_t>(z)]);
                REQUIRE(set);
                int sign = sign_of_parity(H.degree(y) + 1);
                CHECK(set->contains(sign * m.minimal->m(3).at({x, y, z})));
                CHECK(set->contains(sign * generic.minimal->m(3).at({x, y, z})));
                ++compared;
            }
    CHECK(compared > 0);
}

TEST_CASE("zero omega: fully formal") {
    Dga t4 = testing::torus(4);
    auto model = formal_extension_minimal_model(t4, Vector{}, 4);
    CHECK(model.ideal.empty());
    CHECK(model.kernel_of_L.size() == 16);
    for (int p = 3; p <= 4; ++p) CHECK(model.transfer.minimal->m(p).is_zero());
    CHECK(model.transfer.morphism->f(2).is_zero());
    CHECK_THROWS_AS(formal_extension_minimal_model(testing::kodaira_thurston(), Vector{}, 3), InvalidInput);
    CHECK_THROWS_AS(formal_extension_minimal_model(t4, t4.element("e1"), 3), InvalidInput);
}

TEST_CASE("torus witness") {
    CHECK_THROWS_AS(torus_nonformality_witness(1), OutOfRange);
    for (int n = 2; n <= 3; ++n) {
        auto w = torus_nonformality_witness(n);
        CHECK(w.m2_vanishes);
        CHECK(w.nonzero);
        REQUIRE(w.ratio);
        CHECK(*w.ratio != 0);
        CHECK_FALSE(w.expected.is_zero());
    }
    auto w2 = torus_nonformality_witness(2);
    const auto& h = *w2.model.transfer.minimal->space();
    CHECK(w2.e2 == Vector::basis(h.index_of("[e2]")));
    CHECK(w2.lines.back() == "verdict: not formal");
}

TEST_CASE("CP^n extension is formal") {
    for (int n = 1; n <= 3; ++n) {
        auto c = cpn_formality_certificate(n, 6);
        CHECK(c.cohomology_degrees == std::vector<int>{0, 2 * n + 1});
        CHECK(c.m3_zero);
        CHECK(c.model.report.passed());
        for (int p = 3; p <= 6; ++p) CHECK(c.model.transfer.minimal->m(p).is_zero());
        REQUIRE(c.vanishing.degree_bound);
        CHECK(*c.vanishing.degree_bound == 3);
        CHECK(c.vanishing.certified_from == 3);
    }
}
