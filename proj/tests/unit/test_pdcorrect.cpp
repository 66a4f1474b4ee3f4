#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf/pdcorrect.hpp"
#include "pd_instances.hpp"

using namespace ainf;

namespace {

CyclicPDInput synthetic(const AInfStructure& a, int k = 2, int l = 3) {
    return make_cyclic_pd_input(self_transfer(a, 6), k, l);
}

std::string failure(const Report& r) {
    const auto* f = r.first_failure();
    return f ? f->name + " " + f->witness : std::string();
}

}  // namespace

TEST_CASE("synthetic instances satisfy the PD conditions") {
    for (const auto& a : {testing::pd_with_m3(6), testing::pd_with_m3_m4(6)}) {
        auto in = synthetic(a);
        CHECK(in.pd.top_degree == 10);
        Report r = check_pd_cyclic(in.pd, 5);
        INFO(failure(r));
        CHECK(r.passed());
        CHECK_FALSE(in.transfer.minimal->m(3).is_zero());
    }
    CHECK(testing::pd_with_m3_m4(6).m(4).size() == 4);
}

TEST_CASE("delta on the m3 instance") {
    auto in = synthetic(testing::pd_with_m3(6));
    const auto& h = *in.transfer.minimal->suspended_space();
    auto delta = build_delta(in.pd, in.transfer.minimal->b(3), *in.transfer.morphism, 2);
    auto idx = [&](const char* l) { return h.index_of(l); };
    const auto& sa = *in.transfer.source->suspended_space();
    // T = (a1, b, b): -1 at σ^0, 0 at σ^1, +1 at σ^2, weights 1, 2/3, 1/3.
    CHECK(delta.at({idx("[a1]"), idx("[b]")}) == Scalar(-2, 3) * Vector::basis(sa.index_of("bd")));
    CHECK(delta.at({idx("[b]"), idx("[a1]")}) == Scalar(-1, 3) * Vector::basis(sa.index_of("bd")));
    CHECK(delta.at({idx("[b]"), idx("[b]")}) == Scalar(1, 3) * Vector::basis(sa.index_of("a1d")));
    CHECK(delta.size() == 3);

    Report r = verify_delta(in.pd, in.transfer.minimal->b(3), delta, *in.transfer.morphism, in.transfer.splitting, 2);
    INFO(failure(r));
    CHECK(r.passed());
    CHECK(r.find("delta-2-rows")->passed);
    CHECK(r.find("delta-2-cyclic-sum")->passed);
}

TEST_CASE("delta vanishes when b does") {
    auto in = synthetic(testing::pd_base(6));
    auto delta = build_delta(in.pd, in.transfer.minimal->b(3), *in.transfer.morphism, 2);
    CHECK(delta.is_zero());
}

TEST_CASE("a wrong delta breaks the rows") {
    auto in = synthetic(testing::pd_with_m3(6));
    auto delta = build_delta(in.pd, in.transfer.minimal->b(3), *in.transfer.morphism, 2);
    const auto& h = *in.transfer.minimal->suspended_space();
    delta.add({h.index_of("[a1]"), h.index_of("[b]")}, delta.at({h.index_of("[a1]"), h.index_of("[b]")}));
    Report r = verify_delta(in.pd, in.transfer.minimal->b(3), delta, *in.transfer.morphism, in.transfer.splitting, 2);
    CHECK_FALSE(r.find("delta-2-rows")->passed);
}

TEST_CASE("pd_correct kills m3 and m4") {
    for (const auto& a : {testing::pd_with_m3(6), testing::pd_with_m3_m4(6)}) {
        auto in = synthetic(a);
        auto r = pd_correct(in, 5);
        INFO(failure(r.report));
        CHECK(r.report.passed());
        for (int p = 3; p <= 5; ++p) CHECK(r.corrected->m(p).is_zero());
        CHECK(r.corrected->m(2) == in.transfer.minimal->m(2));
        CHECK(r.report.find("morphism-5") != nullptr);
        CHECK(r.certificate.back() == "verdict: m_p = 0 for p >= 3");
    }
    // Only the m4 instance needs the second stage.
    CHECK(pd_correct(synthetic(testing::pd_with_m3(6)), 5).delta_upper.is_zero());
    auto second = pd_correct(synthetic(testing::pd_with_m3_m4(6)), 5);
    CHECK(second.delta_upper.size() == 2);
}

TEST_CASE("pd_correct on S3 x S3 is the identity correction") {
    auto in = make_cyclic_pd_input(strictly_unital_transfer(testing::s3_times_s3(), 6), 2, 3);
    auto r = pd_correct(in, 6);
    CHECK(r.report.passed());
    CHECK(r.delta_lower.is_zero());
    CHECK(r.delta_upper.is_zero());
    for (int p = 1; p <= 6; ++p) {
        CHECK(r.corrected->m(p) == in.transfer.minimal->m(p));
        CHECK(r.morphism->f(p) == in.transfer.morphism->f(p));
    }
}

TEST_CASE("pd_correct preconditions") {
    auto a = testing::pd_with_m3(6);
    // N = 10 > (l+1)k+2 = 6 with k = 1.
    CHECK_THROWS_AS(pd_correct(synthetic(a, 1), 5), InvalidInput);
    // H^3 != 0 with k = 3.
    CHECK_THROWS_AS(pd_correct(synthetic(a, 3), 5), InvalidInput);
    CHECK_THROWS_AS(pd_correct(synthetic(a, 2, 2), 5), OutOfRange);
    CHECK_THROWS_AS(pd_correct(synthetic(a), 3), OutOfRange);
    CHECK_THROWS_AS(pd_correct(synthetic(a), 7), OutOfRange);

    // m3 on a single rotation is not cyclic.
    AInfStructure bad = testing::pd_base(6);
    MultiLinearMap m3(bad.space(), bad.space(), 3, -1);
    const auto& s = *bad.space();
    m3.set({s.index_of("a1"), s.index_of("b"), s.index_of("b")}, Vector::basis(s.index_of("mu")));
    bad.set(3, m3);
    CHECK_THROWS_AS(pd_correct(synthetic(bad), 5), InvalidInput);
}

TEST_CASE("non-orientable degree certificate") {
    auto a = testing::non_orientable_instance(6);
    auto cert = non_orientable_certificate(a, 6, 2, 3);
    INFO(failure(cert.report));
    CHECK(cert.holds);
    CHECK(cert.lines.back() == "verdict: m_p = 0 for p >= 3");

    auto wide = non_orientable_certificate(a, 12, 2, 3);
    CHECK_FALSE(wide.holds);
    CHECK_FALSE(wide.report.find("dimension-bound")->passed);

    auto pd = testing::pd_base(6);
    CHECK_FALSE(non_orientable_certificate(pd, 10, 2, 3).report.find("upper-vanishing")->passed);
}

TEST_CASE("pd_correct on the synthetic family") {
    auto family = testing::pd_family(6);
    CHECK(family.size() >= 5);
    for (const auto& [name, a] : family) {
        INFO(name);
        auto in = synthetic(a);
        auto r = pd_correct(in, 6);
        INFO(failure(r.report));
        CHECK(r.report.passed());
        CHECK((!r.delta_lower.is_zero() || !r.delta_upper.is_zero()));
    }
}
