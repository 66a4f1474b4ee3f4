#include "ainf/checks.hpp"

#include "ainf/error.hpp"
#include "ainf/linalg.hpp"

#include <functional>
#include <set>

namespace ainf {

namespace {

std::string residual_witness(const MultiLinearMap& r) {
    const auto& [key, value] = *r.table().begin();
    return format_tuple(*r.source(), key) + " -> " + format_vector(*r.target(), value);
}

std::set<Tuple> support(const MultiLinearMap& r) {
    std::set<Tuple> out;
    for (const auto& [key, value] : r.table()) out.insert(key);
    return out;
}

void record(Report& report, const std::string& name, const MultiLinearMap& residual) {
    if (residual.is_zero()) report.pass(name);
    else report.fail(name, residual_witness(residual));
}

}  // namespace

Report check_stasheff(const AInfStructure& a, int up_to) {
    if (up_to > a.pmax()) throw OutOfRange("check_stasheff: up_to exceeds pmax");
    Report report;
    std::string disagreement;
    for (int p = 1; p <= up_to; ++p) {
        MultiLinearMap rm = stasheff_residual(a, p);
        MultiLinearMap rb = stasheff_residual_suspended(a, p);
        record(report, "stasheff-" + std::to_string(p), rm);
        record(report, "stasheff-b-" + std::to_string(p), rb);
        if (disagreement.empty() && support(rm) != support(rb)) disagreement = "arity " + std::to_string(p);
    }
    if (disagreement.empty()) report.pass("stasheff-agreement");
    else report.fail("stasheff-agreement", disagreement);
    return report;
}

Report check_morphism(const AInfMorphism& f, int up_to) {
    if (up_to > f.pmax() || up_to > f.source()->pmax() || up_to > f.target()->pmax())
        throw OutOfRange("check_morphism: up_to exceeds pmax");
    Report report;
    std::string disagreement;
    for (int p = 1; p <= up_to; ++p) {
        MultiLinearMap rm = morphism_residual(f, p);
        MultiLinearMap rb = morphism_residual_suspended(f, p);
        record(report, "morphism-" + std::to_string(p), rm);
        record(report, "morphism-b-" + std::to_string(p), rb);
        if (disagreement.empty() && support(rm) != support(rb)) disagreement = "arity " + std::to_string(p);
    }
    if (disagreement.empty()) report.pass("morphism-agreement");
    else report.fail("morphism-agreement", disagreement);
    return report;
}

namespace {

bool contains(const Tuple& t, BasisIndex u) { return std::find(t.begin(), t.end(), u) != t.end(); }

void unit_tuples(Report& report, const std::string& name, const MultiLinearMap& m, BasisIndex unit) {
    for (const auto& [key, value] : m.table())
        if (contains(key, unit)) {
            report.fail(name, format_tuple(*m.source(), key) + " -> " + format_vector(*m.target(), value));
            return;
        }
    report.pass(name);
}

}  // namespace

Report check_strict_unitality(const AInfStructure& a, BasisIndex unit) {
    Report report;
    const GradedSpace& space = *a.space();
    if (unit < 0 || static_cast<std::size_t>(unit) >= space.dim()) throw MalformedInput("unit index out of range");
    if (space.degree(unit) != 0) {
        report.fail("unit-degree", space.label(unit));
        return report;
    }
    Vector d1 = a.m(1).at({unit});
    if (d1.is_zero()) report.pass("unit-closed");
    else report.fail("unit-closed", format_vector(space, d1));

    if (a.pmax() >= 2) {
        std::string witness;
        for (std::size_t i = 0; i < space.dim() && witness.empty(); ++i) {
            auto x = static_cast<BasisIndex>(i);
            if (!(a.m(2).at({unit, x}) == Vector::basis(x)) || !(a.m(2).at({x, unit}) == Vector::basis(x)))
                witness = "(" + space.label(x) + ")";
        }
        if (witness.empty()) report.pass("unit-m2");
        else report.fail("unit-m2", witness);
    }
    for (int p = 3; p <= a.pmax(); ++p) unit_tuples(report, "unit-m" + std::to_string(p), a.m(p), unit);
    return report;
}

Report check_strict_unitality(const AInfMorphism& f, BasisIndex source_unit, BasisIndex target_unit) {
    Report report;
    Vector f1 = f.f(1).at({source_unit});
    if (f1 == Vector::basis(target_unit)) report.pass("unit-f1");
    else report.fail("unit-f1", format_vector(*f.target()->space(), f1));
    for (int p = 2; p <= f.pmax(); ++p) unit_tuples(report, "unit-f" + std::to_string(p), f.f(p), source_unit);
    return report;
}

Scalar star_functional(const PDStructure& pd, const Vector& v) {
    for (const auto& [i, c] : v)
        if (i != pd.fundamental) throw MalformedInput("star functional applied outside the top class");
    return v.coeff(pd.fundamental);
}

std::map<BasisIndex, Vector> derive_dual_basis(const AInfStructure& h, int top_degree, BasisIndex fundamental) {
    const GradedSpace& space = *h.space();
    const MultiLinearMap& b2 = h.b(2);
    std::map<BasisIndex, Vector> out;
    for (int t : space.degrees()) {
        const auto& xs = space.in_degree(t);
        const auto& es = space.in_degree(top_degree - t);
        if (xs.size() != es.size())
            throw InvalidInput("degrees " + std::to_string(t) + " and " + std::to_string(top_degree - t) +
                               " have different dimensions");
        Matrix pairing(es.size(), xs.size());
        for (std::size_t u = 0; u < es.size(); ++u)
            for (std::size_t v = 0; v < xs.size(); ++v) {
                Vector val = b2.at({es[u], xs[v]});
                for (const auto& [i, c] : val)
                    if (i != fundamental) throw InvalidInput("pairing leaves the top class");
                pairing(u, v) = val.coeff(fundamental);
            }
        Matrix inv;
        try {
            inv = pairing.inverse();
        } catch (const InvalidInput&) {
            throw InvalidInput("degenerate pairing between degrees " + std::to_string(t) + " and " +
                               std::to_string(top_degree - t));
        }
        // Rows of the inverse give y_v = Σ_u C_{vu} e_u with C·P = I.
        for (std::size_t v = 0; v < xs.size(); ++v) {
            Vector y;
            for (std::size_t u = 0; u < es.size(); ++u) y.add_term(es[u], inv(v, u));
            out[xs[v]] = std::move(y);
        }
    }
    return out;
}

std::pair<int, Tuple> sigma_permute(const GradedSpace& suspended, const Tuple& t) {
    if (t.empty()) return {1, t};
    long long n = 0;
    for (auto i : t) n += suspended.degree(i);
    long long first = suspended.degree(t.front());
    Tuple out(t.begin() + 1, t.end());
    out.push_back(t.front());
    return {sign_of_parity(first * (n - first)), out};
}

std::pair<int, Tuple> sigma_power(const GradedSpace& suspended, const Tuple& t, int a) {
    int sign = 1;
    Tuple cur = t;
    for (int i = 0; i < a; ++i) {
        auto [s, next] = sigma_permute(suspended, cur);
        sign *= s;
        cur = std::move(next);
    }
    return {sign, cur};
}

Report check_pd_cyclic(const PDStructure& pd, int up_to) {
    const AInfStructure& a = *pd.structure;
    const GradedSpace& space = *a.space();
    const GradedSpace& sspace = *a.suspended_space();
    const int N = pd.top_degree;
    Report report;

    if (a.minimal()) report.pass("pd-minimal");
    else report.fail("pd-minimal", residual_witness(a.m(1)));

    {
        std::string witness;
        for (int d : space.degrees())
            if (d < 0 || d > N) {
                witness = "degree " + std::to_string(d);
                break;
            }
        if (witness.empty()) report.pass("pd-range");
        else report.fail("pd-range", witness);
    }
    {
        auto dims = space.dims();
        std::string witness;
        if (dims[0] != 1) witness = "dim H^0 = " + std::to_string(dims[0]);
        else if (dims[N] != 1) witness = "dim H^" + std::to_string(N) + " = " + std::to_string(dims[N]);
        else if (space.degree(pd.fundamental) != N) witness = "fundamental class not in top degree";
        if (witness.empty()) report.pass("pd-top-classes");
        else report.fail("pd-top-classes", witness);
    }
    {
        if (pd.dual.empty()) throw MalformedInput("PD structure without dual basis");
        std::string witness;
        const MultiLinearMap& b2 = a.b(2);
        for (int t : space.degrees()) {
            for (auto u : space.in_degree(t)) {
                auto it = pd.dual.find(u);
                if (it == pd.dual.end()) throw MalformedInput("missing dual of '" + space.label(u) + "'");
                for (auto v : space.in_degree(t)) {
                    Vector val;
                    for (const auto& [e, c] : it->second) val.axpy(c, b2.at({e, v}));
                    Vector want = u == v ? Vector::basis(pd.fundamental) : Vector{};
                    if (!(val == want) && witness.empty())
                        witness = "(" + space.label(u) + "*, " + space.label(v) + ") -> " + format_vector(sspace, val);
                }
            }
        }
        if (witness.empty()) report.pass("pd-duality");
        else report.fail("pd-duality", witness);
    }

    // σ's sign depends only on the degree sequence: one representative per
    // sequence covers every tuple.
    {
        std::vector<BasisIndex> reps;
        for (int d : sspace.degrees()) reps.push_back(sspace.in_degree(d).front());
        std::string witness;
        for (int p = 1; p <= up_to && witness.empty(); ++p) {
            Tuple t(static_cast<std::size_t>(p));
            std::function<void(std::size_t)> rec = [&](std::size_t j) {
                if (!witness.empty()) return;
                if (j == t.size()) {
                    auto [sign, back] = sigma_power(sspace, t, p);
                    if (sign != 1 || back != t) witness = format_tuple(sspace, t);
                    return;
                }
                for (auto r : reps) {
                    t[j] = r;
                    rec(j + 1);
                }
            };
            if (!reps.empty()) rec(0);
        }
        if (witness.empty()) report.pass("sigma-order");
        else report.fail("sigma-order", witness);
    }

    for (int p = 2; p <= up_to; ++p) {
        // Σ_a b_p σ^a, accumulated from the entries of b_p: if σ^c(key) = e·T
        // then σ^{p−c}(T) = e·key.
        MultiLinearMap cyclic(a.suspended_space(), a.suspended_space(), p, 1);
        for (const auto& [key, value] : a.b(p).table())
            for (int c = 0; c < p; ++c) {
                auto [e, t] = sigma_power(sspace, key, c);
                cyclic.add(t, value, e);
            }
        record(report, "pd-cyclic-" + std::to_string(p), cyclic);
    }
    return report;
}

}  // namespace ainf
