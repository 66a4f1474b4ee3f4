#include "ainf/transfer.hpp"

#include "ainf/error.hpp"

#include <set>

namespace ainf {

TransferResult begin_transfer(StructurePtr source, SplittingData s, int pmax) {
    if (pmax < 1) throw OutOfRange("pmax must be >= 1");
    if (source->pmax() < pmax) throw OutOfRange("source structure is truncated below pmax");
    if (!(s.differential() == as_linear(source->m(1))))
        throw InvalidInput("splitting does not belong to m_1 of the source");
    SpacePtr h = cohomology_space(s);
    auto minimal = std::make_shared<AInfStructure>(h, pmax);
    auto morphism = std::make_shared<AInfMorphism>(minimal, source, pmax);
    MultiLinearMap f1(h, source->space(), 1, 0);
    for (std::size_t j = 0; j < s.harmonic().size(); ++j) f1.add({static_cast<BasisIndex>(j)}, s.harmonic()[j]);
    morphism->set(1, std::move(f1));
    return TransferResult{std::move(source), std::move(minimal), std::move(morphism), std::move(s), pmax, 1};
}

MultiLinearMap compute_F_p(const TransferResult& t, int p) {
    if (p < 2 || p > t.pmax) throw OutOfRange("compute_F_p: arity out of range");
    if (t.level < p - 1)
        throw DependencyError("F_" + std::to_string(p) + " needs arities up to " + std::to_string(p - 1) +
                              ", have " + std::to_string(t.level));
    const AInfStructure& A = *t.source;
    const AInfStructure& H = *t.minimal;
    const AInfMorphism& f = *t.morphism;
    MultiLinearMap out(H.space(), A.space(), p, 2 - p);
    for (int r = 2; r <= p; ++r) {
        if (A.m(r).is_zero()) continue;
        for (const auto& parts : compositions(p, r)) {
            long long e = 0;
            std::vector<const MultiLinearMap*> fs;
            for (int j = 1; j <= r; ++j) {
                e += static_cast<long long>(r - j) * (parts[static_cast<std::size_t>(j - 1)] - 1);
                fs.push_back(&f.f(parts[static_cast<std::size_t>(j - 1)]));
            }
            out.add_map(tensor_compose(A.m(r), fs), sign_of_parity(e));
        }
    }
    for (int s = 2; s <= p - 1; ++s)
        for (int r = 0; r + s <= p; ++r) {
            int t_ = p - r - s;
            out.add_map(insert_at(f.f(r + t_ + 1), r, H.m(s)), -sign_of_parity(r + static_cast<long long>(s) * t_));
        }
    return out;
}

void transfer_step(TransferResult& t, int p) {
    MultiLinearMap F = compute_F_p(t, p);
    const SplittingData& s = t.splitting;
    MultiLinearMap mp(t.minimal->space(), t.minimal->space(), p, 2 - p);
    MultiLinearMap fp(t.minimal->space(), t.source->space(), p, 1 - p);
    for (const auto& [key, value] : F.table()) {
        auto parts = s.coordinates(value);
        if (!parts.complement.is_zero())
            throw AxiomViolation("F_" + std::to_string(p) + " is not closed at " + format_tuple(*F.source(), key));
        mp.add(key, parts.harmonic);
        // f_1 m_p − F_p = −(exact part); Q sends E_j to P_j.
        Vector q;
        for (const auto& [j, c] : parts.exact) q.axpy(-c, s.complement()[static_cast<std::size_t>(j)]);
        fp.add(key, q);
    }
    t.minimal->set(p, std::move(mp));
    t.morphism->set(p, std::move(fp));
    t.level = p;
}

TransferResult kadeishvili_transfer(const AInfStructure& a, const SplittingData& s, int pmax) {
    auto source = std::make_shared<const AInfStructure>(a);
    TransferResult t = begin_transfer(source, s, pmax);
    for (int p = 2; p <= pmax; ++p) transfer_step(t, p);
    return t;
}

TransferResult kadeishvili_transfer(const Dga& a, const SplittingData& s, int pmax) {
    return kadeishvili_transfer(AInfStructure::from_dga(a, pmax), s, pmax);
}

TransferResult strictly_unital_transfer(const AInfStructure& a, int pmax) {
    if (!a.unit()) throw InvalidInput("strictly unital transfer needs a unit");
    Vector unit = Vector::basis(*a.unit());
    if (!a.m(1).at({*a.unit()}).is_zero()) throw InvalidInput("the unit is not closed");
    std::vector<Vector> preferred{unit};
    SplittingData s = compute_splitting(as_linear(a.m(1)), preferred);
    std::optional<BasisIndex> h_unit;
    for (std::size_t j = 0; j < s.harmonic().size(); ++j)
        if (s.harmonic()[j] == unit) h_unit = static_cast<BasisIndex>(j);
    if (!h_unit) throw InvalidInput("the unit is exact");
    TransferResult t = kadeishvili_transfer(a, s, pmax);
    t.minimal->set_unit(h_unit);
    return t;
}

TransferResult strictly_unital_transfer(const Dga& a, int pmax) {
    return strictly_unital_transfer(AInfStructure::from_dga(a, pmax), pmax);
}

VanishingCertificate vanishing_profile(const AInfStructure& minimal, std::optional<int> connectivity,
                                       std::optional<int> top_degree) {
    const GradedSpace& space = *minimal.space();
    VanishingCertificate cert;
    cert.pmax = minimal.pmax();
    for (int p = 1; p <= minimal.pmax(); ++p) cert.table_zero.push_back(minimal.m(p).is_zero());

    auto degrees = space.degrees();
    int detected_top = degrees.empty() ? 0 : degrees.back();
    cert.top_degree = top_degree.value_or(detected_top);
    if (top_degree && *top_degree != detected_top)
        cert.notes.push_back("supplied top degree " + std::to_string(*top_degree) + " differs from detected " +
                             std::to_string(detected_top));
    int detected_k = 0;
    while (space.in_degree(detected_k + 1).empty() && detected_k + 1 < cert.top_degree) ++detected_k;
    cert.connectivity = detected_k;
    if (connectivity && *connectivity != detected_k) {
        if (*connectivity > detected_k)
            cert.notes.push_back("supplied connectivity " + std::to_string(*connectivity) +
                                 " is not satisfied by H; using detected " + std::to_string(detected_k));
        else {
            cert.connectivity = *connectivity;
            cert.notes.push_back("using supplied connectivity " + std::to_string(*connectivity) + " (detected " +
                                 std::to_string(detected_k) + ")");
        }
    }

    cert.strictly_unital = minimal.unit() && check_strict_unitality(minimal, *minimal.unit()).passed();
    if (!cert.strictly_unital) cert.notes.push_back("structure is not strictly unital; unit tuples are not excluded");

    // Suspended input degrees that can feed a nonzero operation.
    std::set<int> steps;
    for (std::size_t i = 0; i < space.dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        if (cert.strictly_unital && idx == *minimal.unit()) continue;
        steps.insert(space.degree(idx) - 1);
    }
    std::set<int> targets;
    for (int d : degrees) targets.insert(d - 2);  // Σ|sx| + 1 = |y| − 1

    if (!steps.empty() && *steps.begin() < 0) {
        cert.notes.push_back("a non-unit class of degree <= 0 exists; no degree bound");
    } else if (steps.empty()) {
        cert.degree_bound = 3;
    } else {
        // S_p = (S_{p−1} + steps) ∩ [0, N]; sums only grow, so values above N
        // never return. The sequence of sets is eventually periodic.
        const int cap = cert.top_degree;
        std::vector<std::set<int>> seq;
        std::map<std::set<int>, std::size_t> seen;
        std::set<int> cur{0};
        while (!seen.count(cur)) {
            seen[cur] = seq.size();
            seq.push_back(cur);
            std::set<int> next;
            for (int a : cur)
                for (int b : steps)
                    if (a + b <= cap) next.insert(a + b);
            cur = std::move(next);
        }
        std::size_t cycle_start = seen[cur];
        auto hits = [&](const std::set<int>& s) {
            for (int v : s)
                if (targets.count(v)) return true;
            return false;
        };
        bool cycle_hits = false;
        for (std::size_t i = cycle_start; i < seq.size(); ++i) cycle_hits = cycle_hits || hits(seq[i]);
        if (!cycle_hits) {
            // seq[p] holds the sums for arity p.
            std::size_t last_hit = 0;
            for (std::size_t p = 1; p < seq.size(); ++p)
                if (hits(seq[p])) last_hit = p;
            cert.degree_bound = std::max<int>(3, static_cast<int>(last_hit) + 1);
        } else {
            cert.notes.push_back("degree sums reach H periodically; no degree bound");
        }
    }
    if (cert.connectivity >= 1) {
        int l = 3;
        while (l * cert.connectivity + 1 <= cert.top_degree - 1) ++l;
        cert.connectivity_bound = l;
    }

    // Table vanishing from some l up to pmax, combined with the degree bound.
    int table_from = minimal.pmax() + 1;
    while (table_from > 1 && cert.table_zero[static_cast<std::size_t>(table_from - 2)]) --table_from;
    if (cert.degree_bound && *cert.degree_bound <= minimal.pmax() + 1)
        cert.certified_from = table_from;
    else if (cert.degree_bound)
        cert.notes.push_back("degree bound lies above pmax; arities between are unverified");
    return cert;
}

}  // namespace ainf
