#pragma once

#include "ainf/checks.hpp"
#include "ainf/report.hpp"
#include "ainf/transfer.hpp"

#include <string>
#include <vector>

namespace ainf {

/// Minimal model with Poincaré duality, the transfer morphism f: H → A that
/// produced it, the connectivity k (H^i = 0 for 1 ≤ i ≤ k) and the target
/// arity l ≥ 3. `pd.structure` must be `transfer.minimal`.
struct CyclicPDInput {
    PDStructure pd;
    TransferResult transfer;
    int level = 3;
};

/// Builds the PD data (top class, dual basis) for a strictly unital transfer.
/// InvalidInput when the top degree is not one-dimensional or the pairing
/// is degenerate.
CyclicPDInput make_cyclic_pd_input(TransferResult transfer, int connectivity, int level);

/// Strictly unital transfer of a minimal structure to itself (f_1 = id),
/// for inputs that are already minimal.
TransferResult self_transfer(const AInfStructure& minimal, int pmax);

/// (sδ)_q : (SH)^{⊗q} → SA from b = b_{q+1} on SH:
///   Σ_v Σ_{j=0}^{q} (q+1−j)/(q+1) *(b σ^j(sx_1..sx_q, sx^t_v)) (sg)_1(sy_v),
/// on tuples without the unit and of total degree < N − 1; zero elsewhere.
MultiLinearMap build_delta(const PDStructure& pd, const MultiLinearMap& b, const AInfMorphism& g, int q);

/// For every tuple T = (sx_1..sx_q, sx^t_v) entering build_delta: the cyclic
/// sum Σ_a b σ^a(T) vanishes ("delta-<q>-cyclic-sum") and
/// b σ^a(T) = [b^A_2((sδ)_q ⊗ (sg)_1)(σ^a − σ^{a+1})(T)] for a = 0..q
/// ("delta-<q>-rows"). Also "delta-<q>-vanishing" and "delta-<q>-closed".
Report verify_delta(const PDStructure& pd, const MultiLinearMap& b, const MultiLinearMap& delta,
                    const AInfMorphism& g, const SplittingData& splitting, int q);

struct CorrectionResult {
    std::shared_ptr<AInfStructure> corrected;  // m''
    std::shared_ptr<AInfMorphism> morphism;    // h: (H, m'') → A
    MultiLinearMap delta_lower;                // (sδ)_{l−1}
    MultiLinearMap delta_upper;                // (sδ)_l
    int level = 3;
    int pmax = 0;
    Report report;
    std::vector<std::string> certificate;
};

/// Replaces f_{l−1} by f_{l−1} − δ_{l−1} and g_l by g_l − δ_l, retransferring
/// the higher arities, so that m''_p = 0 for l ≤ p ≤ pmax. Preconditions
/// (connectivity, N ≤ (l+1)k + 2, check_pd_cyclic to pmax, strict unitality)
/// are checked first and throw InvalidInput; OutOfRange unless
/// 3 ≤ l < pmax ≤ transfer.pmax and transfer.level ≥ l.
CorrectionResult pd_correct(const CyclicPDInput& input, int pmax);

struct DegreeCertificate {
    bool holds = false;
    Report report;
    std::vector<std::string> lines;
};

/// H^N = 0 case: with H^i = 0 for 1 ≤ i ≤ k and for i ≥ N − k, and
/// N ≤ (l+1)k + 2, every m_p with p ≥ l vanishes for degree reasons.
/// The tables up to pmax are inspected as well.
DegreeCertificate non_orientable_certificate(const AInfStructure& minimal, int top_degree, int connectivity,
                                             int level);

}  // namespace ainf
