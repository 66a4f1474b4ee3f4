#pragma once

#include "ainf/checks.hpp"
#include "ainf/splitting.hpp"
#include "ainf/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Minimal model on H with the transferring morphism f: H → A.
struct TransferResult {
    StructurePtr source;
    std::shared_ptr<AInfStructure> minimal;
    std::shared_ptr<AInfMorphism> morphism;
    SplittingData splitting;
    int pmax = 0;
    /// Arity up to which m and f are populated.
    int level = 0;
};

/// F_p from f_1..f_{p−1}, m_1..m_{p−1} on H and m^A_1..m^A_p. Throws
/// DependencyError when t.level < p − 1.
MultiLinearMap compute_F_p(const TransferResult& t, int p);

/// Sets m_p = [F_p] (class in the C basis) and f_p = Q(f_1 m_p − F_p).
/// Throws AxiomViolation when F_p is not closed.
void transfer_step(TransferResult& t, int p);

/// Level-1 data: H = span of the splitting's C, m_1 = 0, f_1 = inclusion of C.
TransferResult begin_transfer(StructurePtr source, SplittingData s, int pmax);

TransferResult kadeishvili_transfer(const AInfStructure& a, const SplittingData& s, int pmax);
TransferResult kadeishvili_transfer(const Dga& a, const SplittingData& s, int pmax);

/// Splitting whose C contains the unit; the resulting structure and
/// morphism are strictly unital. InvalidInput when there is no unit or the
/// unit is not closed or exact.
TransferResult strictly_unital_transfer(const AInfStructure& a, int pmax);
TransferResult strictly_unital_transfer(const Dga& a, int pmax);

struct VanishingCertificate {
    int pmax = 0;
    int top_degree = 0;
    int connectivity = 0;
    bool strictly_unital = false;
    /// m_p == 0 by table inspection, p = 1..pmax.
    std::vector<bool> table_zero;
    /// Smallest l ≥ 3 with m_p = 0 for every p ≥ l forced by degrees alone.
    std::optional<int> degree_bound;
    /// Smallest l ≥ 3 with pk + 1 > N − 1 (needs k ≥ 1).
    std::optional<int> connectivity_bound;
    /// Smallest l with m_p = 0 for all p ≥ l, certified by the table up to
    /// pmax plus the degree bound beyond it.
    std::optional<int> certified_from;
    std::vector<std::string> notes;
};

/// k and N are detected from H when not supplied.
VanishingCertificate vanishing_profile(const AInfStructure& minimal, std::optional<int> connectivity = std::nullopt,
                                       std::optional<int> top_degree = std::nullopt);

}  // namespace ainf
