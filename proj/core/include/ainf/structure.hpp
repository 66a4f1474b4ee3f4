#pragma once

#include "ainf/dga.hpp"
#include "ainf/graded.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace ainf {

/// Upper bound on entries of any intermediate table built by the
/// composition kernels; exceeding it throws ResourceLimit.
void set_tuple_budget(std::size_t budget);
std::size_t tuple_budget();

/// Worker threads for the composition kernels (1 = serial). Results do not
/// depend on this value.
void set_parallelism(int jobs);
int parallelism();

/// g ∘ (1^{⊗r} ⊗ h ⊗ 1^{⊗t}), t = arity(g) − r − 1, with the Koszul sign
/// (−1)^{|h|·(|x_1|+…+|x_r|)}. h must be an endomorphism-type map on the
/// source space of g.
MultiLinearMap insert_at(const MultiLinearMap& g, int r, const MultiLinearMap& h);

/// g ∘ (f_1 ⊗ … ⊗ f_r) with the Koszul sign (−1)^{Σ_j |f_j|·(degrees of the
/// inputs consumed by f_1..f_{j−1})}. All f_j share a source; their target is
/// the source of g.
MultiLinearMap tensor_compose(const MultiLinearMap& g, const std::vector<const MultiLinearMap*>& fs);

/// Compositions of p into r positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int p, int r);

/// Family m_1..m_pmax with |m_p| = 2 − p. Unset operations are zero.
class AInfStructure {
public:
    explicit AInfStructure(SpacePtr space, int pmax = 6, std::optional<BasisIndex> unit = std::nullopt);
    /// m_1 = d, m_2 = product, everything else zero.
    static AInfStructure from_dga(const Dga& a, int pmax = 6);

    const SpacePtr& space() const { return space_; }
    int pmax() const { return pmax_; }
    const std::optional<BasisIndex>& unit() const { return unit_; }
    void set_unit(std::optional<BasisIndex> u) { unit_ = u; }

    /// Throws OutOfRange outside 1..pmax.
    const MultiLinearMap& m(int p) const;
    /// Checks arity, degree shift and spaces (MalformedInput).
    void set(int p, MultiLinearMap op);
    bool minimal() const { return m(1).is_zero(); }

    const SpacePtr& suspended_space() const { return sspace_; }
    /// b_p on SA, derived on first use and memoized.
    const MultiLinearMap& b(int p) const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::unique_ptr<MultiLinearMap>> b;
    };

    SpacePtr space_;
    SpacePtr sspace_;
    int pmax_;
    std::optional<BasisIndex> unit_;
    std::vector<MultiLinearMap> ops_;
    std::shared_ptr<Cache> cache_;
};

using StructurePtr = std::shared_ptr<const AInfStructure>;

/// Family f_1..f_pmax with |f_p| = 1 − p between two structures.
class AInfMorphism {
public:
    AInfMorphism(StructurePtr source, StructurePtr target, int pmax);

    const StructurePtr& source() const { return source_; }
    const StructurePtr& target() const { return target_; }
    int pmax() const { return pmax_; }

    const MultiLinearMap& f(int p) const;
    void set(int p, MultiLinearMap op);

    /// (sf)_p : (SA)^{⊗p} → SB, derived on demand.
    MultiLinearMap sf(int p) const;

private:
    StructurePtr source_;
    StructurePtr target_;
    int pmax_;
    std::vector<MultiLinearMap> ops_;
};

/// Suspension of one map A^{⊗n} → B of shift σ into (SA)^{⊗n} → SB of shift
/// σ + n − 1: (s·)(sa_1..sa_n) = (−1)^{Σ_i (n−i)|a_i|} s(·)(a_1..a_n).
MultiLinearMap suspend_map(const MultiLinearMap& m, const SpacePtr& ssource, const SpacePtr& starget);
/// Exact inverse of suspend_map.
MultiLinearMap desuspend_map(const MultiLinearMap& b, const SpacePtr& source, const SpacePtr& target);

struct SuspendedStructure {
    SpacePtr space;                 // SA
    std::vector<MultiLinearMap> b;  // b[p-1]
};

SuspendedStructure suspend(const AInfStructure& a);
AInfStructure desuspend(const SuspendedStructure& s, const SpacePtr& space, std::optional<BasisIndex> unit = std::nullopt);

/// Signed terms of the arity-p Stasheff identity in the m-convention;
/// zero exactly when the identity holds at arity p.
MultiLinearMap stasheff_residual(const AInfStructure& a, int p);
/// Sign-free identity Σ b(1⊗b⊗1) on SA.
MultiLinearMap stasheff_residual_suspended(const AInfStructure& a, int p);

/// LHS − RHS of the arity-p morphism identity (m-convention).
MultiLinearMap morphism_residual(const AInfMorphism& f, int p);
/// Σ (sf)(1⊗b^A⊗1) − Σ b^B((sf)⊗…⊗(sf)).
MultiLinearMap morphism_residual_suspended(const AInfMorphism& f, int p);

}  // namespace ainf
