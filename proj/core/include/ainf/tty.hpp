#pragma once

#include "ainf/dga.hpp"
#include "ainf/linalg.hpp"
#include "ainf/report.hpp"
#include "ainf/structure.hpp"

#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace ainf {

/// Exterior algebra on its degree-1 elements e_1..e_2n with a constant
/// nondegenerate degree-2 element ω = Σ_{i<j} W_ij e_i e_j.
class SymplecticModel {
public:
    /// InvalidInput unless the algebra is exterior on its degree-1 part
    /// (dimension 2^{2n}, generated in degree 1), ω is closed of degree 2
    /// and W is invertible.
    SymplecticModel(Dga dga, Vector omega);

    const Dga& dga() const { return dga_; }
    const Vector& omega() const { return omega_; }
    int n() const { return n_; }
    /// Degree-1 basis indices, in basis order.
    const std::vector<BasisIndex>& generators() const { return generators_; }
    /// W_ij = ι_j ι_i ω and its inverse.
    const Matrix& pairing() const { return pairing_; }
    const Matrix& inverse_pairing() const { return inverse_; }
    /// ι_i, the derivation of degree −1 with ι_i(e_j) = δ_ij.
    const GradedLinearMap& interior(std::size_t i) const { return interior_[i]; }

private:
    Dga dga_;
    Vector omega_;
    int n_ = 0;
    std::vector<BasisIndex> generators_;
    Matrix pairing_;
    Matrix inverse_;
    std::vector<GradedLinearMap> interior_;
};

enum class LefschetzOp { L, Lambda, H, LInverse, StarR, Pi };

/// L, Λ, H and the operators defined through the Lefschetz decomposition.
class LefschetzContext {
public:
    explicit LefschetzContext(SymplecticModel model);

    const SymplecticModel& model() const { return model_; }
    int n() const { return model_.n(); }
    const SpacePtr& space() const { return model_.dga().space(); }

    const GradedLinearMap& L() const { return L_; }
    const GradedLinearMap& Lambda() const { return Lambda_; }
    const GradedLinearMap& H() const { return H_; }

    /// Basis of P^s = ker Λ ∩ Ω^s.
    const std::vector<Vector>& primitive_basis(int s) const;

    /// α = Σ_j L^j β_{k−2j}, β primitive; entries (j, β) with β ≠ 0.
    /// MalformedInput for a non-homogeneous α.
    std::vector<std::pair<int, Vector>> decompose(const Vector& alpha) const;
    Vector assemble(const std::vector<std::pair<int, Vector>>& parts) const;

    /// L^j applied j times.
    Vector L_power(int j, const Vector& alpha) const;
    Vector apply(LefschetzOp op, const Vector& alpha, int l = 0) const;

    /// d = ∂₊ + L∂₋.
    Vector partial_plus(const Vector& alpha) const;
    Vector partial_minus(const Vector& alpha) const;

    /// sl2 relations, decomposition and ∂± identities on every basis form.
    Report check_identities() const;

private:
    struct DegreeData {
        std::vector<std::pair<int, Vector>> columns;  // (j, primitive p) for L^j p
        Matrix inverse;
    };
    using Columns = std::vector<Vector>;

    Vector apply_columns(const Columns& c, const Vector& v) const;
    Columns build(const std::function<Vector(const std::vector<std::pair<int, Vector>>&)>& on_parts) const;

    SymplecticModel model_;
    GradedLinearMap L_, Lambda_, H_;
    std::map<int, std::vector<Vector>> primitive_;
    std::map<int, DegreeData> degree_;
    Columns star_, dplus_, dminus_;
    std::vector<Columns> linv_, pi_;
};

using LefschetzPtr = std::shared_ptr<const LefschetzContext>;

/// Two rows of F^lΩ^k, k = 0..n+l: the plus row in total degree k and the
/// minus row in total degree 2(n+l)+1−k.
struct FilteredComplex {
    struct Slot {
        bool plus = true;
        int form_degree = 0;
        Vector form;
    };

    LefschetzPtr context;
    int level = 0;
    SpacePtr space;
    std::vector<Slot> slots;
    /// m_1 of the complex (d₊, −∂₊∂₋ at the turn, −d₋).
    GradedLinearMap m1;
    Report report;

    int top_form_degree() const { return context->n() + level; }
    /// Coordinates of a form of F^lΩ^k in one row. InvalidInput when the form
    /// is not in F^lΩ^k.
    Vector from_form(bool plus, int k, const Vector& form) const;
    const Vector& form(BasisIndex i) const { return slots[static_cast<std::size_t>(i)].form; }

    /// Echelon basis of F^lΩ^k per k, and the space index of each pivot's
    /// row vector in the plus (true) and minus (false) rows.
    std::map<int, EchelonBasis> row_basis;
    std::map<std::pair<bool, int>, std::map<BasisIndex, BasisIndex>> slot_of_pivot;
};

FilteredComplex build_filtered_complex(LefschetzPtr context, int level);

struct TTYStructure {
    FilteredComplex complex;
    std::shared_ptr<AInfStructure> structure;
    /// m2-graded-commutative, unit items and the Stasheff identities to pmax.
    Report report;
};

TTYStructure build_tty_structure(const FilteredComplex& complex, int pmax = 5);

/// Cohomology dimensions and the m_2 rank profile of the TTY algebra against
/// the extension by θ of degree 2l+1 with dθ = ω^{l+1}.
Report compare_with_extension(LefschetzPtr context, int level);

}  // namespace ainf
