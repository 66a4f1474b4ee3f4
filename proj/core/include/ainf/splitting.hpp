#pragma once

#include "ainf/graded.hpp"
#include "ainf/linalg.hpp"

#include <span>

namespace ainf {

/// Decomposition A = E ⊕ C ⊕ P for a differential d, with the homotopy
/// Q: E -> P. The exact basis is always E_i = d(P_i), so Q(E_i) = P_i.
///
/// C projects isomorphically onto cohomology; `class_coordinates` gives the
/// coordinates of a closed vector's class in the C basis.
class SplittingData {
public:
    struct Parts {
        Vector exact;       // coefficients over exact()
        Vector harmonic;    // coefficients over harmonic()
        Vector complement;  // coefficients over complement()
    };

    /// Validates every invariant (d(C) = 0, d injective on P, E ⊕ C ⊕ P = A
    /// degree by degree) and throws InvalidInput when one fails.
    static SplittingData from_bases(GradedLinearMap d, std::vector<Vector> harmonic, std::vector<Vector> complement);

    const SpacePtr& space() const { return d_.source(); }
    const GradedLinearMap& differential() const { return d_; }
    const std::vector<Vector>& exact() const { return exact_; }
    const std::vector<Vector>& harmonic() const { return harmonic_; }
    const std::vector<Vector>& complement() const { return complement_; }

    Parts coordinates(const Vector& v) const;

    /// Q(v) for v in E. Throws NotExact otherwise.
    Vector homotopy(const Vector& v) const;
    /// Q extended by zero on C ⊕ P.
    Vector homotopy_of_exact_part(const Vector& v) const;
    /// C-coordinates of v; throws NotExact-style InvalidInput if v is not closed.
    Vector class_coordinates(const Vector& closed) const;
    /// Harmonic representative Σ c_j C_j for C-coordinates c.
    Vector representative(const Vector& class_coords) const;

    /// Cohomology dimension per degree (= dim C per degree).
    std::map<int, std::size_t> betti() const;
    int harmonic_degree(std::size_t j) const { return harmonic_degree_[j]; }

private:
    struct Block {
        std::vector<BasisIndex> basis;                   // ambient indices of this degree
        std::vector<std::pair<int, std::size_t>> slots;  // (0=E,1=C,2=P, list index) per column
        Matrix inverse;                                  // coordinates = inverse * dense(v)
    };

    explicit SplittingData(GradedLinearMap d) : d_(std::move(d)) {}

    GradedLinearMap d_;
    std::vector<Vector> exact_;
    std::vector<Vector> harmonic_;
    std::vector<Vector> complement_;
    std::vector<int> harmonic_degree_;
    std::map<int, Block> blocks_;
};

/// Echelon splitting of d (degree +1, d∘d = 0, else AxiomViolation).
///   P = unit vectors at the pivot columns of each block of d;
///   E = d(P);
///   C = greedy complement of E inside ker d, scanning `preferred` closed
///       vectors first and then the echelon nullspace basis.
SplittingData compute_splitting(const GradedLinearMap& d, std::span<const Vector> preferred = {});

/// Q on a vector of E (free-function form of SplittingData::homotopy).
Vector apply_homotopy_Q(const SplittingData& s, const Vector& v);

}  // namespace ainf
