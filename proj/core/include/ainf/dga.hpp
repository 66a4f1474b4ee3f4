#pragma once

#include "ainf/graded.hpp"
#include "ainf/report.hpp"
#include "ainf/splitting.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

/// Differential graded (commutative) algebra with its product stored as a
/// full sparse table over basis pairs. The constructor does not verify the
/// axioms; use `check_dga_axioms` or `Dga::checked`.
class Dga {
public:
    Dga(SpacePtr space, GradedLinearMap d, MultiLinearMap product, std::optional<BasisIndex> unit);

    /// Throws AxiomViolation naming the first failing axiom and witness.
    static Dga checked(SpacePtr space, GradedLinearMap d, MultiLinearMap product, std::optional<BasisIndex> unit);

    const SpacePtr& space() const { return space_; }
    const GradedLinearMap& d() const { return d_; }
    const MultiLinearMap& product() const { return product_; }
    const std::optional<BasisIndex>& unit() const { return unit_; }

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector differential(const Vector& a) const { return d_.apply(a); }
    /// Convenience: vector for a single label.
    Vector element(std::string_view label, const Scalar& c = 1) const;

private:
    SpacePtr space_;
    GradedLinearMap d_;
    MultiLinearMap product_;
    std::optional<BasisIndex> unit_;
};

struct Generator {
    std::string label;
    int degree = 1;
};

/// Σ coefficient · (ordered product of generator labels); an empty factor
/// list is the unit.
using Polynomial = std::vector<std::pair<Scalar, std::vector<std::string>>>;

/// Free graded-commutative algebra on generators, truncated above
/// `top_degree` (mandatory when an even generator is present). Basis
/// monomials are ordered by degree, then lexicographically by exponent
/// vector (higher powers of earlier generators first).
class FreeGradedAlgebra {
public:
    FreeGradedAlgebra(std::vector<Generator> generators, std::optional<int> top_degree);

    const SpacePtr& space() const { return space_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<int>& exponents(BasisIndex i) const { return exponents_[static_cast<std::size_t>(i)]; }
    std::optional<BasisIndex> monomial(const std::vector<int>& exponents) const;
    int top_degree() const { return top_degree_; }

    Vector generator(std::size_t g) const;
    Vector multiply_basis(BasisIndex a, BasisIndex b) const;
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector evaluate(const Polynomial& p) const;
    MultiLinearMap product_table() const;

    /// Leibniz extension of the values on generators (homogeneity checked).
    GradedLinearMap derivation(const std::vector<Vector>& on_generators) const;

private:
    std::vector<Generator> generators_;
    int top_degree_ = 0;
    SpacePtr space_;
    std::vector<std::vector<int>> exponents_;
    std::map<std::vector<int>, BasisIndex> index_;
};

/// Free graded-commutative dga; generators of degree >= 1, d given on
/// generators. Throws AxiomViolation naming the generator where d∘d != 0.
Dga make_free_graded_commutative_dga(const std::vector<Generator>& generators,
                                     const std::vector<std::pair<std::string, Polynomial>>& d_on_generators,
                                     std::optional<int> top_degree = std::nullopt);

/// H*(CP^n): basis 1, w, ..., w^n, d = 0.
Dga make_cpn_cohomology(int n);

/// d-degree, d², graded commutativity, Leibniz, associativity and unit law,
/// each enumerated over all basis pairs/triples.
Report check_dga_axioms(const Dga& a);

/// Cohomology as a dga with d = 0 on the harmonic representatives.
struct CohomologyRing {
    Dga ring;
    /// A -> H, equal to the class map on cocycles.
    GradedLinearMap projection;
    SplittingData splitting;
    Report representative_independence;
};

CohomologyRing cohomology_ring(const Dga& a);

/// Space of classes for a splitting: one basis element per harmonic vector,
/// labelled "[x]" when the representative is a single basis element x with
/// coefficient 1 and "[h<deg>_<k>]" otherwise.
SpacePtr cohomology_space(const SplittingData& s);

}  // namespace ainf
