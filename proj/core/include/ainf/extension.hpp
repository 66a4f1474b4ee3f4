#pragma once

#include "ainf/dga.hpp"
#include "ainf/report.hpp"
#include "ainf/transfer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Ã = A ⊕ θA with dθ = ω. Basis: the basis of A in order, then θ·a for
/// each a in order (label "th" for θ·1, "th*<a>" otherwise).
struct ExtensionDga {
    Dga base;
    Vector omega;
    int theta_degree = 1;
    Dga dga;

    std::size_t base_dim() const { return base.space()->dim(); }
    BasisIndex plain(BasisIndex a) const { return a; }
    BasisIndex theta(BasisIndex a) const { return a + static_cast<BasisIndex>(base_dim()); }
    bool is_theta(BasisIndex i) const { return i >= static_cast<BasisIndex>(base_dim()); }

    /// ξ ↦ ξ and η ↦ θη.
    Vector embed(const Vector& xi) const;
    Vector theta_times(const Vector& eta) const;
    /// (ξ, η) with v = ξ + θη.
    std::pair<Vector, Vector> split(const Vector& v) const;
};

/// InvalidInput unless ω is closed and homogeneous of even degree with
/// θ_degree = |ω| − 1 (ω = 0 accepts any odd θ_degree).
ExtensionDga extend_dga(const Dga& a, const Vector& omega, int theta_degree);

struct ExtensionMorphism {
    /// Ã → B̃, g(α + θβ) = f(α) + θ f(β) − r f(β).
    GradedLinearMap g;
    /// dga-hom items for f and g, plus per-degree cohomology ranks of f* and g*.
    Report report;
};

/// Rank test: f* is an isomorphism in every degree.
Report check_quasi_isomorphism(const GradedLinearMap& f, const Dga& a, const Dga& b, const std::string& name);

/// f must be a dga morphism A → B with ω_B = f(ω_A) + dr (InvalidWitness
/// otherwise). The report carries the rank check of g*.
ExtensionMorphism extension_morphism(const GradedLinearMap& f, const ExtensionDga& a, const ExtensionDga& b,
                                     const Vector& r);

struct FormalExtensionModel {
    ExtensionDga extension;
    /// Basis of I(ω) ⊂ A (echelon rows of ω·A).
    std::vector<Vector> ideal;
    /// Complement of I(ω): unit vectors at non-pivot positions.
    std::vector<Vector> complement_of_ideal;
    std::vector<Vector> kernel_of_L;
    /// Complement of ker L: unit vectors at non-pivot positions.
    std::vector<Vector> complement_of_kernel;
    TransferResult transfer;
    /// m-vanishing, f-vanishing and θ-image items.
    Report report;
};

/// Minimal model of the extension of a d = 0 algebra; the splitting is
/// E = I(ω), C = A^C ⊕ θ ker L, P = θ A^⊥, so Q(ωβ) = θβ for β ∈ A^⊥.
FormalExtensionModel formal_extension_minimal_model(const Dga& a, const Vector& omega, int pmax);

struct TorusWitness {
    int n = 0;
    FormalExtensionModel model;
    /// H-coordinates of [y e1], [e2] and the m_3 value.
    Vector x, e2, value;
    /// Class of θ y e2.
    Vector expected;
    /// value = ratio · expected when proportional.
    std::optional<Scalar> ratio;
    bool m2_vanishes = false;
    bool nonzero = false;
    std::vector<std::string> lines;
};

/// H*(T^{2n}) with ω = Σ e_{2j−1}e_{2j}, y = e3 e5 ⋯ e_{2n−1}: evaluates
/// m_3([y e1], [e2], [e2]). OutOfRange for n < 2.
TorusWitness torus_nonformality_witness(int n, int pmax = 3);

struct CpnCertificate {
    int n = 0;
    FormalExtensionModel model;
    VanishingCertificate vanishing;
    /// Degrees carrying cohomology of the extension.
    std::vector<int> cohomology_degrees;
    bool m3_zero = false;
    std::vector<std::string> lines;
};

/// H*(CP^n) extended by θ with dθ = w.
CpnCertificate cpn_formality_certificate(int n, int pmax = 6);

}  // namespace ainf
