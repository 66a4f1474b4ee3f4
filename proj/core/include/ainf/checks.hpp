#pragma once

#include "ainf/report.hpp"
#include "ainf/structure.hpp"

#include <map>

namespace ainf {

/// Per arity p ≤ up_to: item "stasheff-<p>" (m-convention), item
/// "stasheff-b-<p>" (suspended, sign-free) and "stasheff-agreement" stating
/// that both paths fail on exactly the same tuples.
Report check_stasheff(const AInfStructure& a, int up_to);

/// Same layout with "morphism-<p>", "morphism-b-<p>", "morphism-agreement".
Report check_morphism(const AInfMorphism& f, int up_to);

/// m_1(1) = 0, m_2(1,x) = x = m_2(x,1), m_p = 0 on unit tuples for p ≥ 3.
Report check_strict_unitality(const AInfStructure& a, BasisIndex unit);
/// f_1(1) = 1 and f_p = 0 on unit tuples for p ≥ 2.
Report check_strict_unitality(const AInfMorphism& f, BasisIndex source_unit, BasisIndex target_unit);

/// Minimal structure with Poincaré-duality data. `dual[x]` is the element y
/// of degree N − |x| with b_2(s y_u, s x_v) = δ_{uv} sμ.
struct PDStructure {
    StructurePtr structure;
    int top_degree = 0;
    BasisIndex fundamental = 0;
    int connectivity = 0;
    std::map<BasisIndex, Vector> dual;
};

/// *: coefficient of sμ. Throws MalformedInput for a vector outside SH^N.
Scalar star_functional(const PDStructure& pd, const Vector& v);

/// Solves the pairing matrices degree by degree for the dual basis of the
/// full H-basis. Throws InvalidInput when a pairing is degenerate.
std::map<BasisIndex, Vector> derive_dual_basis(const AInfStructure& h, int top_degree, BasisIndex fundamental);

/// σ(sα_1..sα_p) = (−1)^{|sα_1|(n−|sα_1|)} (sα_2..sα_p, sα_1), n the total
/// suspended degree. Degrees are read from the suspended space.
std::pair<int, Tuple> sigma_permute(const GradedSpace& suspended, const Tuple& t);
/// σ^a (a ≥ 0).
std::pair<int, Tuple> sigma_power(const GradedSpace& suspended, const Tuple& t, int a);

/// Conditions 1–4 ("pd-range", "pd-top-classes", "pd-duality",
/// "pd-cyclic-<p>") plus "sigma-order" (σ^p = 1 on every tuple checked).
Report check_pd_cyclic(const PDStructure& pd, int up_to);

}  // namespace ainf
