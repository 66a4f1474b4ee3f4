#pragma once

#include "ainf/dga.hpp"
#include "ainf/structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ainf::testing {

/// Unit 1, the given classes, a dual "<x>d" of degree N − |x| for each, and
/// mu in degree N. m_2 is the unit products plus x·xd = mu and
/// xd·x = (−1)^{|x||xd|} mu.
AInfStructure pd_base(const std::vector<std::pair<std::string, int>>& classes, int top_degree, int pmax);

/// N = 10, k = 2: a1, a2 in degree 3, b in degree 4.
AInfStructure pd_base(int pmax);

/// First assignment of {-1, 0, 1}·mu to the keys of `groups` (lexicographic)
/// with every group nonzero, such that the structure passes check_pd_cyclic,
/// Stasheff and strict unitality up to `up_to`. Throws when none exists.
AInfStructure search_cyclic(const AInfStructure& base, int arity, const std::vector<std::vector<Tuple>>& groups,
                            int up_to);

/// m_3 on the orbit of (a1, b, b).
AInfStructure pd_with_m3(int pmax);
/// pd_with_m3 plus m_4 on the orbit of (a1, a1, a1, a2).
AInfStructure pd_with_m3_m4(int pmax);

/// Named synthetic cyclic PD instances with nonzero higher products
/// (N = 10 and N = 9, k = 2).
std::vector<std::pair<std::string, AInfStructure>> pd_family(int pmax);

/// H*(S^3 × S^3) as a d = 0 dga.
Dga s3_times_s3();

/// H^0 = 1, H^3 = x, nothing else; m_2 the unit products. Read with N = 6.
AInfStructure non_orientable_instance(int pmax);

}  // namespace ainf::testing
