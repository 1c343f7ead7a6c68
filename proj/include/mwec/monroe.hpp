#pragma once

#include <utility>

#include "mwec/misrep.hpp"
#include "mwec/model.hpp"

namespace mwec {

// Optimal voter->representative assignment for a fixed committee under the
// Monroe quota: every member represents floor(n/k) or ceil(n/k) voters, with
// exactly n mod k members carrying the larger load.
//
// L1 solves a transportation problem by min-cost flow (exact integer costs);
// LInf binary-searches the smallest penalty threshold whose restricted
// bipartite matching is feasible. Requires k <= n, otherwise the quota set
// {floor, ceil} would force a zero load and the call is rejected.
std::pair<Assignment, long long> monroe_optimal_assignment(const Election& e,
                                                           const Committee& w,
                                                           const DissatisfactionFunction& alpha,
                                                           Aggregation agg);

long long monroe_score(const Election& e, const Committee& w,
                       const DissatisfactionFunction& alpha, Aggregation agg);

// Minimum weighted number of voters assigned to a representative they do not
// approve, over quota-respecting assignments (0/1 edge costs, same network).
long long approval_monroe_score(const Election& e, const Committee& w);

}  // namespace mwec
