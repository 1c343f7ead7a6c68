#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mwec/model.hpp"

namespace mwec {

// Per-rank penalty vector: alpha[i] is the dissatisfaction of a voter
// represented by the candidate at 1-based rank i+1. Must be non-decreasing
// with alpha[0] >= 0. Entries are integers so every score in the engine is
// exact; Borda is the only function the suites exercise.
struct DissatisfactionFunction {
  std::vector<long long> alpha;

  long long at_position(int pos) const { return alpha[pos - 1]; }
  friend bool operator==(const DissatisfactionFunction&, const DissatisfactionFunction&) = default;
};

DissatisfactionFunction borda(int m);
void require_valid_alpha(const DissatisfactionFunction& alpha, int m);

enum class Aggregation { L1, LInf };

// Voter-group -> representative map. share[g] lists (member, count) chunks;
// a weight-w group may split across members only under the Monroe quota, a
// best-response assignment always keeps a group whole.
struct Assignment {
  std::vector<std::vector<std::pair<CandidateId, long long>>> share;
  std::map<CandidateId, long long> load;
};

// Every voter goes to the committee member they rank best; ties broken by
// smallest candidate id. Optimal simultaneously for L1 and LInf.
Assignment cc_best_assignment(const Election& e, const Committee& w,
                              const DissatisfactionFunction& alpha);

long long cc_score(const Election& e, const Committee& w,
                   const DissatisfactionFunction& alpha, Aggregation agg);

// Weighted number of voters with no approved candidate in w (lower is better).
long long approval_cc_score(const Election& e, const Committee& w);

}  // namespace mwec
