#include "mwec/misrep.hpp"

#include <algorithm>

namespace mwec {

DissatisfactionFunction borda(int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "borda requires m >= 1");
  DissatisfactionFunction f;
  f.alpha.resize(m);
  for (int i = 0; i < m; ++i) f.alpha[i] = i;
  return f;
}

void require_valid_alpha(const DissatisfactionFunction& alpha, int m) {
  if (static_cast<int>(alpha.alpha.size()) != m)
    throw Error(Errc::InvalidArgument, "dissatisfaction vector size differs from m");
  if (alpha.alpha.front() < 0)
    throw Error(Errc::InvalidArgument, "dissatisfaction must be non-negative");
  if (!std::is_sorted(alpha.alpha.begin(), alpha.alpha.end()))
    throw Error(Errc::InvalidArgument, "dissatisfaction must be non-decreasing");
}

namespace {

// Best member of w for one ranking: (penalty, member), ties to smaller id.
std::pair<long long, CandidateId> best_member(const Ranking& r, const Committee& w,
                                              const DissatisfactionFunction& alpha) {
  long long best = -1;
  CandidateId who = -1;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    CandidateId c = r.order[i];
    if (!w.contains(c)) continue;
    long long pen = alpha.alpha[i];
    if (who == -1 || pen < best || (pen == best && c < who)) {
      best = pen;
      who = c;
    }
  }
  return {best, who};
}

}  // namespace

Assignment cc_best_assignment(const Election& e, const Committee& w,
                              const DissatisfactionFunction& alpha) {
  require_rankings(e);
  require_valid_committee(e, w);
  require_valid_alpha(alpha, e.m);

  Assignment a;
  a.share.resize(e.rankings.size());
  for (CandidateId c : w.members) a.load[c] = 0;
  for (std::size_t g = 0; g < e.rankings.size(); ++g) {
    auto [pen, who] = best_member(e.rankings[g], w, alpha);
    (void)pen;
    a.share[g].emplace_back(who, e.rankings[g].weight);
    a.load[who] += e.rankings[g].weight;
  }
  return a;
}

long long cc_score(const Election& e, const Committee& w,
                   const DissatisfactionFunction& alpha, Aggregation agg) {
  require_rankings(e);
  require_valid_committee(e, w);
  require_valid_alpha(alpha, e.m);

  long long total = 0;
  long long worst = 0;
  for (const auto& r : e.rankings) {
    long long pen = best_member(r, w, alpha).first;
    total += pen * r.weight;
    worst = std::max(worst, pen);
  }
  return agg == Aggregation::L1 ? total : worst;
}

long long approval_cc_score(const Election& e, const Committee& w) {
  require_approvals(e);
  require_valid_committee(e, w);

  long long uncovered = 0;
  for (const auto& b : e.approvals) {
    bool covered = std::any_of(b.approved.begin(), b.approved.end(),
                               [&w](CandidateId c) { return w.contains(c); });
    if (!covered) uncovered += b.weight;
  }
  return uncovered;
}

}  // namespace mwec
