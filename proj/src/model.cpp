#include "mwec/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mwec {

long long Election::voter_count() const {
  long long n = 0;
  if (kind == BallotKind::Rankings) {
    for (const auto& r : rankings) n += r.weight;
  } else {
    for (const auto& b : approvals) n += b.weight;
  }
  return n;
}

std::size_t Election::group_count() const {
  return kind == BallotKind::Rankings ? rankings.size() : approvals.size();
}

long long Election::group_weight(std::size_t g) const {
  return kind == BallotKind::Rankings ? rankings[g].weight : approvals[g].weight;
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) labels.push_back("c" + std::to_string(i));
  return labels;
}

static Election finish(Election e) {
  if (e.labels.empty()) e.labels = default_labels(e.m);
  auto problems = validate(e);
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid election:";
    for (const auto& p : problems) msg << " [" << p << "]";
    throw Error(Errc::InvalidArgument, msg.str());
  }
  return e;
}

Election Election::from_rankings(int m, std::vector<Ranking> profile,
                                 std::vector<std::string> labels) {
  Election e;
  e.m = m;
  e.kind = BallotKind::Rankings;
  e.rankings = std::move(profile);
  e.labels = std::move(labels);
  return finish(std::move(e));
}

Election Election::from_approvals(int m, std::vector<ApprovalBallot> profile,
                                  std::vector<std::string> labels) {
  Election e;
  e.m = m;
  e.kind = BallotKind::Approval;
  e.approvals = std::move(profile);
  for (auto& b : e.approvals) std::sort(b.approved.begin(), b.approved.end());
  e.labels = std::move(labels);
  return finish(std::move(e));
}

bool Committee::contains(CandidateId c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

Committee Committee::of(std::vector<CandidateId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw Error(Errc::InvalidArgument, "committee contains a duplicate candidate");
  if (ids.empty()) throw Error(Errc::InvalidArgument, "committee is empty");
  return Committee{std::move(ids)};
}

int position(const Ranking& r, CandidateId c) {
  for (std::size_t i = 0; i < r.order.size(); ++i)
    if (r.order[i] == c) return static_cast<int>(i) + 1;
  throw Error(Errc::InvalidCandidate,
              "candidate id " + std::to_string(c) + " does not appear in the ranking");
}

Election project(const Election& e, const std::vector<CandidateId>& keep) {
  if (keep.empty()) throw Error(Errc::InvalidArgument, "projection set is empty");
  std::vector<CandidateId> sorted(keep);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (CandidateId c : sorted)
    if (c < 0 || c >= e.m)
      throw Error(Errc::InvalidArgument,
                  "projection id " + std::to_string(c) + " out of range");

  std::vector<int> remap(e.m, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) remap[sorted[i]] = static_cast<int>(i);

  Election out;
  out.m = static_cast<int>(sorted.size());
  out.kind = e.kind;
  for (CandidateId c : sorted) out.labels.push_back(e.labels[c]);

  if (e.kind == BallotKind::Rankings) {
    for (const auto& r : e.rankings) {
      Ranking nr;
      nr.weight = r.weight;
      for (CandidateId c : r.order)
        if (remap[c] >= 0) nr.order.push_back(remap[c]);
      out.rankings.push_back(std::move(nr));
    }
  } else {
    for (const auto& b : e.approvals) {
      ApprovalBallot nb;
      nb.weight = b.weight;
      for (CandidateId c : b.approved)
        if (remap[c] >= 0) nb.approved.push_back(remap[c]);
      std::sort(nb.approved.begin(), nb.approved.end());
      out.approvals.push_back(std::move(nb));
    }
  }
  return out;
}

std::vector<std::string> validate(const Election& e) {
  std::vector<std::string> out;
  auto report = [&out](const std::string& s) { out.push_back(s); };

  if (e.m < 1) report("candidate count m must be at least 1");
  if (!e.labels.empty()) {
    if (static_cast<int>(e.labels.size()) != e.m)
      report("label list size differs from m");
    std::set<std::string> seen;
    for (const auto& l : e.labels)
      if (!seen.insert(l).second) report("duplicate candidate label '" + l + "'");
  }

  if (e.kind == BallotKind::Rankings) {
    if (!e.approvals.empty()) report("ranking election carries approval ballots");
    if (e.rankings.empty()) report("profile is empty");
    for (std::size_t i = 0; i < e.rankings.size(); ++i) {
      const auto& r = e.rankings[i];
      std::string at = "ranking " + std::to_string(i);
      if (r.weight < 1) report(at + ": weight must be positive");
      if (static_cast<int>(r.order.size()) != e.m)
        report(at + ": lists " + std::to_string(r.order.size()) + " of " +
               std::to_string(e.m) + " candidates");
      std::vector<int> count(std::max(e.m, 0), 0);
      for (CandidateId c : r.order) {
        if (c < 0 || c >= e.m) {
          report(at + ": id " + std::to_string(c) + " out of range");
        } else if (++count[c] == 2) {
          report(at + ": duplicate candidate " + std::to_string(c));
        }
      }
    }
  } else {
    if (!e.rankings.empty()) report("approval election carries rankings");
    if (e.approvals.empty()) report("profile is empty");
    for (std::size_t i = 0; i < e.approvals.size(); ++i) {
      const auto& b = e.approvals[i];
      std::string at = "ballot " + std::to_string(i);
      if (b.weight < 1) report(at + ": weight must be positive");
      std::set<CandidateId> seen;
      for (CandidateId c : b.approved) {
        if (c < 0 || c >= e.m)
          report(at + ": id " + std::to_string(c) + " out of range");
        else if (!seen.insert(c).second)
          report(at + ": duplicate candidate " + std::to_string(c));
      }
    }
  }
  return out;
}

void require_valid_committee(const Election& e, const Committee& w) {
  if (w.members.empty()) throw Error(Errc::InvalidArgument, "committee is empty");
  if (w.k() > e.m)
    throw Error(Errc::InvalidArgument, "committee larger than the candidate set");
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    CandidateId c = w.members[i];
    if (c < 0 || c >= e.m)
      throw Error(Errc::InvalidArgument,
                  "committee member " + std::to_string(c) + " out of range");
    if (i > 0 && w.members[i - 1] >= c)
      throw Error(Errc::InvalidArgument, "committee members must be sorted and distinct");
  }
}

void require_rankings(const Election& e) {
  if (e.kind != BallotKind::Rankings)
    throw Error(Errc::WrongBallotType, "operation requires a ranking election");
}

void require_approvals(const Election& e) {
  if (e.kind != BallotKind::Approval)
    throw Error(Errc::WrongBallotType, "operation requires an approval election");
}

}  // namespace mwec
