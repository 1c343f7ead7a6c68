#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwec {

using CandidateId = int;

enum class Errc {
  InvalidArgument,
  InvalidCandidate,
  WrongBallotType,
  InfeasibleQuota,
  ResourceExhausted,
  InvalidAxis,
  InvalidInstance,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// A ranking is a complete order over all m candidates, top choice first.
// weight is a multiplicity: a weight-w ranking behaves exactly like w
// identical unit voters in every scoring operation.
struct Ranking {
  std::vector<CandidateId> order;
  long long weight = 1;

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

// approved is kept sorted ascending; an empty set is a legal ballot (such a
// voter can never be covered by any committee).
struct ApprovalBallot {
  std::vector<CandidateId> approved;
  long long weight = 1;

  friend bool operator==(const ApprovalBallot&, const ApprovalBallot&) = default;
};

enum class BallotKind { Rankings, Approval };

struct Election {
  int m = 0;
  BallotKind kind = BallotKind::Rankings;
  std::vector<Ranking> rankings;
  std::vector<ApprovalBallot> approvals;
  std::vector<std::string> labels;  // size m; defaults to c0..c{m-1}

  long long voter_count() const;          // n = sum of weights
  std::size_t group_count() const;        // number of distinct vote groups
  long long group_weight(std::size_t g) const;

  static Election from_rankings(int m, std::vector<Ranking> profile,
                                std::vector<std::string> labels = {});
  static Election from_approvals(int m, std::vector<ApprovalBallot> profile,
                                 std::vector<std::string> labels = {});

  friend bool operator==(const Election&, const Election&) = default;
};

struct Committee {
  std::vector<CandidateId> members;  // sorted ascending, no duplicates

  int k() const { return static_cast<int>(members.size()); }
  bool contains(CandidateId c) const;

  // Sorts the ids; duplicates are an invalid-argument error.
  static Committee of(std::vector<CandidateId> ids);

  friend bool operator==(const Committee&, const Committee&) = default;
  friend bool operator<(const Committee& a, const Committee& b) { return a.members < b.members; }
};

std::vector<std::string> default_labels(int m);

// 1-based rank of c in r: 1 for the top choice, m for the bottom one.
int position(const Ranking& r, CandidateId c);

// Restriction of the election to the candidates in keep (treated as a set).
// Surviving candidates are renumbered 0..|keep|-1 in ascending order of their
// old ids; relative order inside rankings and ballot weights are preserved.
Election project(const Election& e, const std::vector<CandidateId>& keep);

// Collects every invariant violation instead of stopping at the first.
// An empty result means the election is well formed.
std::vector<std::string> validate(const Election& e);

void require_valid_committee(const Election& e, const Committee& w);
void require_rankings(const Election& e);
void require_approvals(const Election& e);

}  // namespace mwec
