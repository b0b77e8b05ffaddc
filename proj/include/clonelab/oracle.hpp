#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "clonelab/cloning.hpp"
#include "clonelab/cost.hpp"
#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/rng.hpp"
#include "clonelab/rules.hpp"

namespace clonelab {

struct SearchCaps {
  long long max_extra_clones = 4;
  std::uint64_t max_assignments = 1'000'000;
};

struct OracleResult {
  enum class Status { Yes, No, CapExceeded };
  Status status = Status::No;
  std::optional<CloningVector> vector;
  Cost cost = 0;
  std::optional<OrderingAssignment> witness;  // ZeroPlus hits
  bool all_orderings = false;                 // One hits
  std::uint64_t vectors_checked = 0;
  std::uint64_t vectors_skipped = 0;
  std::uint64_t assignments_checked = 0;
  std::string note;
};

namespace detail {

inline void enumerate_vectors(int m, long long max_extra,
                              std::vector<CloningVector>& out) {
  CloningVector v(m, 1);
  // compositions of every extra total 0..max_extra over m slots
  auto rec = [&](auto&& self, int slot, long long left) -> void {
    if (slot == m - 1) {
      v[slot] = 1 + static_cast<int>(left);
      out.push_back(v);
      return;
    }
    for (long long take = 0; take <= left; ++take) {
      v[slot] = 1 + static_cast<int>(take);
      self(self, slot + 1, left - take);
    }
    v[slot] = 1;
  };
  for (long long extra = 0; extra <= max_extra; ++extra) rec(rec, 0, extra);
}

}  // namespace detail

// Exhaustive ground truth within caps: tries every cloning vector with at
// least one and at most max_extra_clones extra clones, cheapest first, and
// decides each by full ordering enumeration. Vectors whose ordering space
// exceeds max_assignments are skipped and counted, not treated as failures.
inline OracleResult brute_force_search(const Election& e, const Rule& r, int c,
                                       SuccessModeKind mode,
                                       const CostFunction& costs,
                                       Cost budget = kInfiniteCost,
                                       const SearchCaps& caps = SearchCaps{}) {
  if (mode == SuccessModeKind::Threshold)
    throw Unsupported("the oracle decides the 0plus and 1 modes only");
  if (c < 0 || c >= e.num_candidates())
    throw UnknownCandidate("candidate index out of range");
  if (caps.max_extra_clones < 0 || caps.max_assignments == 0)
    throw InvalidSize("search caps must be positive");
  OracleResult res;
  if (is_winner(e, r, c)) {
    res.status = OracleResult::Status::No;
    res.note = "preferred candidate already wins";
    return res;
  }
  std::vector<CloningVector> vecs;
  detail::enumerate_vectors(e.num_candidates(), caps.max_extra_clones, vecs);
  std::vector<std::tuple<Cost, long long, CloningVector>> order;
  order.reserve(vecs.size());
  for (auto& v : vecs) {
    Cost cost = cost_of(costs, v);
    if (!affordable(cost, budget)) continue;
    order.emplace_back(cost, total_clones(v), std::move(v));
  }
  std::sort(order.begin(), order.end());
  const long long m = e.num_candidates();
  std::uint64_t nontrivial_checked = 0;
  for (const auto& [cost, total, v] : order) {
    if (assignment_space(e, v, caps.max_assignments) > caps.max_assignments) {
      ++res.vectors_skipped;
      continue;
    }
    auto chk = check_success_exact(e, r, c, v, mode, caps.max_assignments);
    ++res.vectors_checked;
    if (total > m) ++nontrivial_checked;
    res.assignments_checked += chk.assignments_checked;
    if (chk.outcome == ExactCheckResult::Outcome::Success) {
      res.status = OracleResult::Status::Yes;
      res.vector = v;
      res.cost = cost;
      if (mode == SuccessModeKind::ZeroPlus) res.witness = chk.witness;
      else res.all_orderings = true;
      return res;
    }
  }
  if (nontrivial_checked == 0 && res.vectors_skipped > 0) {
    res.status = OracleResult::Status::CapExceeded;
    res.note = "every nontrivial vector exceeded the assignment cap";
    return res;
  }
  res.status = OracleResult::Status::No;
  res.note = "no affordable vector within caps succeeds (" +
             std::to_string(res.vectors_checked) + " checked, " +
             std::to_string(res.vectors_skipped) + " skipped)";
  return res;
}

namespace detail {

// pos is row-major: pos[p * k + i] is clone i's rank in order p.
inline bool pnk_success_pos(const std::vector<int>& pos, int n, int k) {
  for (int i = 0; i < k; ++i) {
    bool covered = false;
    for (int j = 0; j < k && !covered; ++j) {
      if (j == i) continue;
      int cnt = 0;
      for (int p = 0; p < n; ++p)
        cnt += pos[static_cast<std::size_t>(p) * k + j] <
               pos[static_cast<std::size_t>(p) * k + i];
      covered = cnt >= n - 1;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace detail

// Success predicate on explicit clone orders: perms[p][r] is the clone at
// rank r in order p. Success means every clone has some other clone that
// precedes it in all orders or all but one. Identical orders always fail:
// nothing ever precedes the shared front clone.
inline bool pnk_success(const std::vector<std::vector<int>>& perms, int k) {
  const int n = static_cast<int>(perms.size());
  if (n < 1 || k < 1) throw InvalidSize("need n >= 1 orders and k >= 1 clones");
  std::vector<int> pos(static_cast<std::size_t>(n) * k);
  for (int p = 0; p < n; ++p) {
    if (static_cast<int>(perms[p].size()) != k)
      throw InvalidSize("order length does not match the clone count");
    for (int r = 0; r < k; ++r)
      pos[static_cast<std::size_t>(p) * k + perms[p][r]] = r;
  }
  return detail::pnk_success_pos(pos, n, k);
}

// One random trial of the clone-coverage experiment: draw n uniform orders
// of k clones and apply the success predicate.
inline bool pnk_trial(int n, int k, SplitMix64& g) {
  std::vector<int> pos(static_cast<std::size_t>(n) * k), perm(k);
  for (int p = 0; p < n; ++p) {
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, g);
    for (int r = 0; r < k; ++r) pos[static_cast<std::size_t>(p) * k + perm[r]] = r;
  }
  return detail::pnk_success_pos(pos, n, k);
}

struct PnkResult {
  int n = 0;
  int k = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  Rational estimate;
};

inline PnkResult pnk_experiment(int n, int k, std::uint64_t trials,
                                std::uint64_t seed) {
  if (n < 1 || k < 1) throw InvalidSize("need n >= 1 voters and k >= 1 clones");
  if (trials == 0) throw InvalidSize("need at least one trial");
  PnkResult res;
  res.n = n;
  res.k = k;
  res.trials = trials;
  res.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 g = trial_stream(seed, t);
    if (pnk_trial(n, k, g)) ++res.successes;
  }
  res.estimate = Rational(static_cast<std::int64_t>(res.successes),
                          static_cast<std::int64_t>(res.trials));
  return res;
}

}  // namespace clonelab
