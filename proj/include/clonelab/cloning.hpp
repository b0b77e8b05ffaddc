#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/rational.hpp"
#include "clonelab/rng.hpp"
#include "clonelab/rules.hpp"

namespace clonelab {

// k[j] = number of clones replacing candidate j (>= 1; 1 keeps it as is).
using CloningVector = std::vector<int>;

inline void validate_cloning_vector(const Election& e, const CloningVector& v) {
  if (static_cast<int>(v.size()) != e.num_candidates())
    throw MalformedAssignment("cloning vector size does not match roster");
  for (int k : v) {
    if (k < 1) throw MalformedAssignment("every candidate needs at least one clone");
    if (k > 255) throw InvalidSize("clone counts above 255 are not supported");
  }
}

inline long long total_clones(const CloningVector& v) {
  return std::accumulate(v.begin(), v.end(), 0ll);
}

inline long long extra_clones(const CloningVector& v) {
  return total_clones(v) - static_cast<long long>(v.size());
}

// perms[i][j] lists clone slots of family j in voter i's ranking order
// (0-based). Families with one clone keep an empty entry.
struct OrderingAssignment {
  std::vector<std::vector<std::vector<std::uint8_t>>> perms;

  friend bool operator==(const OrderingAssignment& a, const OrderingAssignment& b) {
    return a.perms == b.perms;
  }
};

inline void validate_assignment(const Election& e, const CloningVector& v,
                                const OrderingAssignment& o) {
  validate_cloning_vector(e, v);
  const int m = e.num_candidates();
  if (static_cast<int>(o.perms.size()) != e.num_voters())
    throw MalformedAssignment("assignment must cover every voter");
  for (const auto& row : o.perms) {
    if (static_cast<int>(row.size()) != m)
      throw MalformedAssignment("assignment must cover every family");
    for (int f = 0; f < m; ++f) {
      const auto& p = row[f];
      if (v[f] == 1) {
        if (!p.empty() && !(p.size() == 1 && p[0] == 0))
          throw MalformedAssignment("singleton family with nontrivial ordering");
        continue;
      }
      if (static_cast<int>(p.size()) != v[f])
        throw MalformedAssignment("ordering size does not match clone count");
      std::vector<char> seen(v[f], 0);
      for (std::uint8_t s : p) {
        if (s >= v[f] || seen[s])
          throw MalformedAssignment("ordering is not a permutation of the family");
        seen[s] = 1;
      }
    }
  }
}

inline OrderingAssignment identity_assignment(const Election& e,
                                              const CloningVector& v) {
  OrderingAssignment o;
  o.perms.assign(e.num_voters(), std::vector<std::vector<std::uint8_t>>(
                                     e.num_candidates()));
  for (auto& row : o.perms)
    for (int f = 0; f < e.num_candidates(); ++f)
      if (v[f] >= 2) {
        row[f].resize(v[f]);
        std::iota(row[f].begin(), row[f].end(), 0);
      }
  return o;
}

struct ExpandedElection {
  Election election;
  std::vector<int> family;  // expanded index -> original candidate
  std::vector<int> offset;  // original candidate -> first expanded index
};

// Replaces each candidate j by v[j] clones named label#1..label#k. Clones sit
// in a contiguous block at their parent's position in every vote; the block's
// internal order is the voter's ordering for that family.
inline ExpandedElection apply_cloning(const Election& e, const CloningVector& v,
                                      const OrderingAssignment& o) {
  validate_assignment(e, v, o);
  const int m = e.num_candidates();
  std::vector<int> offset(m);
  std::vector<int> family;
  std::vector<std::string> labels;
  for (int j = 0; j < m; ++j) {
    offset[j] = static_cast<int>(labels.size());
    for (int s = 1; s <= v[j]; ++s) {
      labels.push_back(e.label(j) + "#" + std::to_string(s));
      family.push_back(j);
    }
  }
  std::vector<std::vector<int>> votes;
  votes.reserve(e.num_voters());
  for (int i = 0; i < e.num_voters(); ++i) {
    std::vector<int> vote;
    vote.reserve(labels.size());
    for (int j : e.vote(i)) {
      if (v[j] == 1) {
        vote.push_back(offset[j]);
      } else {
        for (std::uint8_t s : o.perms[i][j]) vote.push_back(offset[j] + s);
      }
    }
    votes.push_back(std::move(vote));
  }
  return ExpandedElection{Election(std::move(labels), std::move(votes)),
                          std::move(family), std::move(offset)};
}

// Direct evaluation of one concrete assignment: does some clone of c win?
inline bool cloning_succeeds(const Election& e, const Rule& r, int c,
                             const CloningVector& v, const OrderingAssignment& o) {
  auto ex = apply_cloning(e, v, o);
  for (int w : winners(ex.election, r))
    if (ex.family[w] == c) return true;
  return false;
}

enum class SuccessModeKind { ZeroPlus, One, Threshold };

struct SuccessMode {
  SuccessModeKind kind = SuccessModeKind::ZeroPlus;
  Rational q;

  static SuccessMode zero_plus() { return {SuccessModeKind::ZeroPlus, Rational()}; }
  static SuccessMode one() { return {SuccessModeKind::One, Rational(1)}; }
  static SuccessMode threshold(const Rational& q) {
    if (q.is_infinite() || q <= Rational(0) || q >= Rational(1))
      throw InvalidThreshold("threshold must lie strictly between 0 and 1");
    return {SuccessModeKind::Threshold, q};
  }

  std::string str() const {
    switch (kind) {
      case SuccessModeKind::ZeroPlus: return "0plus";
      case SuccessModeKind::One: return "1";
      case SuccessModeKind::Threshold: return q.str();
    }
    return "?";
  }
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t factorial_sat(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

// Lexicographically ordered permutations of 0..k-1, flattened with stride k.
inline const std::vector<std::uint8_t>& flat_perms(int k) {
  static std::vector<std::vector<std::uint8_t>> cache(2);
  if (k > 9)
    throw SearchSpaceTooLarge("family of " + std::to_string(k) +
                              " clones is too large to enumerate");
  while (static_cast<int>(cache.size()) <= k) {
    int kk = static_cast<int>(cache.size());
    std::vector<std::uint8_t> p(kk);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::uint8_t> flat;
    flat.reserve(factorial_sat(kk) * kk);
    do {
      flat.insert(flat.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
    cache.push_back(std::move(flat));
  }
  return cache[k];
}

// Evaluates "does some clone of c win" for the current per-(voter, family)
// orderings without materializing the expanded election. Orderings are bound
// as raw pointers so both the exhaustive enumerator and the sampler can drive
// the same machinery.
class CloneEvaluator {
 public:
  struct Digit {
    int voter;
    int family;
    int k;
    std::uint32_t radix;
  };

  CloneEvaluator(const Election& e, const Rule& r, int c, const CloningVector& v)
      : rule_(r), cfam_(c), m_(e.num_candidates()), n_(e.num_voters()), k_(v) {
    offset_.resize(m_);
    total_ = 0;
    for (int f = 0; f < m_; ++f) {
      offset_[f] = total_;
      total_ += k_[f];
    }
    pp_.assign(static_cast<std::size_t>(n_) * m_, nullptr);
    for (int i = 0; i < n_; ++i)
      for (int f = 0; f < m_; ++f)
        if (k_[f] >= 2) digits_.push_back({i, f, k_[f], 0});
    // digit order: voters ascending, families ascending (already in order)
    for (auto& d : digits_)
      d.radix = static_cast<std::uint32_t>(factorial_sat(d.k));

    top_fam_.resize(n_);
    bottom_fam_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      top_fam_[i] = e.vote(i).front();
      bottom_fam_[i] = e.vote(i).back();
    }
    w_ = pairwise_matrix(e);
    prefix_.assign(static_cast<std::size_t>(n_) * m_, 0);
    for (int i = 0; i < n_; ++i) {
      int before = 0;
      for (int j : e.vote(i)) {
        prefix_[static_cast<std::size_t>(i) * m_ + j] = before;
        before += k_[j];
      }
    }
    sc_.resize(total_);
    cnt_.resize(total_);

    switch (rule_.kind) {
      case RuleKind::Borda: {
        base_.assign(total_, 0);
        for (int f = 0; f < m_; ++f) {
          long long b = 0;
          for (int i = 0; i < n_; ++i)
            b += total_ - prefix_[static_cast<std::size_t>(i) * m_ + f] - k_[f];
          for (int s = 0; s < k_[f]; ++s) base_[offset_[f] + s] = static_cast<int>(b);
        }
        break;
      }
      case RuleKind::KApproval: {
        const int ka = std::min(rule_.approval_k, total_);
        base_.assign(total_, 0);
        for (int i = 0; i < n_; ++i)
          for (int f = 0; f < m_; ++f) {
            int lo = prefix_[static_cast<std::size_t>(i) * m_ + f];
            int hi = lo + k_[f];
            if (ka >= hi) {
              for (int s = 0; s < k_[f]; ++s) ++base_[offset_[f] + s];
            } else if (ka > lo) {
              partial_.push_back({i, f, ka - lo});
            }
          }
        break;
      }
      case RuleKind::Maximin: {
        cross_min_.assign(m_, n_);
        for (int f = 0; f < m_; ++f)
          for (int g = 0; g < m_; ++g)
            if (g != f) cross_min_[f] = std::min(cross_min_[f], w_[f][g]);
        break;
      }
      case RuleKind::Copeland: {
        cross_cope_.assign(m_, 0);
        for (int f = 0; f < m_; ++f)
          for (int g = 0; g < m_; ++g) {
            if (g == f) continue;
            if (w_[f][g] > w_[g][f]) cross_cope_[f] += k_[g];
            else if (w_[f][g] < w_[g][f]) cross_cope_[f] -= k_[g];
          }
        break;
      }
      default:
        break;
    }
    for (int f = 0; f < m_; ++f)
      if (k_[f] >= 2) cloned_.push_back(f);
    int wmax = 1;
    for (int f : cloned_) wmax = std::max(wmax, k_[f] * k_[f]);
    wbuf_.resize(wmax);
  }

  const std::vector<Digit>& digits() const { return digits_; }

  std::uint64_t space(std::uint64_t cap) const {
    std::uint64_t s = 1;
    for (const auto& d : digits_) {
      s = sat_mul(s, d.radix);
      if (s > cap) return s;
    }
    return s;
  }

  void bind(int digit, const std::uint8_t* perm) {
    const auto& d = digits_[digit];
    pp_[static_cast<std::size_t>(d.voter) * m_ + d.family] = perm;
  }

  bool evaluate() {
    switch (rule_.kind) {
      case RuleKind::Plurality: return eval_plurality();
      case RuleKind::Veto: return eval_veto();
      case RuleKind::Borda: return eval_positional();
      case RuleKind::KApproval: return eval_positional();
      case RuleKind::Maximin: return eval_maximin();
      case RuleKind::Copeland: return eval_copeland();
      case RuleKind::Runoff: return eval_runoff();
    }
    return false;
  }

 private:
  const std::uint8_t* perm(int voter, int fam) const {
    return pp_[static_cast<std::size_t>(voter) * m_ + fam];
  }

  bool family_attains_max(const std::vector<int>& sc) const {
    int gmax = sc[0];
    for (int s = 1; s < total_; ++s) gmax = std::max(gmax, sc[s]);
    for (int s = 0; s < k_[cfam_]; ++s)
      if (sc[offset_[cfam_] + s] == gmax) return true;
    return false;
  }

  bool eval_plurality() {
    std::fill(sc_.begin(), sc_.end(), 0);
    for (int i = 0; i < n_; ++i) {
      int f = top_fam_[i];
      int slot = k_[f] == 1 ? 0 : perm(i, f)[0];
      ++sc_[offset_[f] + slot];
    }
    return family_attains_max(sc_);
  }

  bool eval_veto() {
    std::fill(cnt_.begin(), cnt_.end(), 0);
    for (int i = 0; i < n_; ++i) {
      int f = bottom_fam_[i];
      int slot = k_[f] == 1 ? 0 : perm(i, f)[k_[f] - 1];
      ++cnt_[offset_[f] + slot];
    }
    int gmin = cnt_[0];
    for (int s = 1; s < total_; ++s) gmin = std::min(gmin, cnt_[s]);
    for (int s = 0; s < k_[cfam_]; ++s)
      if (cnt_[offset_[cfam_] + s] == gmin) return true;
    return false;
  }

  bool eval_positional() {
    sc_ = base_;
    if (rule_.kind == RuleKind::Borda) {
      for (int f : cloned_) {
        const int of = offset_[f];
        const int kf = k_[f];
        for (int i = 0; i < n_; ++i) {
          const std::uint8_t* p = perm(i, f);
          for (int r = 0; r < kf; ++r) sc_[of + p[r]] += kf - 1 - r;
        }
      }
    } else {
      for (const auto& pt : partial_) {
        const std::uint8_t* p = perm(pt.voter, pt.family);
        const int of = offset_[pt.family];
        for (int r = 0; r < pt.take; ++r) ++sc_[of + p[r]];
      }
    }
    return family_attains_max(sc_);
  }

  void within_counts(int f) {
    const int kf = k_[f];
    std::fill(wbuf_.begin(), wbuf_.begin() + kf * kf, 0);
    for (int i = 0; i < n_; ++i) {
      const std::uint8_t* p = perm(i, f);
      for (int a = 0; a < kf; ++a)
        for (int b = a + 1; b < kf; ++b) ++wbuf_[p[a] * kf + p[b]];
    }
  }

  bool eval_maximin() {
    for (int f = 0; f < m_; ++f)
      if (k_[f] == 1) sc_[offset_[f]] = cross_min_[f];
    for (int f : cloned_) {
      within_counts(f);
      const int kf = k_[f];
      for (int s = 0; s < kf; ++s) {
        int mn = cross_min_[f];
        for (int t = 0; t < kf; ++t)
          if (t != s) mn = std::min(mn, wbuf_[s * kf + t]);
        sc_[offset_[f] + s] = mn;
      }
    }
    return family_attains_max(sc_);
  }

  bool eval_copeland() {
    for (int f = 0; f < m_; ++f)
      if (k_[f] == 1) sc_[offset_[f]] = cross_cope_[f];
    for (int f : cloned_) {
      within_counts(f);
      const int kf = k_[f];
      for (int s = 0; s < kf; ++s) {
        int net = 0;
        for (int t = 0; t < kf; ++t) {
          if (t == s) continue;
          int st = wbuf_[s * kf + t], ts = wbuf_[t * kf + s];
          if (st > ts) ++net;
          else if (st < ts) --net;
        }
        sc_[offset_[f] + s] = cross_cope_[f] + net;
      }
    }
    return family_attains_max(sc_);
  }

  bool eval_runoff() {
    if (total_ == 1) return true;
    std::fill(cnt_.begin(), cnt_.end(), 0);
    for (int i = 0; i < n_; ++i) {
      int f = top_fam_[i];
      int slot = k_[f] == 1 ? 0 : perm(i, f)[0];
      ++cnt_[offset_[f] + slot];
    }
    const int kc = k_[cfam_];
    if (kc >= 2) within_counts(cfam_);
    // top three scores give "max excluding {x,y}" in O(1)
    int v1 = -1, v2 = -1, v3 = -1, i1 = -1, i2 = -1;
    for (int s = 0; s < total_; ++s) {
      int cv = cnt_[s];
      if (cv > v1) {
        v3 = v2; v2 = v1; i2 = i1; v1 = cv; i1 = s;
      } else if (cv > v2) {
        v3 = v2; v2 = cv; i2 = s;
      } else if (cv > v3) {
        v3 = cv;
      }
    }
    const int need = (n_ + 1) / 2;
    const int oc = offset_[cfam_];
    for (int s = 0; s < kc; ++s) {
      const int x = oc + s;
      for (int y = 0; y < total_; ++y) {
        if (y == x) continue;
        int lim = std::min(cnt_[x], cnt_[y]);
        int third = (i1 != x && i1 != y) ? v1 : (i2 != x && i2 != y) ? v2 : v3;
        if (third > lim) continue;
        int yfam = fam_of(y);
        int wxy = yfam == cfam_ ? wbuf_[s * kc + (y - oc)] : w_[cfam_][yfam];
        if (wxy >= need) return true;
      }
    }
    return false;
  }

  int fam_of(int slot) const {
    int f = 0;
    while (f + 1 < m_ && offset_[f + 1] <= slot) ++f;
    return f;
  }

  Rule rule_;
  int cfam_, m_, n_, total_;
  CloningVector k_;
  std::vector<int> offset_;
  std::vector<Digit> digits_;
  std::vector<const std::uint8_t*> pp_;
  std::vector<int> top_fam_, bottom_fam_;
  PairwiseMatrix w_;
  std::vector<int> prefix_;
  std::vector<int> base_;
  std::vector<int> cross_min_, cross_cope_;
  struct Partial {
    int voter, family, take;
  };
  std::vector<Partial> partial_;
  std::vector<int> sc_, cnt_, wbuf_;
  std::vector<int> cloned_;
};

}  // namespace detail

inline std::uint64_t assignment_space(const Election& e, const CloningVector& v,
                                      std::uint64_t cap =
                                          std::numeric_limits<std::uint64_t>::max()) {
  validate_cloning_vector(e, v);
  std::uint64_t s = 1;
  for (int k : v) {
    std::uint64_t f = detail::factorial_sat(k);
    for (int i = 0; i < e.num_voters(); ++i) {
      s = detail::sat_mul(s, f);
      if (s > cap) return s;
    }
  }
  return s;
}

struct ExactCheckResult {
  enum class Outcome { Success, Failure, NotApplicable };
  Outcome outcome;
  std::optional<OrderingAssignment> witness;
  std::optional<OrderingAssignment> counterexample;
  std::uint64_t assignments_checked = 0;
  std::string note;
};

namespace detail {

class AssignmentEnumerator {
 public:
  AssignmentEnumerator(const Election& e, const CloningVector& v,
                       CloneEvaluator& ev)
      : e_(e), v_(v), ev_(ev) {
    const auto& ds = ev.digits();
    ranks_.assign(ds.size(), 0);
    for (std::size_t d = 0; d < ds.size(); ++d) {
      const auto& flat = flat_perms(ds[d].k);
      bases_.push_back(flat.data());
      ev_.bind(static_cast<int>(d), flat.data());
    }
  }

  // Advances to the next assignment in lexicographic (voter, family,
  // permutation rank) order; false once the space is exhausted.
  bool advance() {
    const auto& ds = ev_.digits();
    for (int d = static_cast<int>(ds.size()) - 1; d >= 0; --d) {
      if (++ranks_[d] < ds[d].radix) {
        ev_.bind(d, bases_[d] + static_cast<std::size_t>(ranks_[d]) * ds[d].k);
        return true;
      }
      ranks_[d] = 0;
      ev_.bind(d, bases_[d]);
    }
    return false;
  }

  OrderingAssignment current() const {
    OrderingAssignment o = identity_assignment(e_, v_);
    const auto& ds = ev_.digits();
    for (std::size_t d = 0; d < ds.size(); ++d) {
      const std::uint8_t* p = bases_[d] + static_cast<std::size_t>(ranks_[d]) * ds[d].k;
      o.perms[ds[d].voter][ds[d].family].assign(p, p + ds[d].k);
    }
    return o;
  }

 private:
  const Election& e_;
  const CloningVector& v_;
  CloneEvaluator& ev_;
  std::vector<std::uint32_t> ranks_;
  std::vector<const std::uint8_t*> bases_;
};

}  // namespace detail

// Exhaustively decides whether the cloning vector is 0+- or 1-successful by
// walking every ordering assignment in lexicographic order. The first hit
// (success witness for 0+, failing counterexample for 1) is returned, so
// results are reproducible.
inline ExactCheckResult check_success_exact(const Election& e, const Rule& r,
                                            int c, const CloningVector& v,
                                            SuccessModeKind mode,
                                            std::uint64_t max_assignments) {
  if (mode == SuccessModeKind::Threshold)
    throw Unsupported("exact check handles the 0plus and 1 modes only");
  validate_cloning_vector(e, v);
  if (c < 0 || c >= e.num_candidates())
    throw UnknownCandidate("candidate index out of range");
  if (is_winner(e, r, c))
    return {ExactCheckResult::Outcome::NotApplicable, std::nullopt, std::nullopt,
            0, "preferred candidate already wins; nothing to improve"};
  std::uint64_t space = assignment_space(e, v, max_assignments);
  if (space > max_assignments)
    throw SearchSpaceTooLarge("ordering space exceeds " +
                              std::to_string(max_assignments) + " assignments");
  detail::CloneEvaluator ev(e, r, c, v);
  detail::AssignmentEnumerator en(e, v, ev);
  ExactCheckResult res{ExactCheckResult::Outcome::Failure, std::nullopt,
                       std::nullopt, 0, ""};
  for (;;) {
    ++res.assignments_checked;
    bool ok = ev.evaluate();
    if (mode == SuccessModeKind::ZeroPlus && ok) {
      res.outcome = ExactCheckResult::Outcome::Success;
      res.witness = en.current();
      return res;
    }
    if (mode == SuccessModeKind::One && !ok) {
      res.outcome = ExactCheckResult::Outcome::Failure;
      res.counterexample = en.current();
      return res;
    }
    if (!en.advance()) break;
  }
  if (mode == SuccessModeKind::ZeroPlus) {
    res.outcome = ExactCheckResult::Outcome::Failure;
    res.note = "no ordering assignment succeeds";
  } else {
    res.outcome = ExactCheckResult::Outcome::Success;
    res.witness = identity_assignment(e, v);
    res.note = "every ordering assignment succeeds";
  }
  return res;
}

// Counts successful assignments over the whole space (no early exit).
struct SuccessCount {
  std::uint64_t successes = 0;
  std::uint64_t total = 0;
};

inline SuccessCount exact_success_count(const Election& e, const Rule& r, int c,
                                        const CloningVector& v,
                                        std::uint64_t max_assignments) {
  validate_cloning_vector(e, v);
  std::uint64_t space = assignment_space(e, v, max_assignments);
  if (space > max_assignments)
    throw SearchSpaceTooLarge("ordering space exceeds " +
                              std::to_string(max_assignments) + " assignments");
  detail::CloneEvaluator ev(e, r, c, v);
  detail::AssignmentEnumerator en(e, v, ev);
  SuccessCount sc;
  for (;;) {
    ++sc.total;
    if (ev.evaluate()) ++sc.successes;
    if (!en.advance()) break;
  }
  return sc;
}

struct EstimateResult {
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  Rational estimate;
};

// Monte Carlo estimate of the probability that a uniformly random ordering
// assignment makes some clone of c win. Trial t draws its orderings from
// trial_stream(seed, t), one Fisher-Yates shuffle per (voter, family) pair in
// (voter, family) order.
inline EstimateResult estimate_success_probability(const Election& e,
                                                   const Rule& r, int c,
                                                   const CloningVector& v,
                                                   std::uint64_t samples,
                                                   std::uint64_t seed) {
  validate_cloning_vector(e, v);
  if (samples == 0) throw InvalidSize("need at least one sample");
  detail::CloneEvaluator ev(e, r, c, v);
  const auto& ds = ev.digits();
  std::vector<std::vector<std::uint8_t>> scratch(ds.size());
  for (std::size_t d = 0; d < ds.size(); ++d) {
    scratch[d].resize(ds[d].k);
    ev.bind(static_cast<int>(d), scratch[d].data());
  }
  EstimateResult res;
  res.samples = samples;
  res.seed = seed;
  for (std::uint64_t t = 0; t < samples; ++t) {
    SplitMix64 g = trial_stream(seed, t);
    for (std::size_t d = 0; d < ds.size(); ++d) {
      auto& p = scratch[d];
      for (int i = 0; i < ds[d].k; ++i) p[i] = static_cast<std::uint8_t>(i);
      shuffle(p, g);
    }
    if (ev.evaluate()) ++res.successes;
  }
  res.estimate = Rational(static_cast<std::int64_t>(res.successes),
                          static_cast<std::int64_t>(res.samples));
  return res;
}

}  // namespace clonelab
