#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "clonelab/cloning.hpp"
#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/rational.hpp"
#include "clonelab/rules.hpp"
#include "clonelab/tournament.hpp"

namespace clonelab {

enum class Verdict {
  AlreadyWinner,
  Manipulable,
  NotManipulable,
  NecessaryConditionFails,
  Inconclusive
};

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AlreadyWinner: return "already-winner";
    case Verdict::Manipulable: return "manipulable";
    case Verdict::NotManipulable: return "not-manipulable";
    case Verdict::NecessaryConditionFails: return "necessary-condition-fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct WitnessCert {
  OrderingAssignment assignment;
};

struct AllOrderingsCert {};

struct SampledEvidenceCert {
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
};

using Certificate =
    std::variant<std::monostate, WitnessCert, AllOrderingsCert, SampledEvidenceCert>;

inline std::string certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 1: return "witness";
    case 2: return "all-orderings";
    case 3: return "sampled-evidence";
    default: return "none";
  }
}

struct Strategy {
  CloningVector vector;
  SuccessMode certifies;
  Certificate certificate;
  std::string label;
};

struct AnalysisReport {
  Rule rule;
  int preferred = 0;
  SuccessMode mode;
  Verdict verdict = Verdict::Inconclusive;
  std::string condition;
  std::map<std::string, Rational> derived;
  std::vector<Strategy> strategies;
};

namespace detail {

inline void check_candidate(const Election& e, int c) {
  if (c < 0 || c >= e.num_candidates())
    throw UnknownCandidate("candidate index out of range");
}

inline AnalysisReport base_report(const Election& e, const Rule& r, int c,
                                  SuccessMode mode) {
  check_candidate(e, c);
  AnalysisReport rep;
  rep.rule = r;
  rep.preferred = c;
  rep.mode = mode;
  return rep;
}

inline bool already_winner(const Election& e, const Rule& r, int c,
                           AnalysisReport& rep) {
  if (!is_winner(e, r, c)) return false;
  rep.verdict = Verdict::AlreadyWinner;
  rep.condition = e.label(c) + " already wins; cloning is unnecessary";
  return true;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

inline int checked_count(long long k) {
  if (k > std::numeric_limits<int>::max())
    throw InvalidSize("required clone count does not fit in an int");
  return static_cast<int>(k);
}

inline bool evaluable(const CloningVector& v) {
  for (int k : v)
    if (k > 255) return false;
  return true;
}

// Permutation that puts clone g on top and keeps the rest ascending.
inline std::vector<std::uint8_t> topping_perm(int k, int g) {
  std::vector<std::uint8_t> p;
  p.reserve(k);
  p.push_back(static_cast<std::uint8_t>(g));
  for (int s = 0; s < k; ++s)
    if (s != g) p.push_back(static_cast<std::uint8_t>(s));
  return p;
}

// Walks voters in index order and, for every cloned family with a positive
// cap, sends that family's t-th top vote to clone t / cap. Everyone else
// keeps the ascending clone order.
inline OrderingAssignment split_top_assignment(const Election& e,
                                               const CloningVector& v,
                                               const std::vector<int>& cap) {
  OrderingAssignment o = identity_assignment(e, v);
  std::vector<int> seen(e.num_candidates(), 0);
  for (int i = 0; i < e.num_voters(); ++i) {
    int f = e.vote(i).front();
    if (v[f] < 2 || cap[f] <= 0) continue;
    int g = std::min(seen[f]++ / cap[f], v[f] - 1);
    if (g > 0) o.perms[i][f] = topping_perm(v[f], g);
  }
  return o;
}

// Attaches the witness if the vector is small enough to expand, and insists
// it actually works.
inline void attach_witness(const Election& e, const Rule& r, int c,
                           Strategy& st, OrderingAssignment assignment) {
  if (!evaluable(st.vector)) return;  // reported without an expanded certificate
  if (!cloning_succeeds(e, r, c, st.vector, assignment))
    throw std::logic_error("internal error: constructed witness fails for " +
                           st.label);
  st.certificate = WitnessCert{std::move(assignment)};
}

// Cheap reproducible corroboration for probabilistic strategies.
inline void attach_sampled_evidence(const Election& e, const Rule& r, int c,
                                    Strategy& st) {
  if (!evaluable(st.vector)) return;
  constexpr std::uint64_t kSamples = 200, kSeed = 1;
  auto est = estimate_success_probability(e, r, c, st.vector, kSamples, kSeed);
  st.certificate = SampledEvidenceCert{est.samples, est.successes, est.seed};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plurality
// ---------------------------------------------------------------------------

// Some ordering can make c win iff c has any first-place support: split each
// stronger rival's top votes across enough clones that no block beats c.
inline AnalysisReport plurality_0plus(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::plurality(), c, SuccessMode::zero_plus());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto sc = scores(e, rep.rule);
  long long s = sc[c];
  rep.derived["s"] = Rational(s);
  if (s == 0) {
    rep.verdict = Verdict::NotManipulable;
    rep.condition = "no voter ranks " + e.label(c) +
                    " first, so no clone of a rival can free up a win";
    return rep;
  }
  CloningVector v(e.num_candidates(), 1);
  std::vector<int> cap(e.num_candidates(), 0);
  for (int a = 0; a < e.num_candidates(); ++a)
    if (sc[a] > s) {
      v[a] = detail::checked_count(detail::ceil_div(sc[a], s));
      cap[a] = static_cast<int>(s);
      rep.derived["k_" + e.label(a)] = Rational(v[a]);
    }
  Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "split-top"};
  detail::attach_witness(e, rep.rule, c, st, detail::split_top_assignment(e, v, cap));
  rep.verdict = Verdict::Manipulable;
  rep.condition = e.label(c) + " keeps its " + std::to_string(s) +
                  " top votes while every stronger rival is split into blocks "
                  "of at most that size";
  rep.strategies.push_back(std::move(st));
  return rep;
}

// With clone orders drawn uniformly, flooding each stronger rival with
// enough clones makes two of its top votes collide only rarely; a union
// bound brings the failure mass below 1 - q.
inline AnalysisReport plurality_q(const Election& e, int c, const Rational& q) {
  auto mode = SuccessMode::threshold(q);
  auto rep = detail::base_report(e, Rule::plurality(), c, mode);
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto sc = scores(e, rep.rule);
  long long s = sc[c];
  rep.derived["s"] = Rational(s);
  if (s == 0) {
    rep.verdict = Verdict::NotManipulable;
    rep.condition = "no voter ranks " + e.label(c) + " first";
    return rep;
  }
  const int m = e.num_candidates();
  Rational factor_q = Rational(m - 1) / (Rational(1) - q);
  long long factor = std::max<long long>(factor_q.ceil(), 1);
  rep.derived["spread_factor"] = Rational(factor);
  CloningVector v(m, 1);
  for (int a = 0; a < m; ++a)
    if (sc[a] > s) {
      v[a] = detail::checked_count(sc[a] * (sc[a] - 1) / 2 * factor);
      rep.derived["k_" + e.label(a)] = Rational(v[a]);
    }
  Strategy st{v, mode, std::monostate{}, "plurality-spread"};
  detail::attach_sampled_evidence(e, rep.rule, c, st);
  rep.verdict = Verdict::Manipulable;
  rep.condition =
      "a random clone order sends two top votes of the same rival to one "
      "clone with probability at most 1 - q in total";
  rep.strategies.push_back(std::move(st));
  return rep;
}

inline AnalysisReport plurality_one(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::plurality(), c, SuccessMode::one());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  rep.verdict = Verdict::NotManipulable;
  rep.condition =
      "keeping every family in ascending order preserves the original "
      "outcome, so no vector succeeds for all orderings";
  return rep;
}

// ---------------------------------------------------------------------------
// Veto
// ---------------------------------------------------------------------------

// Cloning anyone else never helps: each clone of a rival carries at most the
// rival's last places, so its score stays at least the winning score.
// Cloning c works in both modes.
inline AnalysisReport veto_strategy(const Election& e, int c, SuccessMode mode) {
  auto rep = detail::base_report(e, Rule::veto(), c, mode);
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto sc = scores(e, rep.rule);
  const long long n = e.num_voters();
  long long k = sc[c];
  long long ell = *std::max_element(sc.begin(), sc.end());
  rep.derived["k"] = Rational(k);
  rep.derived["ell"] = Rational(ell);
  if (mode.kind == SuccessModeKind::ZeroPlus) {
    CloningVector v(e.num_candidates(), 1);
    v[c] = 2;
    Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "veto-shield"};
    detail::attach_witness(e, rep.rule, c, st, identity_assignment(e, v));
    rep.verdict = Verdict::Manipulable;
    rep.condition = "a rear clone absorbs every last place aimed at " +
                    e.label(c) + " when voters keep the ascending clone order";
    rep.strategies.push_back(std::move(st));
    return rep;
  }
  long long k_prime = n - k;
  long long ell_prime = n - ell;
  long long total;
  if (ell == n) {
    total = k_prime + 1;
  } else {
    long long r = k_prime / (ell_prime + 1);
    rep.derived["r"] = Rational(r);
    total = r + 1;
  }
  rep.derived["k_prime"] = Rational(k_prime);
  rep.derived["ell_prime"] = Rational(ell_prime);
  rep.derived["clones_total"] = Rational(total);
  CloningVector v(e.num_candidates(), 1);
  v[c] = detail::checked_count(total);
  rep.verdict = Verdict::Manipulable;
  rep.condition =
      "with " + std::to_string(total) + " clones of " + e.label(c) +
      ", every ordering leaves some clone with no more last places than the "
      "current winners";
  rep.strategies.push_back(
      {v, SuccessMode::one(), AllOrderingsCert{}, "veto-flood"});
  return rep;
}

// ---------------------------------------------------------------------------
// Borda
// ---------------------------------------------------------------------------

// Stacking clones of c lifts the front clone by one point per sibling per
// vote, while a rival a only gains where it beats c. Enough siblings close
// any gap unless some rival beats c unanimously.
inline AnalysisReport borda_0plus_strategy(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::borda(), c, SuccessMode::zero_plus());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto w = pairwise_matrix(e);
  for (int a = 0; a < e.num_candidates(); ++a)
    if (a != c && w[c][a] == 0) {
      rep.verdict = Verdict::NotManipulable;
      rep.condition = "every voter prefers " + e.label(a) + " to " +
                      e.label(c) + ", and cloning never breaks unanimity";
      return rep;
    }
  auto sc = scores(e, rep.rule);
  long long k = 1;
  for (int a = 0; a < e.num_candidates(); ++a)
    if (sc[a] > sc[c]) {
      long long s_a = sc[a] - sc[c];
      long long n_a = w[c][a];
      rep.derived["s_" + e.label(a)] = Rational(s_a);
      rep.derived["n_" + e.label(a)] = Rational(n_a);
      k = std::max(k, detail::ceil_div(s_a, n_a));
    }
  rep.derived["extra_clones"] = Rational(k);
  rep.derived["total_clones"] = Rational(k + 1);
  CloningVector v(e.num_candidates(), 1);
  v[c] = detail::checked_count(k + 1);
  Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "borda-stack"};
  detail::attach_witness(e, rep.rule, c, st, identity_assignment(e, v));
  rep.verdict = Verdict::Manipulable;
  rep.condition = std::to_string(k) + " extra clones of " + e.label(c) +
                  " ranked right below the front clone outscore every rival";
  rep.strategies.push_back(std::move(st));
  return rep;
}

// Worst-case clone orders cap the best clone's gain at half the sibling
// pairs per vote. For an even electorate that bound is exact, which decides
// whether cloning c alone works for every ordering; for an odd electorate
// only the rounding-relaxed bounds are safe to report.
inline AnalysisReport borda_clone_c_analysis(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::borda(), c, SuccessMode::one());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto sc = scores(e, rep.rule);
  auto w = pairwise_matrix(e);
  const long long n = e.num_voters();
  const bool even = n % 2 == 0;
  Rational r_plus(0);
  bool plus_infinite = false;
  Rational r_minus = Rational::infinity();
  for (int a = 0; a < e.num_candidates(); ++a) {
    if (a == c) continue;
    long long gap = sc[a] - sc[c];
    long long net = w[c][a] - w[a][c];
    if (gap > 0) {
      long long need = even ? 2 * gap : 2 * gap - 1;
      if (net <= 0) {
        plus_infinite = true;
      } else {
        r_plus = std::max(r_plus, Rational(need, net));
      }
    } else {
      long long slack = even ? -2 * gap : -2 * gap + 1;
      if (-net > 0) r_minus = std::min(r_minus, Rational(slack, -net));
    }
  }
  const std::string lo = even ? "r_plus" : "r_hat_plus";
  const std::string hi = even ? "r_minus" : "r_hat_minus";
  rep.derived[lo] = plus_infinite ? Rational::infinity() : r_plus;
  rep.derived[hi] = r_minus;
  const std::string scope = "cloning " + e.label(c) + " alone";
  bool window_empty =
      plus_infinite ||
      (!r_minus.is_infinite() && r_plus.ceil() > r_minus.floor());
  if (even) {
    if (window_empty) {
      rep.verdict = Verdict::NotManipulable;
      rep.condition = scope + " cannot succeed for every ordering: " +
                      (plus_infinite
                           ? "some stronger rival wins too many head-to-heads"
                           : "closing the gap would let a weaker rival pass");
      return rep;
    }
    long long extra = std::max<long long>(r_plus.ceil(), 1);
    CloningVector v(e.num_candidates(), 1);
    v[c] = detail::checked_count(extra + 1);
    rep.derived["clones_total"] = Rational(extra + 1);
    rep.verdict = Verdict::Manipulable;
    rep.condition = scope + " with " + std::to_string(extra + 1) +
                    " clones total wins for every ordering";
    rep.strategies.push_back(
        {v, SuccessMode::one(), AllOrderingsCert{}, "borda-clone-preferred"});
    return rep;
  }
  if (window_empty) {
    rep.verdict = Verdict::NecessaryConditionFails;
    rep.condition = scope + " fails even the rounding-relaxed bounds";
    return rep;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.condition = scope + " passes the necessary bounds, but with an odd "
                  "electorate the worst-case clone gain is not tight";
  return rep;
}

// Per-voter clone orders for one family of k clones that pin every clone's
// within-family gain to the guaranteed worst case: each clone gains exactly
// n(k-1)/2 when that is an integer; otherwise clones 1..k-1 gain its ceiling
// and the last clone gains (k-1)(n-1)/2. Permutations are 0-based.
inline std::vector<std::vector<std::uint8_t>> borda_adversarial_ordering(int n,
                                                                         int k) {
  if (n < 1 || k < 1) throw InvalidSize("need n >= 1 voters and k >= 1 clones");
  if (n % 2 == 1 && n < 3)
    throw Unsupported("the balanced construction needs at least 3 voters when "
                      "their number is odd");
  auto forward = [&](int kk) {
    std::vector<std::uint8_t> p(kk);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  auto reverse = [&](int kk) {
    auto p = forward(kk);
    std::reverse(p.begin(), p.end());
    return p;
  };
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(n);
  if (n % 2 == 0) {
    for (int i = 0; i < n / 2; ++i) out.push_back(forward(k));
    for (int i = 0; i < n / 2; ++i) out.push_back(reverse(k));
    return out;
  }
  const bool k_even = k % 2 == 0;
  const int kk = k_even ? k - 1 : k;  // odd working size
  // odds descending, then evens descending (1-based values, shifted down)
  std::vector<std::uint8_t> v1, v2;
  for (int val = kk; val >= 1; val -= 2) v1.push_back(static_cast<std::uint8_t>(val - 1));
  for (int val = kk - 1; val >= 2; val -= 2) v1.push_back(static_cast<std::uint8_t>(val - 1));
  for (int val = kk - 1; val >= 2; val -= 2) v2.push_back(static_cast<std::uint8_t>(val - 1));
  for (int val = kk; val >= 1; val -= 2) v2.push_back(static_cast<std::uint8_t>(val - 1));
  out.push_back(v1);
  out.push_back(v2);
  out.push_back(forward(kk));
  for (int i = 0; i < (n - 3) / 2; ++i) {
    out.push_back(reverse(kk));
    out.push_back(forward(kk));
  }
  if (k_even) {
    // the extra clone rides on top for just under half the voters
    for (int i = 0; i < n; ++i) {
      auto& p = out[i];
      if (i < (n - 1) / 2)
        p.insert(p.begin(), static_cast<std::uint8_t>(k - 1));
      else
        p.push_back(static_cast<std::uint8_t>(k - 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-Approval
// ---------------------------------------------------------------------------

// With k*n clones of every rival, each approval window can be filled with
// clones nobody else approves, so every rival clone ends at one point while
// c keeps its top votes. Needs c on top of at least one vote.
inline AnalysisReport kapproval_saturate(const Election& e, int c, int k) {
  auto rule = Rule::k_approval(k);
  auto rep = detail::base_report(e, rule, c, SuccessMode::zero_plus());
  if (detail::already_winner(e, rule, c, rep)) return rep;
  const int m = e.num_candidates();
  const int n = e.num_voters();
  auto sp = scores(e, Rule::plurality());
  rep.derived["top_votes"] = Rational(sp[c]);
  if (sp[c] == 0) {
    rep.verdict = Verdict::Inconclusive;
    rep.condition = "no voter ranks " + e.label(c) +
                    " first; no efficient test covers this case";
    return rep;
  }
  const int keff = std::min(k, m);
  const int flood = keff * n;
  rep.derived["flood"] = Rational(flood);
  CloningVector v(m, flood);
  v[c] = 1;
  OrderingAssignment o = identity_assignment(e, v);
  std::vector<int> fresh(m, 0);
  for (int i = 0; i < n; ++i) {
    int fam, take;
    if (e.vote(i).front() == c) {
      take = keff - 1;
      if (take == 0) continue;
      fam = e.vote(i)[1];
    } else {
      fam = e.vote(i).front();
      take = keff;
    }
    auto& p = o.perms[i][fam];
    p.clear();
    p.reserve(flood);
    for (int s = fresh[fam]; s < fresh[fam] + take; ++s)
      p.push_back(static_cast<std::uint8_t>(s));
    for (int s = 0; s < flood; ++s)
      if (s < fresh[fam] || s >= fresh[fam] + take)
        p.push_back(static_cast<std::uint8_t>(s));
    fresh[fam] += take;
  }
  Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "approval-saturate"};
  detail::attach_witness(e, rule, c, st, std::move(o));
  rep.verdict = Verdict::Manipulable;
  rep.condition = "spreading approvals over " + std::to_string(flood) +
                  " clones per rival leaves every rival clone at one point "
                  "while " + e.label(c) + " keeps its top votes";
  rep.strategies.push_back(std::move(st));
  return rep;
}

// ---------------------------------------------------------------------------
// Plurality with runoff
// ---------------------------------------------------------------------------

// Either split c itself so two of its clones meet in the runoff, or pick a
// partner w that c ties or beats head-to-head and cut everyone else below
// both finalists. For thresholds, flood every contender so that top votes
// rarely collide; a collision-free draw elects c.
inline AnalysisReport runoff_strategy(const Election& e, int c, SuccessMode mode) {
  auto rep = detail::base_report(e, Rule::runoff(), c, mode);
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  if (mode.kind == SuccessModeKind::One) {
    rep.verdict = Verdict::NotManipulable;
    rep.condition =
        "keeping every family in ascending order preserves the original "
        "outcome, so no vector succeeds for all orderings";
    return rep;
  }
  const int m = e.num_candidates();
  auto sp = scores(e, Rule::plurality());
  auto w = pairwise_matrix(e);
  long long s = sp[c];
  rep.derived["s"] = Rational(s);
  std::vector<int> partners;
  if (s >= 1)
    for (int pw = 0; pw < m; ++pw)
      if (pw != c && sp[pw] >= 1 && w[c][pw] >= w[pw][c]) partners.push_back(pw);
  const bool possible = s >= 2 || (s == 1 && !partners.empty());
  if (!possible) {
    rep.verdict = Verdict::NotManipulable;
    rep.condition =
        s == 0 ? "no voter ranks " + e.label(c) + " first"
               : e.label(c) + " has a single top vote and ties or beats no "
                 "rival with first-place support";
    return rep;
  }
  if (mode.kind == SuccessModeKind::Threshold) {
    Rational factor_q = Rational(m) / (Rational(1) - mode.q);
    long long factor = std::max<long long>(factor_q.ceil(), 1);
    rep.derived["spread_factor"] = Rational(factor);
    CloningVector v(m, 1);
    for (int a = 0; a < m; ++a)
      if (sp[a] >= 2)
        v[a] = detail::checked_count(
            static_cast<long long>(sp[a]) * (sp[a] - 1) / 2 * factor);
    Strategy st{v, mode, std::monostate{}, "runoff-spread"};
    detail::attach_sampled_evidence(e, rep.rule, c, st);
    rep.verdict = Verdict::Manipulable;
    rep.condition =
        "with every contender spread out, top votes collide with probability "
        "at most 1 - q and the collision-free runoff elects " + e.label(c);
    rep.strategies.push_back(std::move(st));
    return rep;
  }
  if (s >= 2) {
    long long capv = s / 2;
    CloningVector v(m, 1);
    std::vector<int> cap(m, 0);
    v[c] = 2;
    cap[c] = static_cast<int>(s - capv);  // front block rounds up
    for (int a = 0; a < m; ++a)
      if (a != c && sp[a] > capv) {
        v[a] = detail::checked_count(detail::ceil_div(sp[a], capv));
        cap[a] = static_cast<int>(capv);
      }
    Strategy st{v, SuccessMode::zero_plus(), std::monostate{},
                "runoff-split-preferred"};
    detail::attach_witness(e, rep.rule, c, st,
                           detail::split_top_assignment(e, v, cap));
    rep.strategies.push_back(std::move(st));
  }
  for (int pw : partners) {
    long long capv = std::min(s, static_cast<long long>(sp[pw]));
    CloningVector v(m, 1);
    std::vector<int> cap(m, 0);
    for (int a = 0; a < m; ++a)
      if (a != c && a != pw && sp[a] > capv) {
        v[a] = detail::checked_count(detail::ceil_div(sp[a], capv));
        cap[a] = static_cast<int>(capv);
      }
    Strategy st{v, SuccessMode::zero_plus(), std::monostate{},
                "runoff-pair-" + e.label(pw)};
    detail::attach_witness(e, rep.rule, c, st,
                           detail::split_top_assignment(e, v, cap));
    rep.strategies.push_back(std::move(st));
  }
  std::stable_sort(rep.strategies.begin(), rep.strategies.end(),
                   [](const Strategy& a, const Strategy& b) {
                     return extra_clones(a.vector) < extra_clones(b.vector);
                   });
  rep.verdict = Verdict::Manipulable;
  rep.condition = "a runoff between two clones of " + e.label(c) +
                  " or between " + e.label(c) +
                  " and a beatable partner can be forced";
  return rep;
}

// ---------------------------------------------------------------------------
// Maximin
// ---------------------------------------------------------------------------

// Rotating clone orders over voter blocks caps every rival clone's worst
// head-to-head at the number of blocks, while c keeps its own worst match.
// Works exactly when nobody beats c unanimously.
inline AnalysisReport maximin_strategy(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::maximin(), c, SuccessMode::zero_plus());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  auto w = pairwise_matrix(e);
  for (int a = 0; a < e.num_candidates(); ++a)
    if (a != c && w[c][a] == 0) {
      rep.verdict = Verdict::NotManipulable;
      rep.condition = "every voter prefers " + e.label(a) + " to " +
                      e.label(c) + ", and cloning never breaks unanimity";
      return rep;
    }
  auto sc = scores(e, rep.rule);
  const long long n = e.num_voters();
  long long s = sc[c];
  long long k = detail::ceil_div(n, s);
  rep.derived["s"] = Rational(s);
  rep.derived["clones_per_rival"] = Rational(k);
  CloningVector v(e.num_candidates(), 1);
  for (int a = 0; a < e.num_candidates(); ++a)
    if (sc[a] > s) v[a] = detail::checked_count(k);
  OrderingAssignment o = identity_assignment(e, v);
  for (int i = 0; i < e.num_voters(); ++i) {
    int row = i % static_cast<int>(k);
    if (row == 0) continue;
    for (int f = 0; f < e.num_candidates(); ++f) {
      if (v[f] < 2) continue;
      auto& p = o.perms[i][f];
      for (int r = 0; r < v[f]; ++r)
        p[r] = static_cast<std::uint8_t>((row + r) % v[f]);
    }
  }
  Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "maximin-cyclic"};
  detail::attach_witness(e, rep.rule, c, st, std::move(o));
  rep.verdict = Verdict::Manipulable;
  rep.condition = "rotating rival clones over " + std::to_string((n + k - 1) / k) +
                  " voter blocks drags every stronger rival down to " +
                  e.label(c) + "'s score";
  rep.strategies.push_back(std::move(st));
  return rep;
}

inline AnalysisReport maximin_one(const Election& e, int c) {
  auto rep = detail::base_report(e, Rule::maximin(), c, SuccessMode::one());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  rep.verdict = Verdict::NotManipulable;
  rep.condition =
      "keeping every family in ascending order preserves the original "
      "outcome, so no vector succeeds for all orderings";
  return rep;
}

// ---------------------------------------------------------------------------
// Copeland
// ---------------------------------------------------------------------------

struct CopelandSearch {
  long long variable_cap = -1;  // negative picks a cap from the constraints
  std::uint64_t max_nodes = 1'000'000;
};

namespace detail {

struct CopelandLp {
  enum class Outcome { Feasible, Infeasible, Exhausted };
  Outcome outcome = Outcome::Infeasible;
  std::vector<long long> q;  // aligned with ys
};

// Smallest-first search for nonnegative integers q(y) with, for every z,
// sum of q over y beating z minus sum over y beaten by z at least s_z.
inline CopelandLp solve_copeland_lp(const MajorityGraph& g,
                                    const std::vector<int>& ys,
                                    const std::vector<int>& zs,
                                    const std::vector<long long>& s,
                                    const CopelandSearch& search) {
  CopelandLp res;
  long long maxs = 0;
  for (long long v : s) maxs = std::max(maxs, v);
  long long cap = search.variable_cap >= 0
                      ? search.variable_cap
                      : maxs * static_cast<long long>(ys.size());
  std::vector<long long> q(ys.size(), 0);
  // +1 if y beats z, -1 if z beats y
  std::vector<std::vector<int>> sign(ys.size(), std::vector<int>(zs.size(), 0));
  for (std::size_t yi = 0; yi < ys.size(); ++yi)
    for (std::size_t zi = 0; zi < zs.size(); ++zi)
      sign[yi][zi] = g.beats(ys[yi], zs[zi]) ? 1
                     : g.beats(zs[zi], ys[yi]) ? -1
                                               : 0;
  // best[yi][zi]: most constraint zi can still gain from variables yi..end
  std::vector<std::vector<long long>> best(ys.size() + 1,
                                           std::vector<long long>(zs.size(), 0));
  for (int yi = static_cast<int>(ys.size()) - 1; yi >= 0; --yi)
    for (std::size_t zi = 0; zi < zs.size(); ++zi)
      best[yi][zi] = best[yi + 1][zi] + (sign[yi][zi] > 0 ? cap : 0);
  std::uint64_t nodes = 0;
  std::vector<long long> lhs(zs.size(), 0);
  auto rec = [&](auto&& self, std::size_t yi) -> int {
    if (++nodes > search.max_nodes) return -1;
    for (std::size_t zi = 0; zi < zs.size(); ++zi)
      if (lhs[zi] + best[yi][zi] < s[zi]) return 0;
    if (yi == ys.size()) return 1;
    for (long long val = 0; val <= cap; ++val) {
      q[yi] = val;
      for (std::size_t zi = 0; zi < zs.size(); ++zi)
        lhs[zi] += static_cast<long long>(sign[yi][zi]) * val;
      int r = self(self, yi + 1);
      for (std::size_t zi = 0; zi < zs.size(); ++zi)
        lhs[zi] -= static_cast<long long>(sign[yi][zi]) * val;
      if (r != 0) {
        if (r == 1) res.q = q;
        return r;
      }
    }
    q[yi] = 0;
    return 0;
  };
  int r = rec(rec, 0);
  res.outcome = r == 1   ? CopelandLp::Outcome::Feasible
                : r == 0 ? CopelandLp::Outcome::Infeasible
                         : CopelandLp::Outcome::Exhausted;
  return res;
}

}  // namespace detail

// Odd electorate: an uncovered c can always be pushed through with heavy
// cloning of c and of everyone c beats, for every success notion at once.
// Even electorate: after ruling out covered candidates, feasibility of a
// small integer program over the candidates tied with c decides whether some
// ordering works; its solution sizes the clone families.
inline AnalysisReport copeland_strategy(const Election& e, int c,
                                        const CopelandSearch& search = {}) {
  auto rep = detail::base_report(e, Rule::copeland(), c, SuccessMode::zero_plus());
  if (detail::already_winner(e, rep.rule, c, rep)) return rep;
  const int m = e.num_candidates();
  const int n = e.num_voters();
  auto g = majority_graph(e);
  for (int u = 0; u < m; ++u)
    if (u != c && covers(g, u, c)) {
      rep.verdict = Verdict::NotManipulable;
      rep.condition = e.label(u) + " covers " + e.label(c) +
                      ", and no cloning can undo a covering";
      return rep;
    }
  auto [up, down, tied] = udt_partition(g, c);
  if (n % 2 == 1) {
    CloningVector v(m, 1);
    v[c] = detail::checked_count(2ll * m + 1);
    for (int d : down) v[d] = detail::checked_count(4ll * m + 1);
    rep.derived["clones_preferred"] = Rational(2ll * m + 1);
    rep.derived["clones_downset"] = Rational(4ll * m + 1);
    rep.verdict = Verdict::Manipulable;
    rep.condition = e.label(c) + " is uncovered, so large clone families of " +
                    e.label(c) + " and of everyone it beats win under every "
                    "ordering and every success threshold";
    rep.strategies.push_back(
        {v, SuccessMode::one(), AllOrderingsCert{}, "copeland-uncovered"});
    return rep;
  }
  auto sc = scores(e, rep.rule);
  std::vector<int> zs;
  std::vector<long long> s;
  for (int z : up) {
    bool dominates_down = true;
    for (int d : down)
      if (!g.beats(z, d)) {
        dominates_down = false;
        break;
      }
    if (!dominates_down) continue;
    zs.push_back(z);
    s.push_back(sc[z] - sc[c]);
    rep.derived["s_" + e.label(z)] = Rational(sc[z] - sc[c]);
  }
  auto lp = detail::solve_copeland_lp(g, tied, zs, s, search);
  if (lp.outcome == detail::CopelandLp::Outcome::Exhausted) {
    rep.verdict = Verdict::Inconclusive;
    rep.condition = "the search over tie-breaking clone counts hit its node "
                    "budget before deciding feasibility";
    return rep;
  }
  if (lp.outcome == detail::CopelandLp::Outcome::Infeasible) {
    rep.verdict = Verdict::NotManipulable;
    rep.condition = "no clone counts for the candidates tied with " +
                    e.label(c) + " can offset the stronger rivals' lead";
    return rep;
  }
  long long sumq = std::accumulate(lp.q.begin(), lp.q.end(), 0ll);
  long long ec = sumq + 2ll * (m - 1);
  CloningVector v(m, 1);
  v[c] = detail::checked_count(ec + 1);
  for (int d : down) v[d] = detail::checked_count(ec + 1);
  for (std::size_t yi = 0; yi < tied.size(); ++yi) {
    v[tied[yi]] = detail::checked_count(lp.q[yi] + 1);
    rep.derived["q_" + e.label(tied[yi])] = Rational(lp.q[yi]);
  }
  Strategy st{v, SuccessMode::zero_plus(), std::monostate{}, "copeland-balanced"};
  // c's family keeps one fixed order so its front clone sweeps the siblings;
  // every other cloned family plays half the voters forward and half in
  // reverse, tying all sibling matches.
  {
    OrderingAssignment o = identity_assignment(e, v);
    for (int i = n / 2; i < n; ++i)
      for (int f = 0; f < m; ++f) {
        if (f == c || v[f] < 2) continue;
        auto& p = o.perms[i][f];
        std::reverse(p.begin(), p.end());
      }
    detail::attach_witness(e, rep.rule, c, st, std::move(o));
  }
  rep.verdict = Verdict::Manipulable;
  rep.condition = "balanced clone counts for the candidates tied with " +
                  e.label(c) + " make it a winner under a favorable ordering";
  rep.strategies.push_back(std::move(st));
  return rep;
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

inline AnalysisReport analyze(const Election& e, const Rule& r, int c,
                              SuccessMode mode,
                              const CopelandSearch& search = {}) {
  switch (r.kind) {
    case RuleKind::Plurality:
      switch (mode.kind) {
        case SuccessModeKind::ZeroPlus: return plurality_0plus(e, c);
        case SuccessModeKind::One: return plurality_one(e, c);
        case SuccessModeKind::Threshold: return plurality_q(e, c, mode.q);
      }
      break;
    case RuleKind::Veto:
      return veto_strategy(e, c, mode);
    case RuleKind::Borda:
      switch (mode.kind) {
        case SuccessModeKind::ZeroPlus: return borda_0plus_strategy(e, c);
        case SuccessModeKind::One: return borda_clone_c_analysis(e, c);
        case SuccessModeKind::Threshold: {
          auto rep = detail::base_report(e, r, c, mode);
          if (detail::already_winner(e, r, c, rep)) return rep;
          auto zp = borda_0plus_strategy(e, c);
          if (zp.verdict == Verdict::NotManipulable) {
            rep.verdict = Verdict::NotManipulable;
            rep.condition = zp.condition;
            return rep;
          }
          auto one = borda_clone_c_analysis(e, c);
          if (one.verdict == Verdict::Manipulable) {
            rep.verdict = Verdict::Manipulable;
            rep.condition = one.condition;
            rep.derived = one.derived;
            rep.strategies = one.strategies;
            return rep;
          }
          rep.verdict = Verdict::Inconclusive;
          rep.condition = "a favorable ordering exists, but no known clone "
                          "counts guarantee the requested probability";
          return rep;
        }
      }
      break;
    case RuleKind::KApproval:
      switch (mode.kind) {
        case SuccessModeKind::ZeroPlus:
          return kapproval_saturate(e, c, r.approval_k);
        default: {
          auto rep = detail::base_report(e, r, c, mode);
          if (detail::already_winner(e, r, c, rep)) return rep;
          rep.verdict = Verdict::Inconclusive;
          rep.condition = "no efficient test covers this mode; fall back to "
                          "exhaustive search";
          return rep;
        }
      }
    case RuleKind::Runoff:
      return runoff_strategy(e, c, mode);
    case RuleKind::Maximin:
      switch (mode.kind) {
        case SuccessModeKind::ZeroPlus: return maximin_strategy(e, c);
        case SuccessModeKind::One: return maximin_one(e, c);
        case SuccessModeKind::Threshold: {
          auto rep = detail::base_report(e, r, c, mode);
          if (detail::already_winner(e, r, c, rep)) return rep;
          auto zp = maximin_strategy(e, c);
          if (zp.verdict == Verdict::NotManipulable) {
            rep.verdict = Verdict::NotManipulable;
            rep.condition = zp.condition;
            return rep;
          }
          rep.verdict = Verdict::Inconclusive;
          rep.condition = "a favorable ordering exists, but no probability "
                          "guarantee is known for this rule";
          return rep;
        }
      }
      break;
    case RuleKind::Copeland: {
      auto rep = copeland_strategy(e, c, search);
      rep.mode = mode;
      if (mode.kind == SuccessModeKind::ZeroPlus) return rep;
      if (rep.verdict == Verdict::Manipulable && e.num_voters() % 2 == 0) {
        // the even-voter construction only certifies a favorable ordering
        rep.verdict = Verdict::Inconclusive;
        rep.condition = "some ordering makes " + e.label(c) +
                        " win, but no guarantee covers every ordering";
      }
      return rep;
    }
  }
  throw Unsupported("no analyzer for this rule and mode");
}

}  // namespace clonelab
