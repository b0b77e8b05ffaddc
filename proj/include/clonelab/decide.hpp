#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "clonelab/analyzers.hpp"
#include "clonelab/cloning.hpp"
#include "clonelab/cost.hpp"
#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/oracle.hpp"
#include "clonelab/rules.hpp"

namespace clonelab {

struct DecisionResult {
  enum class Outcome { Yes, No, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Strategy> strategy;  // set on Yes
  Cost cost = 0;                     // meaningful on Yes
  bool optimal = false;              // Yes: no cheaper vector can succeed
  bool within_caps_only = false;     // No: verified only inside search caps
  std::string method;                // "analysis" or "search"
  std::string note;
};

inline std::string outcome_name(DecisionResult::Outcome o) {
  switch (o) {
    case DecisionResult::Outcome::Yes: return "yes";
    case DecisionResult::Outcome::No: return "no";
    case DecisionResult::Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

inline DecisionResult decision_no(std::string note, bool capped = false) {
  DecisionResult d;
  d.outcome = DecisionResult::Outcome::No;
  d.method = "analysis";
  d.within_caps_only = capped;
  d.note = std::move(note);
  return d;
}

inline DecisionResult decision_open(std::string note) {
  DecisionResult d;
  d.outcome = DecisionResult::Outcome::Inconclusive;
  d.method = "analysis";
  d.note = std::move(note);
  return d;
}

inline DecisionResult decision_yes(Strategy st, Cost cost, bool optimal,
                                   std::string note) {
  DecisionResult d;
  d.outcome = DecisionResult::Outcome::Yes;
  d.strategy = std::move(st);
  d.cost = cost;
  d.optimal = optimal;
  d.method = "analysis";
  d.note = std::move(note);
  return d;
}

inline DecisionResult from_oracle(const Election& e, const Rule& r, int c,
                                  SuccessModeKind mode, const CostFunction& costs,
                                  Cost budget, const SearchCaps& caps) {
  auto res = brute_force_search(e, r, c, mode, costs, budget, caps);
  DecisionResult d;
  d.method = "search";
  switch (res.status) {
    case OracleResult::Status::Yes: {
      Strategy st;
      st.vector = *res.vector;
      st.certifies = mode == SuccessModeKind::ZeroPlus ? SuccessMode::zero_plus()
                                                       : SuccessMode::one();
      if (res.witness) st.certificate = WitnessCert{*res.witness};
      else if (res.all_orderings) st.certificate = AllOrderingsCert{};
      st.label = "oracle";
      d.outcome = DecisionResult::Outcome::Yes;
      d.strategy = std::move(st);
      d.cost = res.cost;
      d.optimal = false;  // minimal within caps; larger vectors might be free
      d.note = "cheapest vector found by bounded search";
      return d;
    }
    case OracleResult::Status::No:
      d.outcome = DecisionResult::Outcome::No;
      d.within_caps_only = true;
      d.note = res.note;
      return d;
    case OracleResult::Status::CapExceeded:
      d.outcome = DecisionResult::Outcome::Inconclusive;
      d.note = res.note;
      return d;
  }
  return d;
}

// Threshold questions that only a guarantee-all-orderings search can settle.
inline DecisionResult threshold_via_one_search(const Election& e, const Rule& r,
                                               int c, const CostFunction& costs,
                                               Cost budget,
                                               const SearchCaps& caps) {
  auto d = from_oracle(e, r, c, SuccessModeKind::One, costs, budget, caps);
  if (d.outcome == DecisionResult::Outcome::Yes) {
    d.strategy->certifies = SuccessMode::one();
    d.note = "a vector succeeding for every ordering meets any threshold";
    return d;
  }
  d.outcome = DecisionResult::Outcome::Inconclusive;
  d.note = "no all-orderings vector found; the threshold question stays open";
  return d;
}

// Smallest-cost strategy from a report, if any is affordable.
inline std::optional<std::pair<Strategy, Cost>> cheapest_affordable(
    const AnalysisReport& rep, const CostFunction& costs, Cost budget) {
  std::optional<std::pair<Strategy, Cost>> best;
  for (const auto& st : rep.strategies) {
    Cost cost = cost_of(costs, st.vector);
    if (!affordable(cost, budget)) continue;
    if (!best || cost < best->second) best = {st, cost};
  }
  return best;
}

inline Cost cheapest_cost(const AnalysisReport& rep, const CostFunction& costs) {
  Cost best = kInfiniteCost;
  for (const auto& st : rep.strategies)
    best = std::min(best, cost_of(costs, st.vector));
  return best;
}

inline std::string over_budget_note(Cost cheapest) {
  return "the cheapest successful vector costs " +
         (cheapest == kInfiniteCost ? std::string("infinity")
                                    : std::to_string(cheapest)) +
         ", above the budget";
}

}  // namespace detail

// Decides whether some cloning within the budget reaches the requested
// success mode. Closed-form strategies answer most rule and mode pairs with
// a provably cheapest vector; the remaining cases fall back to the bounded
// exhaustive search, whose No is only as wide as its caps.
inline DecisionResult decide_q_cloning(const Election& e, const Rule& r, int c,
                                       SuccessMode mode,
                                       const CostFunction& costs, Cost budget,
                                       const SearchCaps& caps = SearchCaps{},
                                       const CopelandSearch& search = {}) {
  detail::check_candidate(e, c);
  if (budget < 0) throw InvalidSize("the budget must be nonnegative");
  if (costs.kind == CostKind::General &&
      static_cast<int>(costs.marginal.size()) != e.num_candidates())
    throw InvalidSize("cost table size does not match the candidate roster");
  if (is_winner(e, r, c))
    return detail::decision_no("preferred candidate already wins; nothing to buy");

  auto rep = analyze(e, r, c, mode, search);

  // Rule and mode pairs whose strategy is cheapest under any cost function.
  const bool exact =
      (r.kind == RuleKind::Plurality && mode.kind == SuccessModeKind::ZeroPlus) ||
      (r.kind == RuleKind::Veto && mode.kind != SuccessModeKind::Threshold) ||
      (r.kind == RuleKind::Runoff && mode.kind == SuccessModeKind::ZeroPlus) ||
      (r.kind == RuleKind::Maximin && mode.kind == SuccessModeKind::ZeroPlus) ||
      (r.kind == RuleKind::Borda && mode.kind == SuccessModeKind::ZeroPlus &&
       costs.kind != CostKind::General);

  if (rep.verdict == Verdict::NotManipulable && mode.kind != SuccessModeKind::Threshold) {
    // For these rules the analyzer's No covers every vector, not just a cap.
    if (r.kind == RuleKind::Borda && mode.kind == SuccessModeKind::One)
      return detail::from_oracle(e, r, c, SuccessModeKind::One, costs, budget,
                                 caps);  // only cloning c alone was ruled out
    return detail::decision_no(rep.condition);
  }
  if (rep.verdict == Verdict::NotManipulable) {
    // Threshold mode: a No here always rests on "no ordering ever works".
    return detail::decision_no(rep.condition);
  }

  if (rep.verdict == Verdict::Manipulable) {
    if (exact) {
      if (auto hit = detail::cheapest_affordable(rep, costs, budget))
        return detail::decision_yes(hit->first, hit->second, true, rep.condition);
      return detail::decision_no(
          detail::over_budget_note(detail::cheapest_cost(rep, costs)));
    }
    if (auto hit = detail::cheapest_affordable(rep, costs, budget)) {
      bool trivially_optimal = hit->second == 0;
      return detail::decision_yes(hit->first, hit->second, trivially_optimal,
                                  rep.condition);
    }
    // A cheaper route may exist; ask the search before giving up.
    switch (mode.kind) {
      case SuccessModeKind::ZeroPlus:
        return detail::from_oracle(e, r, c, SuccessModeKind::ZeroPlus, costs,
                                   budget, caps);
      case SuccessModeKind::One:
        return detail::from_oracle(e, r, c, SuccessModeKind::One, costs, budget,
                                   caps);
      case SuccessModeKind::Threshold:
        // Cheaper vectors carry no probability bound, but one that wins for
        // every ordering would still settle the question.
        return detail::threshold_via_one_search(e, r, c, costs, budget, caps);
    }
  }

  // NecessaryConditionFails or Inconclusive: the analyzer could not settle
  // the mode, so only the bounded search can still answer.
  switch (mode.kind) {
    case SuccessModeKind::ZeroPlus:
      return detail::from_oracle(e, r, c, SuccessModeKind::ZeroPlus, costs,
                                 budget, caps);
    case SuccessModeKind::One:
      return detail::from_oracle(e, r, c, SuccessModeKind::One, costs, budget,
                                 caps);
    case SuccessModeKind::Threshold:
      return detail::threshold_via_one_search(e, r, c, costs, budget, caps);
  }
  return detail::decision_open("unreachable");
}

}  // namespace clonelab
