#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"

namespace clonelab {

enum class RuleKind { Plurality, Veto, Borda, KApproval, Runoff, Maximin, Copeland };

struct Rule {
  RuleKind kind = RuleKind::Plurality;
  int approval_k = 0;

  static Rule plurality() { return {RuleKind::Plurality, 0}; }
  static Rule veto() { return {RuleKind::Veto, 0}; }
  static Rule borda() { return {RuleKind::Borda, 0}; }
  static Rule k_approval(int k) {
    if (k < 1) throw InvalidSize("k-approval needs k >= 1");
    return {RuleKind::KApproval, k};
  }
  static Rule runoff() { return {RuleKind::Runoff, 0}; }
  static Rule maximin() { return {RuleKind::Maximin, 0}; }
  static Rule copeland() { return {RuleKind::Copeland, 0}; }

  bool score_based() const { return kind != RuleKind::Runoff; }

  std::string name() const {
    switch (kind) {
      case RuleKind::Plurality: return "plurality";
      case RuleKind::Veto: return "veto";
      case RuleKind::Borda: return "borda";
      case RuleKind::KApproval: return std::to_string(approval_k) + "-approval";
      case RuleKind::Runoff: return "runoff";
      case RuleKind::Maximin: return "maximin";
      case RuleKind::Copeland: return "copeland";
    }
    return "?";
  }
};

using ScoreTable = std::vector<long long>;

inline ScoreTable scores(const Election& e, const Rule& r) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  ScoreTable sc(m, 0);
  switch (r.kind) {
    case RuleKind::Plurality:
      for (const auto& v : e.votes()) ++sc[v.front()];
      return sc;
    case RuleKind::Veto: {
      for (const auto& v : e.votes()) ++sc[v.back()];
      for (int c = 0; c < m; ++c) sc[c] = n - sc[c];
      return sc;
    }
    case RuleKind::Borda:
      for (const auto& v : e.votes())
        for (int rank = 0; rank < m; ++rank) sc[v[rank]] += m - 1 - rank;
      return sc;
    case RuleKind::KApproval: {
      const int k = std::min(r.approval_k, m);
      for (const auto& v : e.votes())
        for (int rank = 0; rank < k; ++rank) ++sc[v[rank]];
      return sc;
    }
    case RuleKind::Maximin: {
      auto w = pairwise_matrix(e);
      for (int c = 0; c < m; ++c) {
        long long best = n;  // a lone candidate scores n
        for (int a = 0; a < m; ++a)
          if (a != c) best = std::min<long long>(best, w[c][a]);
        sc[c] = best;
      }
      return sc;
    }
    case RuleKind::Copeland: {
      auto w = pairwise_matrix(e);
      for (int c = 0; c < m; ++c) {
        long long total = 0;
        for (int a = 0; a < m; ++a) {
          if (a == c) continue;
          if (w[c][a] > w[a][c]) ++total;
          else if (w[c][a] < w[a][c]) --total;
        }
        sc[c] = total;
      }
      return sc;
    }
    case RuleKind::Runoff:
      throw NotScoreBased("plurality with runoff has no score table");
  }
  throw Error("unreachable");
}

inline std::vector<int> runoff_winners(const Election& e) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  if (m == 1) return {0};
  auto sp = scores(e, Rule::plurality());
  auto w = pairwise_matrix(e);
  const int need = (n + 1) / 2;
  std::vector<char> win(m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      long long lim = std::min(sp[x], sp[y]);
      bool achievable = true;
      for (int z = 0; z < m && achievable; ++z)
        if (z != x && z != y && sp[z] > lim) achievable = false;
      if (!achievable) continue;
      if (w[x][y] >= need) win[x] = 1;
      if (w[y][x] >= need) win[y] = 1;
    }
  }
  std::vector<int> out;
  for (int c = 0; c < m; ++c)
    if (win[c]) out.push_back(c);
  return out;
}

inline std::vector<int> winners(const Election& e, const Rule& r) {
  if (r.kind == RuleKind::Runoff) return runoff_winners(e);
  auto sc = scores(e, r);
  long long best = *std::max_element(sc.begin(), sc.end());
  std::vector<int> out;
  for (int c = 0; c < e.num_candidates(); ++c)
    if (sc[c] == best) out.push_back(c);
  return out;
}

inline bool is_winner(const Election& e, const Rule& r, int c) {
  auto w = winners(e, r);
  return std::find(w.begin(), w.end(), c) != w.end();
}

}  // namespace clonelab
