#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"

namespace clonelab {

// Strict-majority relation of an election. Pairs with equal pairwise support
// are ties (neither direction present).
class MajorityGraph {
 public:
  explicit MajorityGraph(int m) : m_(m), beats_(m, std::vector<char>(m, 0)) {
    if (m < 1) throw InvalidSize("majority graph needs at least one vertex");
  }

  int size() const { return m_; }
  bool beats(int a, int b) const { return beats_.at(a).at(b); }
  bool ties(int a, int b) const { return a != b && !beats(a, b) && !beats(b, a); }

  void add_edge(int a, int b) {
    if (a == b) throw SameCandidate("self edge");
    if (beats_[b][a]) throw InvalidElection("conflicting edge");
    beats_[a][b] = 1;
  }

  bool is_tournament() const {
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b)
        if (!beats_[a][b] && !beats_[b][a]) return false;
    return true;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        if (beats_[a][b]) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const MajorityGraph& x, const MajorityGraph& y) {
    return x.m_ == y.m_ && x.beats_ == y.beats_;
  }

 private:
  int m_;
  std::vector<std::vector<char>> beats_;
};

inline MajorityGraph majority_graph(const Election& e) {
  auto w = pairwise_matrix(e);
  MajorityGraph g(e.num_candidates());
  for (int a = 0; a < e.num_candidates(); ++a)
    for (int b = 0; b < e.num_candidates(); ++b)
      if (a != b && w[a][b] > w[b][a]) g.add_edge(a, b);
  return g;
}

struct UDT {
  std::vector<int> up;    // candidates beating c
  std::vector<int> down;  // candidates c beats
  std::vector<int> tied;
};

inline UDT udt_partition(const MajorityGraph& g, int c) {
  if (c < 0 || c >= g.size()) throw UnknownCandidate("vertex out of range");
  UDT p;
  for (int a = 0; a < g.size(); ++a) {
    if (a == c) continue;
    if (g.beats(a, c)) p.up.push_back(a);
    else if (g.beats(c, a)) p.down.push_back(a);
    else p.tied.push_back(a);
  }
  return p;
}

// u covers c when u beats c, dominates everything c dominates, and is beaten
// only by candidates that also beat c. On tournaments this is the usual
// covering relation.
inline bool covers(const MajorityGraph& g, int u, int c) {
  if (u == c) throw SameCandidate("covering is irreflexive");
  if (!g.beats(u, c)) return false;
  for (int a = 0; a < g.size(); ++a) {
    if (a == u || a == c) continue;
    if (g.beats(c, a) && !g.beats(u, a)) return false;  // D(c) subset of D(u)
    if (g.beats(a, u) && !g.beats(a, c)) return false;  // U(u) subset of U(c)
  }
  return true;
}

inline std::vector<int> uncovered_set(const MajorityGraph& g) {
  std::vector<int> out;
  for (int c = 0; c < g.size(); ++c) {
    bool covered = false;
    for (int u = 0; u < g.size() && !covered; ++u)
      if (u != c && covers(g, u, c)) covered = true;
    if (!covered) out.push_back(c);
  }
  return out;
}

enum class Parity { Even, Odd };

struct MajoritySpec {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> beats;  // (winner, loser) index pairs
  Parity parity = Parity::Even;
};

inline MajorityGraph graph_of_spec(const MajoritySpec& spec) {
  MajorityGraph g(static_cast<int>(spec.labels.size()));
  for (auto [a, b] : spec.beats) g.add_edge(a, b);
  return g;
}

// Realizes a majority spec as a profile. Each requested edge (a, b)
// contributes a canceling voter pair that shifts only that pair's margin:
// one voter ranks a > b > rest-in-roster-order, the other ranks the rest in
// reverse roster order above a > b. An edgeless spec gets the two-voter tie
// gadget (roster order plus its reverse). Odd parity requires a full
// tournament and appends one roster-order ballot, turning the +-2 margins
// into +-1/+-3 without flipping any of them.
inline Election mcgarvey_realize(const MajoritySpec& spec) {
  const int m = static_cast<int>(spec.labels.size());
  if (m == 0) throw InvalidSize("empty candidate roster");
  MajorityGraph g = graph_of_spec(spec);  // validates edges
  if (spec.parity == Parity::Odd && m > 1 && !g.is_tournament())
    throw UnrealizableParity("odd profiles cannot realize ties");

  std::vector<std::vector<int>> votes;
  for (auto [a, b] : spec.beats) {
    std::vector<int> rest;
    for (int x = 0; x < m; ++x)
      if (x != a && x != b) rest.push_back(x);
    std::vector<int> v1{a, b};
    v1.insert(v1.end(), rest.begin(), rest.end());
    std::vector<int> v2(rest.rbegin(), rest.rend());
    v2.push_back(a);
    v2.push_back(b);
    votes.push_back(std::move(v1));
    votes.push_back(std::move(v2));
  }
  if (votes.empty()) {
    std::vector<int> fwd(m), rev(m);
    for (int x = 0; x < m; ++x) fwd[x] = x;
    for (int x = 0; x < m; ++x) rev[x] = m - 1 - x;
    votes.push_back(fwd);
    votes.push_back(rev);
  }
  if (spec.parity == Parity::Odd) {
    std::vector<int> fwd(m);
    for (int x = 0; x < m; ++x) fwd[x] = x;
    votes.push_back(fwd);
  }
  return Election(spec.labels, votes);
}

// k candidates a1..ak; voter i ranks a_i > a_{i+1} > ... > a_k > a_1 > ...
// Every pairwise support is either 1 or k-1, so every Maximin score is 1,
// and inserting the profile as a clone block preserves that property.
inline Election k_cyclic_profile(int k) {
  if (k < 1) throw InvalidSize("cyclic profile needs k >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<std::vector<int>> votes;
  for (int i = 0; i < k; ++i) {
    std::vector<int> v;
    for (int j = 0; j < k; ++j) v.push_back((i + j) % k);
    votes.push_back(std::move(v));
  }
  return Election(labels, votes);
}

}  // namespace clonelab
