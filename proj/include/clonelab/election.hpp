#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clonelab/errors.hpp"

namespace clonelab {

// Candidate labels may not contain the characters used as separators in the
// file formats.
inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch == '>' || ch == ',' || ch == ':') return false;
    if (ch == '\n' || ch == '\r' || ch == '\t') return false;
  }
  return s.front() != ' ' && s.back() != ' ';
}

// A profile of complete linear orders over a fixed candidate roster.
// Candidates are identified positionally; labels are carried for I/O.
class Election {
 public:
  Election(std::vector<std::string> labels, std::vector<std::vector<int>> votes)
      : labels_(std::move(labels)), votes_(std::move(votes)) {
    const int m = static_cast<int>(labels_.size());
    if (m == 0) throw InvalidElection("election needs at least one candidate");
    if (votes_.empty()) throw InvalidElection("election needs at least one voter");
    for (int i = 0; i < m; ++i) {
      if (!valid_label(labels_[i]))
        throw InvalidElection("bad candidate label '" + labels_[i] + "'");
      for (int j = i + 1; j < m; ++j)
        if (labels_[i] == labels_[j])
          throw InvalidElection("duplicate candidate label '" + labels_[i] + "'");
    }
    std::vector<char> seen(m);
    for (const auto& vote : votes_) {
      if (static_cast<int>(vote.size()) != m)
        throw InvalidElection("vote does not rank the full roster");
      std::fill(seen.begin(), seen.end(), 0);
      for (int c : vote) {
        if (c < 0 || c >= m || seen[c])
          throw InvalidElection("vote is not a permutation of the roster");
        seen[c] = 1;
      }
    }
  }

  int num_candidates() const { return static_cast<int>(labels_.size()); }
  int num_voters() const { return static_cast<int>(votes_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int c) const { return labels_.at(c); }
  const std::vector<std::vector<int>>& votes() const { return votes_; }
  const std::vector<int>& vote(int i) const { return votes_.at(i); }

  int candidate(const std::string& label) const {
    for (int c = 0; c < num_candidates(); ++c)
      if (labels_[c] == label) return c;
    throw UnknownCandidate("unknown candidate '" + label + "'");
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> votes_;
};

// positions[i][c] = rank of candidate c in vote i (0 = best).
inline std::vector<std::vector<int>> position_matrix(const Election& e) {
  std::vector<std::vector<int>> pos(e.num_voters(),
                                    std::vector<int>(e.num_candidates()));
  for (int i = 0; i < e.num_voters(); ++i)
    for (int r = 0; r < e.num_candidates(); ++r) pos[i][e.vote(i)[r]] = r;
  return pos;
}

// W[c][a] = number of voters ranking c above a.
using PairwiseMatrix = std::vector<std::vector<int>>;

inline PairwiseMatrix pairwise_matrix(const Election& e) {
  const int m = e.num_candidates();
  PairwiseMatrix w(m, std::vector<int>(m, 0));
  auto pos = position_matrix(e);
  for (int i = 0; i < e.num_voters(); ++i)
    for (int c = 0; c < m; ++c)
      for (int a = 0; a < m; ++a)
        if (c != a && pos[i][c] < pos[i][a]) ++w[c][a];
  return w;
}

inline bool is_pareto_undominated(const PairwiseMatrix& w, int c) {
  const int m = static_cast<int>(w.size());
  if (c < 0 || c >= m) throw UnknownCandidate("candidate index out of range");
  for (int a = 0; a < m; ++a)
    if (a != c && w[c][a] < 1) return false;
  return true;
}

inline bool is_pareto_undominated(const Election& e, int c) {
  return is_pareto_undominated(pairwise_matrix(e), c);
}

struct CondorcetStatus {
  std::optional<int> winner;
  std::optional<int> loser;
};

inline CondorcetStatus condorcet_status(const Election& e) {
  const int m = e.num_candidates();
  auto w = pairwise_matrix(e);
  CondorcetStatus st;
  for (int c = 0; c < m; ++c) {
    bool beats_all = true, loses_all = true;
    for (int a = 0; a < m; ++a) {
      if (a == c) continue;
      if (w[c][a] <= w[a][c]) beats_all = false;
      if (w[a][c] <= w[c][a]) loses_all = false;
    }
    if (m > 1 && beats_all) st.winner = c;
    if (m > 1 && loses_all) st.loser = c;
  }
  if (m == 1) st.winner = 0;
  return st;
}

}  // namespace clonelab
