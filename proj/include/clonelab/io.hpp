#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clonelab/cost.hpp"
#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/tournament.hpp"

namespace clonelab {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Yields (line number, trimmed content) for every significant line.
inline std::vector<std::pair<int, std::string>> significant_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int lineno = 0;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(lineno, std::move(t));
  }
  if (out.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "file has no content");
  return out;
}

// "directive: rest", or empty directive when there is no colon.
inline std::pair<std::string, std::string> split_directive(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return {"", s};
  return {trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

inline std::vector<std::string> parse_roster(int lineno, const std::string& rest) {
  if (rest.empty()) throw ParseError(lineno, "empty candidate roster");
  std::vector<std::string> labels;
  for (const auto& piece : split(rest, ',')) {
    std::string name = trim(piece);
    if (!valid_label(name))
      throw ParseError(lineno, "bad candidate name '" + name + "'");
    for (const auto& seen : labels)
      if (seen == name)
        throw ParseError(lineno, "duplicate candidate '" + name + "'");
    labels.push_back(std::move(name));
  }
  return labels;
}

inline int roster_index(const std::vector<std::string>& labels,
                        const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return -1;
}

inline long long parse_count(int lineno, const std::string& s,
                             const std::string& what) {
  if (s.empty()) throw ParseError(lineno, "missing " + what);
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(lineno, "bad " + what + " '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad " + what + " '" + s + "'");
  }
}

}  // namespace detail

// Parses the election format: one `candidates:` roster line, then one ballot
// per line as `weight: name > name > ...` ranking the full roster. Blank
// lines and full-line `#` comments are ignored. Weighted ballots expand to
// that many identical voters, in file order.
inline Election parse_election(const std::string& text) {
  auto lines = detail::significant_lines(text);
  auto [dir0, rest0] = detail::split_directive(lines[0].second);
  if (dir0 != "candidates")
    throw ParseError(lines[0].first, "expected a 'candidates:' line first");
  auto labels = detail::parse_roster(lines[0].first, rest0);
  const int m = static_cast<int>(labels.size());
  std::vector<std::vector<int>> votes;
  constexpr long long kMaxVoters = 1'000'000;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto [lineno, content] = lines[li];
    auto [dir, rest] = detail::split_directive(content);
    if (dir == "candidates")
      throw ParseError(lineno, "unexpected second 'candidates:' line");
    long long weight = detail::parse_count(lineno, dir, "ballot weight");
    if (weight == 0) throw ParseError(lineno, "zero-weight ballot");
    std::vector<int> vote;
    std::vector<char> seen(m, 0);
    for (const auto& piece : detail::split(rest, '>')) {
      std::string name = detail::trim(piece);
      int idx = detail::roster_index(labels, name);
      if (idx < 0) throw ParseError(lineno, "unknown candidate '" + name + "'");
      if (seen[idx])
        throw ParseError(lineno, "candidate '" + name + "' repeated in ballot");
      seen[idx] = 1;
      vote.push_back(idx);
    }
    if (static_cast<int>(vote.size()) < m)
      for (int cand = 0; cand < m; ++cand)
        if (!seen[cand])
          throw ParseError(lineno, "ballot does not rank candidate '" +
                                       labels[cand] + "'");
    if (static_cast<long long>(votes.size()) + weight > kMaxVoters)
      throw ParseError(lineno, "too many voters after weight expansion");
    for (long long w = 0; w < weight; ++w) votes.push_back(vote);
  }
  if (votes.empty())
    throw ParseError(lines.back().first, "no ballots after the roster");
  return Election(std::move(labels), std::move(votes));
}

// Identical ballots are merged into one weighted line, in order of first
// appearance, so a parse and serialize round trip is stable.
inline std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "candidates: ";
  for (int c = 0; c < e.num_candidates(); ++c) {
    if (c > 0) out << ", ";
    out << e.label(c);
  }
  out << "\n";
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<std::pair<std::vector<int>, long long>> groups;
  for (int i = 0; i < e.num_voters(); ++i) {
    const auto& v = e.vote(i);
    auto it = slot.find(v);
    if (it == slot.end()) {
      slot.emplace(v, groups.size());
      groups.emplace_back(v, 1);
    } else {
      ++groups[it->second].second;
    }
  }
  for (const auto& [vote, weight] : groups) {
    out << weight << ": ";
    for (std::size_t r = 0; r < vote.size(); ++r) {
      if (r > 0) out << " > ";
      out << e.label(vote[r]);
    }
    out << "\n";
  }
  return out.str();
}

// Parses the majority spec format: a `candidates:` roster, `beats: x y`
// lines for strict pairwise wins (unlisted pairs are ties) and an optional
// `parity: even|odd` line, default even. Names here may not contain spaces.
inline MajoritySpec parse_majority_spec(const std::string& text) {
  auto lines = detail::significant_lines(text);
  auto [dir0, rest0] = detail::split_directive(lines[0].second);
  if (dir0 != "candidates")
    throw ParseError(lines[0].first, "expected a 'candidates:' line first");
  MajoritySpec spec;
  spec.labels = detail::parse_roster(lines[0].first, rest0);
  for (const auto& name : spec.labels)
    if (name.find(' ') != std::string::npos)
      throw ParseError(lines[0].first,
                       "names in a majority spec may not contain spaces");
  bool parity_seen = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto [lineno, content] = lines[li];
    auto [dir, rest] = detail::split_directive(content);
    if (dir == "beats") {
      auto ws = detail::words(rest);
      if (ws.size() != 2)
        throw ParseError(lineno, "expected 'beats: winner loser'");
      int a = detail::roster_index(spec.labels, ws[0]);
      int b = detail::roster_index(spec.labels, ws[1]);
      if (a < 0) throw ParseError(lineno, "unknown candidate '" + ws[0] + "'");
      if (b < 0) throw ParseError(lineno, "unknown candidate '" + ws[1] + "'");
      if (a == b) throw ParseError(lineno, "a candidate cannot beat itself");
      for (auto [x, y] : spec.beats) {
        if (x == a && y == b) throw ParseError(lineno, "duplicate edge");
        if (x == b && y == a)
          throw ParseError(lineno, "edge contradicts an earlier one");
      }
      spec.beats.emplace_back(a, b);
    } else if (dir == "parity") {
      if (parity_seen) throw ParseError(lineno, "duplicate parity line");
      parity_seen = true;
      if (rest == "even") spec.parity = Parity::Even;
      else if (rest == "odd") spec.parity = Parity::Odd;
      else throw ParseError(lineno, "parity must be 'even' or 'odd'");
    } else {
      throw ParseError(lineno, "unrecognized directive '" + dir + "'");
    }
  }
  return spec;
}

// Parses the clone cost format against a known roster: a `t: T` header with
// T >= 2, then `clone-cost: name c2 ... cT` rows giving the price of the
// 2nd..Tth clone ('inf' allowed); from the Tth clone on the price stays
// constant. Candidates without a row get all-zero prices. Names here may
// not contain spaces.
inline CostFunction parse_cost_function(const std::string& text,
                                        const Election& e) {
  auto lines = detail::significant_lines(text);
  auto [dir0, rest0] = detail::split_directive(lines[0].second);
  if (dir0 != "t") throw ParseError(lines[0].first, "expected a 't:' line first");
  long long t = detail::parse_count(lines[0].first, rest0, "tail index");
  if (t < 2) throw ParseError(lines[0].first, "the tail index must be at least 2");
  if (t > 64) throw ParseError(lines[0].first, "the tail index is unreasonably large");
  const int width = static_cast<int>(t) - 1;
  std::vector<std::vector<Cost>> marginal(
      e.num_candidates(), std::vector<Cost>(width, 0));
  std::vector<char> seen(e.num_candidates(), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto [lineno, content] = lines[li];
    auto [dir, rest] = detail::split_directive(content);
    if (dir != "clone-cost")
      throw ParseError(lineno, "unrecognized directive '" + dir + "'");
    auto ws = detail::words(rest);
    if (ws.empty()) throw ParseError(lineno, "missing candidate name");
    int idx = detail::roster_index(e.labels(), ws[0]);
    if (idx < 0) throw ParseError(lineno, "unknown candidate '" + ws[0] + "'");
    if (seen[idx])
      throw ParseError(lineno, "duplicate cost row for '" + ws[0] + "'");
    seen[idx] = 1;
    if (static_cast<int>(ws.size()) - 1 != width)
      throw ParseError(lineno, "expected " + std::to_string(width) +
                                   " cost entries after the name");
    for (int s = 0; s < width; ++s) {
      if (ws[s + 1] == "inf") {
        marginal[idx][s] = kInfiniteCost;
      } else {
        marginal[idx][s] = detail::parse_count(lineno, ws[s + 1], "cost entry");
      }
    }
  }
  return CostFunction::general(std::move(marginal));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace clonelab
