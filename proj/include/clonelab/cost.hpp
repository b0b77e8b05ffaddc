#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "clonelab/cloning.hpp"
#include "clonelab/errors.hpp"

namespace clonelab {

using Cost = long long;

// Sentinel for "this clone cannot be bought at any price".
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

inline Cost add_cost(Cost a, Cost b) {
  if (a == kInfiniteCost || b == kInfiniteCost) return kInfiniteCost;
  if (a > kInfiniteCost - b) return kInfiniteCost;
  return a + b;
}

enum class CostKind { Zero, Unit, General };

// price(j, s) is what the s-th clone of candidate j costs. The first clone is
// the candidate itself and is always free. General tables list marginal costs
// for s = 2..t per candidate; from t on the price stays constant.
struct CostFunction {
  CostKind kind = CostKind::Zero;
  std::vector<std::vector<Cost>> marginal;  // [candidate][s - 2], General only
  int tail = 2;

  static CostFunction zero() { return {}; }

  static CostFunction unit() {
    CostFunction f;
    f.kind = CostKind::Unit;
    return f;
  }

  static CostFunction general(std::vector<std::vector<Cost>> marginal) {
    CostFunction f;
    f.kind = CostKind::General;
    if (marginal.empty()) throw InvalidSize("cost table needs at least one row");
    std::size_t width = marginal.front().size();
    if (width == 0) throw InvalidSize("cost table rows need at least one entry");
    for (const auto& row : marginal) {
      if (row.size() != width)
        throw InvalidSize("cost table rows must all have the same length");
      for (Cost c : row)
        if (c < 0 && c != kInfiniteCost)
          throw InvalidSize("clone prices cannot be negative");
    }
    f.tail = static_cast<int>(width) + 1;
    f.marginal = std::move(marginal);
    return f;
  }

  Cost price(int candidate, int s) const {
    if (s <= 1) return 0;
    switch (kind) {
      case CostKind::Zero: return 0;
      case CostKind::Unit: return 1;
      case CostKind::General: break;
    }
    if (candidate < 0 || candidate >= static_cast<int>(marginal.size()))
      throw UnknownCandidate("cost table has no row for candidate index " +
                             std::to_string(candidate));
    int idx = (s >= tail ? tail : s) - 2;
    return marginal[candidate][idx];
  }

  std::string name() const {
    switch (kind) {
      case CostKind::Zero: return "zero";
      case CostKind::Unit: return "unit";
      case CostKind::General: return "general";
    }
    return "?";
  }
};

inline Cost cost_of(const CostFunction& f, const CloningVector& v) {
  if (f.kind == CostKind::General &&
      f.marginal.size() != v.size())
    throw InvalidSize("cost table does not match the roster size");
  Cost total = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int s = 2; s <= v[j]; ++s)
      total = add_cost(total, f.price(static_cast<int>(j), s));
  return total;
}

// budget == kInfiniteCost means unlimited. An infinitely priced vector is
// never affordable, unlimited budget or not.
inline bool affordable(Cost cost, Cost budget) {
  return cost != kInfiniteCost && cost <= budget;
}

}  // namespace clonelab
