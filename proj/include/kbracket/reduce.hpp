#ifndef KBRACKET_REDUCE_HPP
#define KBRACKET_REDUCE_HPP

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kbracket/module_element.hpp"
#include "kbracket/web.hpp"

namespace kbracket {

struct ReductionStrategy {
  bool seeded = false;
  std::uint64_t seed = 0;

  static ReductionStrategy deterministic() { return {}; }
  static ReductionStrategy random(std::uint64_t seed) { return {true, seed}; }
};

/// Removes the bigon's two vertices; the two surviving edges splice into one
/// (or into a circle in the theta case). Coefficient is always bigon_value().
std::pair<LaurentPoly, Web> reduce_bigon(const Web& w, const BigonSite& site);

/// Deletes the 4-cycle and reconnects the four external edges in the two
/// source-to-sink pairings. Chains closing on themselves become circles.
/// Both coefficients are 1.
std::vector<std::pair<LaurentPoly, Web>> resolve_square(const Web& w, const SquareSite& site);

/// Converts circles into the loop-value factor.
std::pair<LaurentPoly, Web> strip_circles(const Web& w);

using TraceSink = std::function<void(const std::string&)>;

/// Worklist expansion into the fully reduced element: every monomial factor
/// is connected with girth >= 6. Result is strategy-independent (confluence).
ModuleElement normal_form(const Web& w,
                          const ReductionStrategy& strategy = ReductionStrategy::deterministic(),
                          const TraceSink& trace = nullptr);

/// Memo table keyed by the canonical form of connected webs. Shared across
/// threads by the state-sum evaluator.
class ReduceCache {
public:
  bool lookup(const std::string& key, ModuleElement& out) const;
  void store(const std::string& key, const ModuleElement& value);
  std::size_t size() const;

private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, ModuleElement> entries_;
};

/// Deterministic reduction that splits into connected components and memoizes
/// each component's normal form. Equal to normal_form on every input.
ModuleElement reduce_full(const Web& w, ReduceCache* cache = nullptr);

} // namespace kbracket

#endif
