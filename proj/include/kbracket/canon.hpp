#ifndef KBRACKET_CANON_HPP
#define KBRACKET_CANON_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "kbracket/web.hpp"

namespace kbracket {

/// Canonical labeling of a connected web: sources relabeled 0..n-1 and
/// sinks n..2n-1 so that two connected webs are bipartition-respecting
/// directed-isomorphic exactly when their CanonicalWeb values are equal.
struct CanonicalWeb {
  int n = 0;                              // vertices per part
  std::vector<std::pair<int, int>> edges; // sorted; multiplicity by repetition

  auto operator<=>(const CanonicalWeb&) const = default;

  int vertex_count() const { return 2 * n; }

  /// "n;(s,t),(s,t),..." with pairs sorted lexicographically. This exact
  /// string is the monomial key used when printing module elements.
  std::string str() const;

  Web to_web() const;
};

/// Canonical form of a connected, circle-free web. Invariant under any
/// relabeling of the input; re-canonicalizing the output is the identity.
CanonicalWeb canonical_form(const Web& w);

/// Bipartition-respecting directed isomorphism test; agrees with
/// canonical_form equality by construction.
bool is_isomorphic(const Web& a, const Web& b);

} // namespace kbracket

#endif
