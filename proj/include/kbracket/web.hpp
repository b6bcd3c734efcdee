#ifndef KBRACKET_WEB_HPP
#define KBRACKET_WEB_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kbracket {

/// Closed trivalent bipartite directed multigraph plus a count of
/// vertex-free circles. Every edge runs from a source (out-degree 3,
/// in-degree 0) to a sink (in-degree 3, out-degree 0). Edge instances are
/// identified by their index in `edges`, so parallel copies can be named
/// individually by rewrite sites.
struct Web {
  std::vector<int> sources; // sorted, unique
  std::vector<int> sinks;   // sorted, unique
  std::vector<std::pair<int, int>> edges; // (source id, sink id); index = handle
  int circles = 0;

  bool operator==(const Web&) const = default;

  bool is_source(int v) const;
  bool is_sink(int v) const;
  bool empty() const { return sources.empty() && sinks.empty() && circles == 0; }
  int vertex_count() const { return static_cast<int>(sources.size() + sinks.size()); }
};

/// Web with `n` circles and no vertices.
Web circle_web(int n = 1);

/// Two vertices joined by three parallel edges.
Web theta_web();

/// A pair of parallel edge instances between one source/sink pair.
struct BigonSite {
  int source = -1;
  int sink = -1;
  int edge_a = -1; // handle, edge_a < edge_b
  int edge_b = -1;

  bool operator==(const BigonSite&) const = default;
};

/// A 4-cycle source1 -e1-> sink1 <-e2- source2 -e3-> sink2 <-e4- source1
/// on four distinct vertices, with its four edge instances.
struct SquareSite {
  int source1 = -1, sink1 = -1, source2 = -1, sink2 = -1;
  int e1 = -1, e2 = -1, e3 = -1, e4 = -1;

  bool operator==(const SquareSite&) const = default;
};

/// Checks all Web invariants; returns the first violation as
/// "what: detail", or nullopt when the web is valid.
std::optional<std::string> validate(const Web& w);

/// Throws Error("web.invalid", ...) when validate() reports a violation.
void require_valid(const Web& w);

/// One site per unordered pair of parallel edge instances, in the
/// deterministic site order (sorted vertex ids, then handles).
std::vector<BigonSite> find_bigons(const Web& w);

/// All 4-cycles on four distinct vertices, one site per set of four edge
/// instances (rotations/reflections of the same cycle are not repeated).
std::vector<SquareSite> find_squares(const Web& w);

/// Splits into connected vertex-bearing sub-webs (each with circles=0)
/// plus the circle count. Vertex ids are preserved.
std::pair<std::vector<Web>, int> components(const Web& w);

/// Vertex-disjoint union; ids of `b` are shifted above those of `a`.
Web disjoint_union(const Web& a, const Web& b);

constexpr int kInfiniteGirth = -1;

/// Length of the shortest cycle in the underlying multigraph (parallel
/// edges give 2); kInfiniteGirth if acyclic. Rejects vertex-free webs.
int web_girth(const Web& w);

} // namespace kbracket

#endif
