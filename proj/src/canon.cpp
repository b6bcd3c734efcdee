#include "kbracket/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kbracket/error.hpp"

namespace kbracket {

std::string CanonicalWeb::str() const {
  std::string out = std::to_string(n) + ";";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(edges[i].first) + "," +
           std::to_string(edges[i].second) + ")";
  }
  return out;
}

Web CanonicalWeb::to_web() const {
  Web w;
  for (int i = 0; i < n; ++i) w.sources.push_back(i);
  for (int i = n; i < 2 * n; ++i) w.sinks.push_back(i);
  w.edges = edges;
  return w;
}

namespace {

// Individualization-refinement search for the minimum certificate over all
// refinement-discrete labelings. Vertices are indexed 0..2n-1 with sources
// first; a coloring is discrete when every vertex has its own color.
class CanonSearch {
public:
  explicit CanonSearch(const Web& w) : n_(static_cast<int>(w.sources.size())) {
    std::map<int, int> index;
    for (int i = 0; i < n_; ++i) index[w.sources[i]] = i;
    for (int i = 0; i < n_; ++i) index[w.sinks[i]] = n_ + i;
    adjacency_.resize(2 * n_);
    for (const auto& [s, t] : w.edges) {
      int si = index[s], ti = index[t];
      adjacency_[si].push_back(ti);
      adjacency_[ti].push_back(si);
    }
    edge_pairs_.reserve(w.edges.size());
    for (const auto& [s, t] : w.edges) edge_pairs_.emplace_back(index[s], index[t]);
  }

  CanonicalWeb run() {
    std::vector<int> colors(2 * n_);
    for (int v = n_; v < 2 * n_; ++v) colors[v] = 1;
    refine(colors);
    descend(colors);
    return best_;
  }

private:
  void refine(std::vector<int>& colors) const {
    int distinct = count_distinct(colors);
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(2 * n_);
      for (int v = 0; v < 2 * n_; ++v) {
        std::vector<int> nb;
        nb.reserve(adjacency_[v].size() + 1);
        nb.push_back(colors[v]);
        for (int u : adjacency_[v]) nb.push_back(colors[u]);
        std::sort(nb.begin() + 1, nb.end());
        sig[v] = {std::move(nb), v};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      int next = -1;
      std::vector<int> fresh(2 * n_);
      for (int i = 0; i < 2 * n_; ++i) {
        if (i == 0 || sorted[i].first != sorted[i - 1].first) ++next;
        fresh[sorted[i].second] = next;
      }
      colors = std::move(fresh);
      int now = next + 1;
      if (now == distinct) return;
      distinct = now;
    }
  }

  static int count_distinct(const std::vector<int>& colors) {
    auto copy = colors;
    std::sort(copy.begin(), copy.end());
    return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
  }

  void descend(std::vector<int> colors) {
    // Find the first non-singleton color class.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < 2 * n_; ++v) cells[colors[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      consider(colors);
      return;
    }
    for (int v : *target) {
      auto branch = colors;
      for (int& c : branch) c *= 2;
      branch[v] -= 1;
      refine(branch);
      descend(std::move(branch));
    }
  }

  void consider(const std::vector<int>& colors) {
    // Discrete coloring: rank within each part gives the labels.
    std::vector<int> order(2 * n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return colors[a] < colors[b]; });
    std::vector<int> label(2 * n_);
    int next_source = 0, next_sink = n_;
    for (int v : order) label[v] = v < n_ ? next_source++ : next_sink++;
    CanonicalWeb cand;
    cand.n = n_;
    cand.edges.reserve(edge_pairs_.size());
    for (const auto& [si, ti] : edge_pairs_)
      cand.edges.emplace_back(label[si], label[ti]);
    std::sort(cand.edges.begin(), cand.edges.end());
    if (!have_best_ || cand < best_) {
      best_ = std::move(cand);
      have_best_ = true;
    }
  }

  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edge_pairs_;
  CanonicalWeb best_;
  bool have_best_ = false;
};

} // namespace

CanonicalWeb canonical_form(const Web& w) {
  require_valid(w);
  if (w.circles != 0)
    throw Error("canon.circles", "canonical form is defined for circle-free webs");
  auto [parts, circles] = components(w);
  if (parts.size() != 1)
    throw Error("canon.disconnected", "canonical form requires a connected web");
  return CanonSearch(w).run();
}

bool is_isomorphic(const Web& a, const Web& b) {
  if (a.sources.size() != b.sources.size() || a.edges.size() != b.edges.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace kbracket
