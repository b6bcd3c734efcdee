#include "kbracket/web.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "kbracket/error.hpp"

namespace kbracket {

bool Web::is_source(int v) const {
  return std::binary_search(sources.begin(), sources.end(), v);
}

bool Web::is_sink(int v) const {
  return std::binary_search(sinks.begin(), sinks.end(), v);
}

Web circle_web(int n) {
  Web w;
  w.circles = n;
  return w;
}

Web theta_web() {
  Web w;
  w.sources = {0};
  w.sinks = {1};
  w.edges = {{0, 1}, {0, 1}, {0, 1}};
  return w;
}

std::optional<std::string> validate(const Web& w) {
  if (w.circles < 0) return "circles: negative circle count";
  for (const auto& part : {w.sources, w.sinks})
    for (size_t i = 1; i < part.size(); ++i)
      if (part[i] <= part[i - 1]) return "part: vertex ids not sorted and unique";
  for (int s : w.sources)
    if (std::binary_search(w.sinks.begin(), w.sinks.end(), s))
      return "part: vertex " + std::to_string(s) + " is in both parts";
  if (w.sources.size() != w.sinks.size()) return "part: source and sink counts differ";
  std::map<int, int> out_deg, in_deg;
  for (const auto& [s, t] : w.edges) {
    if (!w.is_source(s))
      return "orientation: edge tail " + std::to_string(s) + " is not a source";
    if (!w.is_sink(t))
      return "orientation: edge head " + std::to_string(t) + " is not a sink";
    ++out_deg[s];
    ++in_deg[t];
  }
  for (int s : w.sources)
    if (out_deg[s] != 3)
      return "degree: source " + std::to_string(s) + " has out-degree " +
             std::to_string(out_deg[s]);
  for (int t : w.sinks)
    if (in_deg[t] != 3)
      return "degree: sink " + std::to_string(t) + " has in-degree " +
             std::to_string(in_deg[t]);
  return std::nullopt;
}

void require_valid(const Web& w) {
  if (auto err = validate(w)) throw Error("web.invalid", *err);
}

std::vector<BigonSite> find_bigons(const Web& w) {
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int h = 0; h < static_cast<int>(w.edges.size()); ++h)
    parallel[w.edges[h]].push_back(h);
  std::vector<BigonSite> sites;
  for (const auto& [uv, handles] : parallel) {
    for (size_t i = 0; i < handles.size(); ++i)
      for (size_t j = i + 1; j < handles.size(); ++j)
        sites.push_back({uv.first, uv.second, handles[i], handles[j]});
  }
  auto key = [](const BigonSite& b) {
    return std::tuple{std::min(b.source, b.sink), std::max(b.source, b.sink),
                      b.edge_a, b.edge_b};
  };
  std::sort(sites.begin(), sites.end(),
            [&](const BigonSite& a, const BigonSite& b) { return key(a) < key(b); });
  return sites;
}

std::vector<SquareSite> find_squares(const Web& w) {
  std::map<std::pair<int, int>, std::vector<int>> instances;
  for (int h = 0; h < static_cast<int>(w.edges.size()); ++h)
    instances[w.edges[h]].push_back(h);
  std::vector<SquareSite> sites;
  const auto& src = w.sources;
  const auto& snk = w.sinks;
  for (size_t a = 0; a < src.size(); ++a)
    for (size_t b = a + 1; b < src.size(); ++b)
      for (size_t c = 0; c < snk.size(); ++c)
        for (size_t d = c + 1; d < snk.size(); ++d) {
          int s1 = src[a], s2 = src[b], t1 = snk[c], t2 = snk[d];
          auto i11 = instances.find({s1, t1});
          auto i21 = instances.find({s2, t1});
          auto i22 = instances.find({s2, t2});
          auto i12 = instances.find({s1, t2});
          if (i11 == instances.end() || i21 == instances.end() ||
              i22 == instances.end() || i12 == instances.end())
            continue;
          for (int e1 : i11->second)
            for (int e2 : i21->second)
              for (int e3 : i22->second)
                for (int e4 : i12->second)
                  sites.push_back({s1, t1, s2, t2, e1, e2, e3, e4});
        }
  auto key = [](const SquareSite& s) {
    std::array<int, 4> ids{s.source1, s.sink1, s.source2, s.sink2};
    std::sort(ids.begin(), ids.end());
    return std::tuple{ids, s.e1, s.e2, s.e3, s.e4};
  };
  std::sort(sites.begin(), sites.end(),
            [&](const SquareSite& x, const SquareSite& y) { return key(x) < key(y); });
  return sites;
}

std::pair<std::vector<Web>, int> components(const Web& w) {
  std::map<int, std::vector<int>> incident; // vertex -> edge handles
  for (int h = 0; h < static_cast<int>(w.edges.size()); ++h) {
    incident[w.edges[h].first].push_back(h);
    incident[w.edges[h].second].push_back(h);
  }
  std::set<int> seen;
  std::vector<Web> parts;
  auto all_vertices = w.sources;
  all_vertices.insert(all_vertices.end(), w.sinks.begin(), w.sinks.end());
  std::sort(all_vertices.begin(), all_vertices.end());
  for (int start : all_vertices) {
    if (seen.count(start)) continue;
    std::set<int> verts;
    std::set<int> handles;
    std::deque<int> queue{start};
    seen.insert(start);
    verts.insert(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int h : incident[v]) {
        handles.insert(h);
        for (int u : {w.edges[h].first, w.edges[h].second})
          if (!seen.count(u)) {
            seen.insert(u);
            verts.insert(u);
            queue.push_back(u);
          }
      }
    }
    Web part;
    for (int v : verts)
      (w.is_source(v) ? part.sources : part.sinks).push_back(v);
    for (int h : handles) part.edges.push_back(w.edges[h]);
    parts.push_back(std::move(part));
  }
  return {parts, w.circles};
}

Web disjoint_union(const Web& a, const Web& b) {
  int shift = 0;
  for (int v : a.sources) shift = std::max(shift, v + 1);
  for (int v : a.sinks) shift = std::max(shift, v + 1);
  Web out = a;
  for (int v : b.sources) out.sources.push_back(v + shift);
  for (int v : b.sinks) out.sinks.push_back(v + shift);
  for (const auto& [s, t] : b.edges) out.edges.emplace_back(s + shift, t + shift);
  std::sort(out.sources.begin(), out.sources.end());
  std::sort(out.sinks.begin(), out.sinks.end());
  out.circles = a.circles + b.circles;
  return out;
}

int web_girth(const Web& w) {
  if (w.vertex_count() == 0)
    throw Error("web.vertex-free", "girth is undefined for a vertex-free web");
  std::map<std::pair<int, int>, int> mult;
  for (const auto& [s, t] : w.edges) ++mult[{s, t}];
  for (const auto& [_, m] : mult)
    if (m >= 2) return 2;
  // Simple graph now: shortest cycle through each edge via BFS that skips it.
  std::map<int, std::vector<int>> adj;
  for (const auto& [s, t] : w.edges) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  int best = kInfiniteGirth;
  for (const auto& [s, t] : w.edges) {
    std::map<int, int> dist{{s, 0}};
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj[v]) {
        if ((v == s && u == t) || (v == t && u == s)) continue; // drop this edge
        if (!dist.count(u)) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    if (dist.count(t)) {
      int cycle = dist[t] + 1;
      if (best == kInfiniteGirth || cycle < best) best = cycle;
    }
  }
  return best;
}

} // namespace kbracket
