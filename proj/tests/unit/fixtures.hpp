#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "kbracket/web.hpp"

namespace fixtures {

using kbracket::Web;

// incidence graph of the Fano plane (lines {j, j+1, j+3} mod 7), girth 6
inline Web heawood() {
  Web w;
  for (int i = 0; i < 7; ++i) w.sources.push_back(i);
  for (int j = 0; j < 7; ++j) w.sinks.push_back(10 + j);
  for (int j = 0; j < 7; ++j)
    for (int d : {0, 1, 3}) w.edges.push_back({(j + d) % 7, 10 + j});
  return w;
}

inline Web k33() {
  Web w;
  w.sources = {0, 1, 2};
  w.sinks = {3, 4, 5};
  for (int s = 0; s < 3; ++s)
    for (int t = 3; t < 6; ++t) w.edges.push_back({s, t});
  return w;
}

// 3-cube with edges oriented from even to odd bit parity
inline Web cube() {
  Web w;
  for (int v = 0; v < 8; ++v) {
    if (__builtin_popcount(static_cast<unsigned>(v)) % 2 == 0)
      w.sources.push_back(v);
    else
      w.sinks.push_back(v);
  }
  for (int v : w.sources)
    for (int bit : {1, 2, 4}) w.edges.push_back({v, v ^ bit});
  return w;
}

// generalized Petersen graph GP(8,3), girth 6; outer i, inner 8+i
inline Web mobius_kantor() {
  Web w;
  auto color = [](int v) { return v < 8 ? v % 2 : (v - 8 + 1) % 2; };
  for (int v = 0; v < 16; ++v) {
    if (color(v) == 0)
      w.sources.push_back(v);
    else
      w.sinks.push_back(v);
  }
  auto add = [&](int a, int b) {
    if (color(a) == 0)
      w.edges.push_back({a, b});
    else
      w.edges.push_back({b, a});
  };
  for (int i = 0; i < 8; ++i) {
    add(i, (i + 1) % 8);
    add(i, 8 + i);
    add(8 + i, 8 + (i + 3) % 8);
  }
  return w;
}

// two-rung ladder on four vertices
inline Web ladder() {
  Web w;
  w.sources = {0, 2};
  w.sinks = {1, 3};
  w.edges = {{0, 1}, {0, 3}, {0, 3}, {2, 1}, {2, 1}, {2, 3}};
  return w;
}

inline Web closed_square() {
  Web w;
  w.sources = {0, 1};
  w.sinks = {2, 3};
  w.edges = {{0, 2}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 3}};
  return w;
}

// a bigon and two squares pairwise sharing edges
inline Web bigon_square() {
  Web w;
  w.sources = {0, 1, 2};
  w.sinks = {10, 11, 12};
  w.edges = {{0, 10}, {0, 10}, {0, 11}, {1, 10}, {1, 11}, {1, 12}, {2, 11}, {2, 12}, {2, 12}};
  return w;
}

// union of three random permutation matchings; always valid, maybe disconnected
inline Web random_web(std::mt19937_64& rng, int max_pairs) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_pairs));
  Web w;
  for (int i = 0; i < n; ++i) {
    w.sources.push_back(i);
    w.sinks.push_back(n + i);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int rep = 0; rep < 3; ++rep) {
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i)
      w.edges.push_back({i, n + perm[static_cast<std::size_t>(i)]});
  }
  return w;
}

inline Web relabeled(const Web& w, std::mt19937_64& rng) {
  std::vector<int> ids;
  for (int v : w.sources) ids.push_back(v);
  for (int v : w.sinks) ids.push_back(v);
  std::vector<int> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<int> map(ids.size() ? static_cast<std::size_t>(
                                        *std::max_element(ids.begin(), ids.end())) + 1
                                  : 0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    map[static_cast<std::size_t>(ids[i])] = shuffled[i];
  Web out;
  out.circles = w.circles;
  for (int v : w.sources) out.sources.push_back(map[static_cast<std::size_t>(v)]);
  for (int v : w.sinks) out.sinks.push_back(map[static_cast<std::size_t>(v)]);
  for (const auto& e : w.edges)
    out.edges.push_back({map[static_cast<std::size_t>(e.first)],
                         map[static_cast<std::size_t>(e.second)]});
  std::sort(out.sources.begin(), out.sources.end());
  std::sort(out.sinks.begin(), out.sinks.end());
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

// exhaustive isomorphism check, usable up to ~5 source vertices
inline bool brute_isomorphic(const Web& a, const Web& b) {
  if (a.circles != b.circles) return false;
  if (a.sources.size() != b.sources.size() || a.sinks.size() != b.sinks.size() ||
      a.edges.size() != b.edges.size())
    return false;
  std::vector<std::pair<int, int>> bsorted = b.edges;
  std::sort(bsorted.begin(), bsorted.end());
  std::vector<std::size_t> sperm(a.sources.size()), tperm(a.sinks.size());
  for (std::size_t i = 0; i < sperm.size(); ++i) sperm[i] = i;
  do {
    std::vector<int> smap(sperm.size() ? 1 + static_cast<std::size_t>(*std::max_element(
                                                 a.sources.begin(), a.sources.end()))
                                       : 0);
    for (std::size_t i = 0; i < sperm.size(); ++i)
      smap[static_cast<std::size_t>(a.sources[i])] = b.sources[sperm[i]];
    for (std::size_t i = 0; i < tperm.size(); ++i) tperm[i] = i;
    do {
      std::vector<int> tmap(tperm.size() ? 1 + static_cast<std::size_t>(*std::max_element(
                                                   a.sinks.begin(), a.sinks.end()))
                                         : 0);
      for (std::size_t i = 0; i < tperm.size(); ++i)
        tmap[static_cast<std::size_t>(a.sinks[i])] = b.sinks[tperm[i]];
      std::vector<std::pair<int, int>> mapped;
      for (const auto& e : a.edges)
        mapped.push_back({smap[static_cast<std::size_t>(e.first)],
                          tmap[static_cast<std::size_t>(e.second)]});
      std::sort(mapped.begin(), mapped.end());
      if (mapped == bsorted) return true;
    } while (std::next_permutation(tperm.begin(), tperm.end()));
  } while (std::next_permutation(sperm.begin(), sperm.end()));
  return false;
}

} // namespace fixtures
