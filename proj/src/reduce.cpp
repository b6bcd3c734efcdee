#include "kbracket/reduce.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <set>

#include "kbracket/canon.hpp"
#include "kbracket/error.hpp"

namespace kbracket {

namespace {

[[noreturn]] void stale(const std::string& what) {
  throw Error("reduce.stale-site", what);
}

void check_bigon_site(const Web& w, const BigonSite& s) {
  const int m = static_cast<int>(w.edges.size());
  if (s.edge_a < 0 || s.edge_b < 0 || s.edge_a >= m || s.edge_b >= m || s.edge_a == s.edge_b)
    stale("bigon edge handles out of range");
  const auto want = std::make_pair(s.source, s.sink);
  if (w.edges[s.edge_a] != want || w.edges[s.edge_b] != want)
    stale("bigon edges do not join the named vertices");
  if (!w.is_source(s.source) || !w.is_sink(s.sink)) stale("bigon vertices absent");
}

void check_square_site(const Web& w, const SquareSite& s) {
  const int m = static_cast<int>(w.edges.size());
  const std::array<int, 4> es{s.e1, s.e2, s.e3, s.e4};
  for (int e : es)
    if (e < 0 || e >= m) stale("square edge handle out of range");
  std::set<int> distinct(es.begin(), es.end());
  if (distinct.size() != 4) stale("square edges not distinct");
  std::set<int> verts{s.source1, s.sink1, s.source2, s.sink2};
  if (verts.size() != 4) stale("square vertices not distinct");
  if (w.edges[s.e1] != std::make_pair(s.source1, s.sink1) ||
      w.edges[s.e2] != std::make_pair(s.source2, s.sink1) ||
      w.edges[s.e3] != std::make_pair(s.source2, s.sink2) ||
      w.edges[s.e4] != std::make_pair(s.source1, s.sink2))
    stale("square edges do not form the named cycle");
  if (!w.is_source(s.source1) || !w.is_source(s.source2) || !w.is_sink(s.sink1) ||
      !w.is_sink(s.sink2))
    stale("square vertices absent");
}

} // namespace

std::pair<LaurentPoly, Web> reduce_bigon(const Web& w, const BigonSite& site) {
  check_bigon_site(w, site);
  int third_u = -1, third_v = -1;
  for (int i = 0; i < static_cast<int>(w.edges.size()); ++i) {
    if (i == site.edge_a || i == site.edge_b) continue;
    if (w.edges[i].first == site.source) third_u = i;
    if (w.edges[i].second == site.sink) third_v = i;
  }
  if (third_u < 0 || third_v < 0) stale("bigon remainder edges missing");

  Web out;
  out.circles = w.circles;
  for (int v : w.sources)
    if (v != site.source) out.sources.push_back(v);
  for (int v : w.sinks)
    if (v != site.sink) out.sinks.push_back(v);
  for (int i = 0; i < static_cast<int>(w.edges.size()); ++i) {
    if (i == site.edge_a || i == site.edge_b || i == third_u || i == third_v) continue;
    out.edges.push_back(w.edges[i]);
  }
  if (third_u == third_v) {
    out.circles += 1; // theta case: the last parallel copy closes up
  } else {
    out.edges.emplace_back(w.edges[third_v].first, w.edges[third_u].second);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return {bigon_value(), out};
}

std::vector<std::pair<LaurentPoly, Web>> resolve_square(const Web& w, const SquareSite& site) {
  check_square_site(w, site);
  auto in_cycle = [&](int i) {
    return i == site.e1 || i == site.e2 || i == site.e3 || i == site.e4;
  };
  auto ext_out = [&](int src) {
    for (int i = 0; i < static_cast<int>(w.edges.size()); ++i)
      if (!in_cycle(i) && w.edges[i].first == src) return i;
    stale("square external out-edge missing");
  };
  auto ext_in = [&](int snk) {
    for (int i = 0; i < static_cast<int>(w.edges.size()); ++i)
      if (!in_cycle(i) && w.edges[i].second == snk) return i;
    stale("square external in-edge missing");
  };
  const int es1 = ext_out(site.source1);
  const int es2 = ext_out(site.source2);
  const int et1 = ext_in(site.sink1);
  const int et2 = ext_in(site.sink2);
  const std::set<int> consumed{es1, es2, et1, et2};

  // cont1/cont2: the edge instance a strand continues on after entering
  // sink1/sink2, i.e. the out-edge of the source that sink is paired with.
  auto build = [&](int cont1, int cont2) {
    Web out;
    out.circles = w.circles;
    for (int v : w.sources)
      if (v != site.source1 && v != site.source2) out.sources.push_back(v);
    for (int v : w.sinks)
      if (v != site.sink1 && v != site.sink2) out.sinks.push_back(v);
    for (int i = 0; i < static_cast<int>(w.edges.size()); ++i) {
      if (in_cycle(i) || consumed.count(i)) continue;
      out.edges.push_back(w.edges[i]);
    }
    std::set<int> visited;
    for (int e0 : consumed) {
      const int p = w.edges[e0].first;
      if (p == site.source1 || p == site.source2) continue; // mid-chain segment
      int cur = e0;
      for (;;) {
        visited.insert(cur);
        const int q = w.edges[cur].second;
        if (q != site.sink1 && q != site.sink2) {
          out.edges.emplace_back(p, q);
          break;
        }
        cur = (q == site.sink1) ? cont1 : cont2;
      }
    }
    for (int e0 : consumed) {
      if (visited.count(e0)) continue;
      int cur = e0;
      do {
        visited.insert(cur);
        const int q = w.edges[cur].second;
        cur = (q == site.sink1) ? cont1 : cont2;
      } while (cur != e0);
      out.circles += 1;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  };

  const LaurentPoly one = LaurentPoly::constant(1);
  return {{one, build(es1, es2)}, {one, build(es2, es1)}};
}

std::pair<LaurentPoly, Web> strip_circles(const Web& w) {
  require_valid(w);
  Web out = w;
  out.circles = 0;
  return {loop_value().pow(static_cast<unsigned>(w.circles)), out};
}

namespace {

std::array<int, 2> bigon_key(const BigonSite& s) {
  std::array<int, 2> k{s.source, s.sink};
  std::sort(k.begin(), k.end());
  return k;
}

std::array<int, 4> square_key(const SquareSite& s) {
  std::array<int, 4> k{s.source1, s.sink1, s.source2, s.sink2};
  std::sort(k.begin(), k.end());
  return k;
}

const BigonSite& least_bigon(const std::vector<BigonSite>& sites) {
  return *std::min_element(sites.begin(), sites.end(), [](const auto& a, const auto& b) {
    auto ka = bigon_key(a), kb = bigon_key(b);
    return std::tie(ka, a.edge_a, a.edge_b) < std::tie(kb, b.edge_a, b.edge_b);
  });
}

const SquareSite& least_square(const std::vector<SquareSite>& sites) {
  return *std::min_element(sites.begin(), sites.end(), [](const auto& a, const auto& b) {
    auto ka = square_key(a), kb = square_key(b);
    return std::tie(ka, a.e1, a.e2, a.e3, a.e4) < std::tie(kb, b.e1, b.e2, b.e3, b.e4);
  });
}

Monomial reduced_monomial(const Web& w) {
  auto [parts, circles] = components(w);
  (void)circles; // caller strips circles first
  Monomial m;
  for (const auto& part : parts) m = m * Monomial::single(canonical_form(part));
  return m;
}

std::string vertex_list(std::initializer_list<int> vs) {
  std::string out = "(";
  bool first = true;
  for (int v : vs) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

} // namespace

ModuleElement normal_form(const Web& w, const ReductionStrategy& strategy,
                          const TraceSink& trace) {
  require_valid(w);
  std::mt19937_64 rng(strategy.seed);
  ModuleElement result;
  std::deque<std::pair<LaurentPoly, Web>> work;
  work.emplace_back(LaurentPoly::constant(1), w);

  while (!work.empty()) {
    auto [coeff, web] = std::move(work.front());
    work.pop_front();

    if (web.circles > 0) {
      if (trace)
        for (int i = 0; i < web.circles; ++i)
          trace("(circle, -, " + loop_value().str() + ")");
      coeff = coeff * loop_value().pow(static_cast<unsigned>(web.circles));
      web.circles = 0;
    }

    const auto bigons = find_bigons(web);
    const auto squares = find_squares(web);
    if (bigons.empty() && squares.empty()) {
      result.add(reduced_monomial(web), coeff);
      continue;
    }

    std::size_t pick = 0;
    if (strategy.seeded) {
      pick = static_cast<std::size_t>(rng() % (bigons.size() + squares.size()));
    } else if (bigons.empty()) {
      pick = bigons.size() + static_cast<std::size_t>(&least_square(squares) - squares.data());
    } else {
      pick = static_cast<std::size_t>(&least_bigon(bigons) - bigons.data());
    }

    if (pick < bigons.size()) {
      const BigonSite& site = bigons[pick];
      auto [c, rest] = reduce_bigon(web, site);
      if (trace)
        trace("(bigon, " + vertex_list({site.source, site.sink}) + ", " + c.str() + ")");
      work.emplace_back(coeff * c, std::move(rest));
    } else {
      const SquareSite& site = squares[pick - bigons.size()];
      if (trace)
        trace("(square, " +
              vertex_list({site.source1, site.sink1, site.source2, site.sink2}) + ", 1)");
      for (auto& [c, rest] : resolve_square(web, site))
        work.emplace_back(coeff * c, std::move(rest));
    }
  }
  return result;
}

bool ReduceCache::lookup(const std::string& key, ModuleElement& out) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void ReduceCache::store(const std::string& key, const ModuleElement& value) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.emplace(key, value);
}

std::size_t ReduceCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

namespace {

ModuleElement reduce_component(const Web& part, ReduceCache* cache) {
  const std::string key = canonical_form(part).str();
  if (cache) {
    ModuleElement hit;
    if (cache->lookup(key, hit)) return hit;
  }
  const auto bigons = find_bigons(part);
  ModuleElement result;
  if (!bigons.empty()) {
    auto [c, rest] = reduce_bigon(part, least_bigon(bigons));
    result = reduce_full(rest, cache) * c;
  } else {
    const auto squares = find_squares(part);
    if (!squares.empty()) {
      for (auto& [c, rest] : resolve_square(part, least_square(squares))) {
        (void)c;
        result += reduce_full(rest, cache);
      }
    } else {
      result = ModuleElement::monomial(Monomial::single(canonical_form(part)));
    }
  }
  if (cache) cache->store(key, result);
  return result;
}

} // namespace

ModuleElement reduce_full(const Web& w, ReduceCache* cache) {
  auto [parts, circles] = components(w);
  ModuleElement out = ModuleElement::scalar(loop_value().pow(static_cast<unsigned>(circles)));
  for (const auto& part : parts) out = out * reduce_component(part, cache);
  return out;
}

} // namespace kbracket
