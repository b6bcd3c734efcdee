#include "kbracket/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "kbracket/error.hpp"

namespace kbracket {

int GaussCode::crossing_count() const { return static_cast<int>(crossing_ids().size()); }

std::vector<int> GaussCode::crossing_ids() const {
  std::set<int> ids;
  for (const auto& comp : components)
    for (const auto& p : comp) ids.insert(p.crossing);
  return {ids.begin(), ids.end()};
}

int GaussCode::sign_of(int crossing) const {
  for (const auto& comp : components)
    for (const auto& p : comp)
      if (p.crossing == crossing) return p.sign;
  throw Error("diagram.unknown-crossing", "crossing " + std::to_string(crossing) + " not present");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
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

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

int parse_id(const std::string& digits, const std::string& token) {
  if (digits.empty()) throw Error("parse.token", "missing crossing id in \"" + token + "\"");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error("parse.token", "bad crossing id in \"" + token + "\"");
  if (digits.size() > 8) throw Error("parse.token", "crossing id too large in \"" + token + "\"");
  return std::stoi(digits);
}

void validate_code(const GaussCode& code) {
  std::map<int, std::vector<Passage>> occ;
  for (const auto& comp : code.components)
    for (const auto& p : comp) occ[p.crossing].push_back(p);
  for (const auto& [id, ps] : occ) {
    const std::string name = "crossing " + std::to_string(id);
    if (ps.size() > 2)
      throw Error("parse.duplicate-passage",
                  name + " appears " + std::to_string(ps.size()) + " times");
    if (ps.size() == 1) {
      if (code.free_mode) throw Error("parse.missing-passage", name + " appears only once");
      const char* missing = ps[0].role == Role::Over ? "under" : "over";
      throw Error("parse.missing-passage", name + " missing " + missing + " passage");
    }
    if (code.free_mode) continue;
    if (ps[0].role == ps[1].role) {
      const char* twice = ps[0].role == Role::Over ? "over" : "under";
      throw Error("parse.role-mismatch", name + " has two " + twice + " passages");
    }
    if (ps[0].sign != ps[1].sign)
      throw Error("parse.sign-mismatch", name + " has conflicting signs");
  }
}

} // namespace

GaussCode parse_gauss(const std::string& text) {
  GaussCode code;
  int mode = -1; // -1 undetermined, 0 signed, 1 free
  for (const std::string& comp_raw : split(text, ';')) {
    std::vector<Passage> comp;
    const std::string comp_str = strip_ws(comp_raw);
    if (!comp_str.empty()) {
      for (const std::string& token : split(comp_str, ',')) {
        if (token.empty()) throw Error("parse.token", "empty passage token");
        Passage p;
        if (token[0] == 'O' || token[0] == 'U') {
          if (mode == 1) throw Error("parse.mixed-mode", "signed passage in a free code");
          mode = 0;
          p.role = token[0] == 'O' ? Role::Over : Role::Under;
          const char tail = token.back();
          if (token.size() < 3 || (tail != '+' && tail != '-'))
            throw Error("parse.token", "expected sign at end of \"" + token + "\"");
          p.sign = tail == '+' ? 1 : -1;
          p.crossing = parse_id(token.substr(1, token.size() - 2), token);
        } else {
          if (mode == 0) throw Error("parse.mixed-mode", "bare passage in a signed code");
          mode = 1;
          p.crossing = parse_id(token, token);
        }
        comp.push_back(p);
      }
    }
    code.components.push_back(std::move(comp));
  }
  code.free_mode = (mode == 1);
  validate_code(code);
  return code;
}

std::string to_string(const GaussCode& code) {
  std::string out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) out += ";";
    const auto& comp = code.components[c];
    for (std::size_t j = 0; j < comp.size(); ++j) {
      if (j) out += ",";
      const Passage& p = comp[j];
      if (!code.free_mode) {
        out += (p.role == Role::Over) ? "O" : "U";
        out += std::to_string(p.crossing);
        out += (p.sign > 0) ? "+" : "-";
      } else {
        out += std::to_string(p.crossing);
      }
    }
  }
  return out;
}

int writhe(const GaussCode& code) {
  if (code.free_mode) throw Error("mode.signed-required", "writhe needs a signed code");
  int wr = 0;
  for (int id : code.crossing_ids()) wr += code.sign_of(id);
  return wr;
}

std::uint64_t state_count(const GaussCode& code) {
  const int n = code.crossing_count();
  if (n > 62)
    throw Error("diagram.too-many-crossings", std::to_string(n) + " crossings exceed the limit");
  return std::uint64_t{1} << n;
}

LaurentPoly state_weight(const GaussCode& code, State s) {
  if (code.free_mode) throw Error("mode.signed-required", "state weights need a signed code");
  const auto ids = code.crossing_ids();
  LaurentPoly w = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int eps = code.sign_of(ids[i]);
    if ((s.mask >> i) & 1)
      w *= LaurentPoly::term(-1, -eps);
    else
      w *= LaurentPoly::term(1, 2 * eps);
  }
  return w;
}

namespace {

struct PassageRef {
  int comp = -1;
  int index = -1;
};

} // namespace

Web state_web(const GaussCode& code, State s) {
  const auto ids = code.crossing_ids();
  if (ids.size() > 62)
    throw Error("diagram.too-many-crossings", "state web limited to 62 crossings");
  std::map<int, int> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
  auto unoriented = [&](int crossing) -> bool {
    return (s.mask >> idx.at(crossing)) & 1;
  };

  // Arc a = (comp, j) runs from the out-port of passage j to the in-port of
  // passage j+1 (cyclically). Arcs are numbered by flattening components.
  std::vector<int> base(code.components.size() + 1, 0);
  for (std::size_t c = 0; c < code.components.size(); ++c)
    base[c + 1] = base[c] + static_cast<int>(code.components[c].size());
  const int total = base[code.components.size()];
  auto arc_of = [&](int c, int j) { return base[c] + j; };

  std::map<int, std::vector<PassageRef>> occ;
  for (std::size_t c = 0; c < code.components.size(); ++c)
    for (std::size_t j = 0; j < code.components[c].size(); ++j)
      occ[code.components[c][j].crossing].push_back(
          {static_cast<int>(c), static_cast<int>(j)});

  auto other_passage = [&](PassageRef p) {
    const auto& pair = occ.at(code.components[p.comp][p.index].crossing);
    return (pair[0].comp == p.comp && pair[0].index == p.index) ? pair[1] : pair[0];
  };
  auto arc_end = [&](int arc) -> PassageRef {
    int c = 0;
    while (arc >= base[c + 1]) ++c;
    const int len = static_cast<int>(code.components[c].size());
    return {c, (arc - base[c] + 1) % len};
  };
  auto crossing_at = [&](PassageRef p) { return code.components[p.comp][p.index].crossing; };

  Web out;
  for (const auto& comp : code.components)
    if (comp.empty()) out.circles += 1;
  for (int id : ids) {
    if (!unoriented(id)) continue;
    out.sources.push_back(2 * id);
    out.sinks.push_back(2 * id + 1);
    out.edges.emplace_back(2 * id, 2 * id + 1);
  }

  std::vector<char> visited(static_cast<std::size_t>(total), 0);
  // Chase each strand leaving an unoriented crossing until it re-enters one.
  for (int id : ids) {
    if (!unoriented(id)) continue;
    for (const PassageRef& start : occ.at(id)) {
      int cur = arc_of(start.comp, start.index);
      for (;;) {
        visited[static_cast<std::size_t>(cur)] = 1;
        const PassageRef q = arc_end(cur);
        const int kq = crossing_at(q);
        if (unoriented(kq)) {
          out.edges.emplace_back(2 * id, 2 * kq + 1);
          break;
        }
        const PassageRef next = other_passage(q);
        cur = arc_of(next.comp, next.index);
      }
    }
  }
  // Untouched arcs form closed oriented-smoothing cycles.
  for (int a = 0; a < total; ++a) {
    if (visited[static_cast<std::size_t>(a)]) continue;
    int cur = a;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      const PassageRef next = other_passage(arc_end(cur));
      cur = arc_of(next.comp, next.index);
    } while (cur != a);
    out.circles += 1;
  }

  std::sort(out.edges.begin(), out.edges.end());
  require_valid(out);
  return out;
}

Web unoriented_state_web(const GaussCode& code) {
  State s;
  const int n = code.crossing_count();
  if (n > 62) throw Error("diagram.too-many-crossings", "state web limited to 62 crossings");
  s.mask = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
  return state_web(code, s);
}

int diagram_girth(const GaussCode& code) {
  if (code.crossing_count() == 0)
    throw Error("diagram.no-crossings", "girth needs at least one crossing");
  std::vector<std::pair<int, int>> arcs;
  for (const auto& comp : code.components) {
    const int len = static_cast<int>(comp.size());
    for (int j = 0; j < len; ++j) {
      const int u = comp[static_cast<std::size_t>(j)].crossing;
      const int v = comp[static_cast<std::size_t>((j + 1) % len)].crossing;
      arcs.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::map<std::pair<int, int>, int> mult;
  for (const auto& a : arcs) {
    if (a.first == a.second) return 1;
    mult[a] += 1;
  }
  int best = kInfiniteGirth;
  for (const auto& [a, m] : mult)
    if (m >= 2) best = 2;
  if (best == 2) return 2;

  std::map<int, std::vector<int>> adj;
  for (const auto& [a, m] : mult) {
    adj[a.first].push_back(a.second);
    adj[a.second].push_back(a.first);
  }
  for (const auto& [skip, m] : mult) {
    std::map<int, int> dist;
    dist[skip.first] = 0;
    std::vector<int> queue{skip.first};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u : adj.at(v)) {
        if ((v == skip.first && u == skip.second) || (v == skip.second && u == skip.first))
          continue;
        if (dist.count(u)) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
    if (dist.count(skip.second)) {
      const int cycle = dist[skip.second] + 1;
      if (best == kInfiniteGirth || cycle < best) best = cycle;
    }
  }
  return best;
}

GaussCode ngon_code(int n, bool make_signed) {
  if (n < 3) throw Error("diagram.bad-ngon", "n-gon codes need n >= 3");
  GaussCode code;
  code.free_mode = true;
  std::vector<Passage> comp;
  for (int i = 1; i <= n; ++i) {
    comp.push_back({i, Role::Unmarked, 0});
    comp.push_back({i == 1 ? n : i - 1, Role::Unmarked, 0});
  }
  code.components.push_back(std::move(comp));
  return make_signed ? with_signs(code) : code;
}

GaussCode to_free(const GaussCode& code) {
  GaussCode out = code;
  out.free_mode = true;
  for (auto& comp : out.components)
    for (auto& p : comp) {
      p.role = Role::Unmarked;
      p.sign = 0;
    }
  return out;
}

GaussCode with_signs(const GaussCode& code) {
  GaussCode out = to_free(code);
  out.free_mode = false;
  std::set<int> seen;
  for (auto& comp : out.components)
    for (auto& p : comp) {
      p.role = seen.insert(p.crossing).second ? Role::Over : Role::Under;
      p.sign = 1;
    }
  validate_code(out);
  return out;
}

GaussCode mirror_code(const GaussCode& code) {
  GaussCode out = code;
  if (out.free_mode) return out;
  for (auto& comp : out.components)
    for (auto& p : comp) {
      p.role = (p.role == Role::Over) ? Role::Under : Role::Over;
      p.sign = -p.sign;
    }
  return out;
}

GaussCode split_union(const GaussCode& a, const GaussCode& b) {
  if (a.free_mode != b.free_mode)
    throw Error("mode.mismatch", "cannot join signed and free codes");
  int offset = 0;
  for (int id : a.crossing_ids()) offset = std::max(offset, id + 1);
  GaussCode out = a;
  for (const auto& comp : b.components) {
    std::vector<Passage> shifted = comp;
    for (auto& p : shifted) p.crossing += offset;
    out.components.push_back(std::move(shifted));
  }
  return out;
}

namespace {

std::string code_key(const GaussCode& code, const std::vector<int>& order,
                     const std::vector<int>& rots) {
  std::map<int, int> rename;
  std::string key;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const auto& comp = code.components[static_cast<std::size_t>(order[oi])];
    const int len = static_cast<int>(comp.size());
    key += "|";
    for (int j = 0; j < len; ++j) {
      const Passage& p = comp[static_cast<std::size_t>((j + rots[oi]) % len)];
      auto [it, fresh] = rename.emplace(p.crossing, static_cast<int>(rename.size()));
      key += code.free_mode ? "x" : (p.role == Role::Over ? "O" : "U");
      key += std::to_string(it->second);
      if (!code.free_mode) key += (p.sign > 0) ? "+" : "-";
      key += ",";
    }
  }
  return key;
}

std::string min_code_key(const GaussCode& code) {
  std::vector<int> order(code.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  std::string best;
  do {
    std::vector<int> rots(order.size(), 0);
    for (;;) {
      const std::string key = code_key(code, order, rots);
      if (best.empty() || key < best) best = key;
      // odometer over per-component rotations
      std::size_t c = 0;
      while (c < rots.size()) {
        const int len = static_cast<int>(code.components[static_cast<std::size_t>(order[c])].size());
        rots[c] += 1;
        if (rots[c] < std::max(len, 1)) break;
        rots[c] = 0;
        ++c;
      }
      if (c == rots.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

} // namespace

bool same_code(const GaussCode& a, const GaussCode& b) {
  if (a.free_mode != b.free_mode) return false;
  if (a.components.size() != b.components.size()) return false;
  std::vector<std::size_t> sa, sb;
  for (const auto& c : a.components) sa.push_back(c.size());
  for (const auto& c : b.components) sb.push_back(c.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return min_code_key(a) == min_code_key(b);
}

} // namespace kbracket
