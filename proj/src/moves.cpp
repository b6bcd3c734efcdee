#include "kbracket/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "kbracket/error.hpp"

namespace kbracket {

namespace {

[[noreturn]] void inapplicable(const std::string& what) {
  throw Error("move.inapplicable", what);
}

const std::vector<Passage>& comp_ref(const GaussCode& code, int c) {
  if (c < 0 || c >= static_cast<int>(code.components.size()))
    inapplicable("component index out of range");
  return code.components[static_cast<std::size_t>(c)];
}

int fresh_id(const GaussCode& code) {
  int next = 1;
  for (int id : code.crossing_ids()) next = std::max(next, id + 1);
  return next;
}

// ---- R3 pattern table -------------------------------------------------
//
// An R3 site is legal iff its (role, sign, strand-order) pattern occurs for
// three directed straight lines in the plane with some height order. The
// table enumerates all such configurations: 2 reflections x 8 direction
// flips x 6 height orders, normalized over crossing relabelings.

struct PatPassage {
  bool over = false;
  int label = 0; // 0..2
  int sign = 0;
};

using PatPair = std::array<PatPassage, 2>;
using Pattern = std::array<PatPair, 3>;

std::string pattern_key(const Pattern& pat, const std::array<int, 3>& perm) {
  std::array<std::string, 3> strs;
  for (std::size_t i = 0; i < 3; ++i) {
    std::string s;
    for (const PatPassage& p : pat[i]) {
      s += p.over ? 'O' : 'U';
      s += static_cast<char>('a' + perm[static_cast<std::size_t>(p.label)]);
      s += p.sign > 0 ? '+' : '-';
    }
    strs[i] = s;
  }
  std::sort(strs.begin(), strs.end());
  return strs[0] + "/" + strs[1] + "/" + strs[2];
}

std::string normalize_pattern(const Pattern& pat) {
  std::array<int, 3> perm{0, 1, 2};
  std::string best;
  do {
    std::string key = pattern_key(pat, perm);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct Line {
  std::array<long long, 2> p, d;
};

long long cross2(std::array<long long, 2> a, std::array<long long, 2> b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Parameter of the intersection with lj along li, as a fraction n/d, d > 0.
std::pair<long long, long long> isect_param(const Line& li, const Line& lj) {
  long long den = cross2(li.d, lj.d);
  std::array<long long, 2> diff{lj.p[0] - li.p[0], lj.p[1] - li.p[1]};
  long long num = cross2(diff, lj.d);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return {num, den};
}

std::vector<std::string> build_r3_table() {
  std::set<std::string> table;
  const std::array<Line, 3> base{{{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 0}, {-1, 1}}}};
  std::array<int, 3> heights{0, 1, 2};
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int flips = 0; flips < 8; ++flips) {
      std::array<Line, 3> lines = base;
      for (std::size_t i = 0; i < 3; ++i) {
        if (mirror) {
          lines[i].p[1] = -lines[i].p[1];
          lines[i].d[1] = -lines[i].d[1];
        }
        if ((flips >> i) & 1) {
          lines[i].d[0] = -lines[i].d[0];
          lines[i].d[1] = -lines[i].d[1];
        }
      }
      std::sort(heights.begin(), heights.end());
      do {
        Pattern pat;
        for (int i = 0; i < 3; ++i) {
          std::array<int, 2> others = (i == 0)   ? std::array<int, 2>{1, 2}
                                      : (i == 1) ? std::array<int, 2>{0, 2}
                                                 : std::array<int, 2>{0, 1};
          auto ta = isect_param(lines[static_cast<std::size_t>(i)],
                                lines[static_cast<std::size_t>(others[0])]);
          auto tb = isect_param(lines[static_cast<std::size_t>(i)],
                                lines[static_cast<std::size_t>(others[1])]);
          if (ta.first * tb.second > tb.first * ta.second) std::swap(others[0], others[1]);
          for (int slot = 0; slot < 2; ++slot) {
            const int j = others[static_cast<std::size_t>(slot)];
            const bool over = heights[static_cast<std::size_t>(i)] >
                              heights[static_cast<std::size_t>(j)];
            const int lo = std::min(i, j), hi = std::max(i, j);
            const Line& dover = lines[static_cast<std::size_t>(over ? i : j)];
            const Line& dunder = lines[static_cast<std::size_t>(over ? j : i)];
            PatPassage& pp = pat[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot)];
            pp.over = over;
            pp.label = lo + hi - 1;
            pp.sign = cross2(dover.d, dunder.d) > 0 ? 1 : -1;
          }
        }
        table.insert(normalize_pattern(pat));
      } while (std::next_permutation(heights.begin(), heights.end()));
    }
  }
  return {table.begin(), table.end()};
}

bool r3_pattern_legal(const std::string& key) {
  const auto& table = r3_pattern_table();
  return std::binary_search(table.begin(), table.end(), key);
}

// ---- site checks ------------------------------------------------------

struct PairLoc {
  int c = -1, p = -1;
};

bool adjacent_pair(const GaussCode& code, PairLoc loc, Passage& first, Passage& second) {
  if (loc.c < 0 || loc.c >= static_cast<int>(code.components.size())) return false;
  const auto& comp = code.components[static_cast<std::size_t>(loc.c)];
  const int len = static_cast<int>(comp.size());
  if (len < 2 || loc.p < 0 || loc.p >= len) return false;
  first = comp[static_cast<std::size_t>(loc.p)];
  second = comp[static_cast<std::size_t>((loc.p + 1) % len)];
  return true;
}

bool r3_site_ok(const GaussCode& code, const std::array<PairLoc, 3>& locs, std::string* why) {
  std::array<std::array<Passage, 2>, 3> pairs;
  std::set<std::pair<int, int>> positions;
  std::map<int, int> count;
  for (std::size_t i = 0; i < 3; ++i) {
    Passage a, b;
    if (!adjacent_pair(code, locs[i], a, b)) {
      if (why) *why = "pair location out of range";
      return false;
    }
    if (a.crossing == b.crossing) {
      if (why) *why = "pair repeats one crossing";
      return false;
    }
    const int len =
        static_cast<int>(code.components[static_cast<std::size_t>(locs[i].c)].size());
    positions.insert({locs[i].c, locs[i].p});
    positions.insert({locs[i].c, (locs[i].p + 1) % len});
    count[a.crossing] += 1;
    count[b.crossing] += 1;
    pairs[i] = {a, b};
  }
  if (positions.size() != 6) {
    if (why) *why = "pairs overlap";
    return false;
  }
  if (count.size() != 3) {
    if (why) *why = "site must cover exactly three crossings";
    return false;
  }
  for (const auto& [id, n] : count)
    if (n != 2) {
      if (why) *why = "crossing " + std::to_string(id) + " not covered twice";
      return false;
    }
  if (code.free_mode) return true;

  std::map<int, int> label;
  for (const auto& [id, n] : count) label.emplace(id, static_cast<int>(label.size()));
  Pattern pat;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t slot = 0; slot < 2; ++slot) {
      const Passage& p = pairs[i][slot];
      pat[i][slot] = {p.role == Role::Over, label.at(p.crossing), p.sign};
    }
  if (!r3_pattern_legal(normalize_pattern(pat))) {
    if (why) *why = "pattern has no planar triangle realization";
    return false;
  }
  return true;
}

bool r2_delete_ok(const GaussCode& code, int c1, int p1, int c2, int p2, std::string* why) {
  auto bad = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  Passage a, b, c, d;
  if (!adjacent_pair(code, {c1, p1}, a, b) || !adjacent_pair(code, {c2, p2}, c, d))
    return bad("pair location out of range");
  if (c1 == c2) {
    const int len = static_cast<int>(code.components[static_cast<std::size_t>(c1)].size());
    std::set<int> positions{p1, (p1 + 1) % len, p2, (p2 + 1) % len};
    if (positions.size() != 4) return bad("pairs overlap");
  }
  const int x = a.crossing, y = b.crossing;
  if (x == y) return bad("pair repeats one crossing");
  const bool parallel = (c.crossing == x && d.crossing == y);
  const bool antiparallel = (c.crossing == y && d.crossing == x);
  if (!parallel && !antiparallel) return bad("second pair covers different crossings");
  if (code.free_mode) return true;
  if (a.role != b.role || c.role != d.role || a.role == c.role)
    return bad("blocks must have uniform opposite roles");
  if (a.sign != -b.sign) return bad("crossings must have opposite signs");
  return true;
}

void erase_positions(std::vector<Passage>& comp, std::vector<int> idxs) {
  std::sort(idxs.begin(), idxs.end(), std::greater<int>());
  for (int i : idxs) comp.erase(comp.begin() + i);
}

} // namespace

const std::vector<std::string>& r3_pattern_table() {
  static const std::vector<std::string> table = build_r3_table();
  return table;
}

GaussCode apply_move(const GaussCode& code, const MoveRecord& m) {
  GaussCode out = code;
  switch (m.kind) {
    case MoveKind::R1Insert: {
      comp_ref(code, m.c1);
      auto& comp = out.components[static_cast<std::size_t>(m.c1)];
      const int len = static_cast<int>(comp.size());
      if (m.p1 < 0 || m.p1 > len) inapplicable("insertion gap out of range");
      const int id = fresh_id(code);
      Passage first, second;
      if (code.free_mode) {
        first = second = {id, Role::Unmarked, 0};
      } else {
        if (m.sign != 1 && m.sign != -1) inapplicable("insertion needs a sign");
        const Role r1 = (m.variant & 1) ? Role::Under : Role::Over;
        const Role r2 = (m.variant & 1) ? Role::Over : Role::Under;
        first = {id, r1, m.sign};
        second = {id, r2, m.sign};
      }
      comp.insert(comp.begin() + m.p1, {first, second});
      break;
    }
    case MoveKind::R1Delete: {
      const auto& before = comp_ref(code, m.c1);
      const int len = static_cast<int>(before.size());
      if (len < 2 || m.p1 < 0 || m.p1 >= len) inapplicable("pair position out of range");
      const int q = (m.p1 + 1) % len;
      if (before[static_cast<std::size_t>(m.p1)].crossing !=
          before[static_cast<std::size_t>(q)].crossing)
        inapplicable("positions do not hold one crossing twice");
      erase_positions(out.components[static_cast<std::size_t>(m.c1)], {m.p1, q});
      break;
    }
    case MoveKind::R2Insert: {
      comp_ref(code, m.c1);
      comp_ref(code, m.c2);
      const int len1 = static_cast<int>(code.components[static_cast<std::size_t>(m.c1)].size());
      const int len2 = static_cast<int>(code.components[static_cast<std::size_t>(m.c2)].size());
      if (m.p1 < 0 || m.p1 > len1 || m.p2 < 0 || m.p2 > len2)
        inapplicable("insertion gap out of range");
      const int x = fresh_id(code);
      const int y = x + 1;
      std::array<Passage, 2> block1, block2;
      if (code.free_mode) {
        block1 = {{{x, Role::Unmarked, 0}, {y, Role::Unmarked, 0}}};
        block2 = (m.variant & 1)
                     ? std::array<Passage, 2>{{{y, Role::Unmarked, 0}, {x, Role::Unmarked, 0}}}
                     : std::array<Passage, 2>{{{x, Role::Unmarked, 0}, {y, Role::Unmarked, 0}}};
      } else {
        if (m.sign != 1 && m.sign != -1) inapplicable("insertion needs a sign");
        const Role r1 = (m.variant & 2) ? Role::Under : Role::Over;
        const Role r2 = (m.variant & 2) ? Role::Over : Role::Under;
        block1 = {{{x, r1, m.sign}, {y, r1, -m.sign}}};
        block2 = (m.variant & 1)
                     ? std::array<Passage, 2>{{{y, r2, -m.sign}, {x, r2, m.sign}}}
                     : std::array<Passage, 2>{{{x, r2, m.sign}, {y, r2, -m.sign}}};
      }
      auto insert_at = [&](int c, int p, const std::array<Passage, 2>& block) {
        auto& comp = out.components[static_cast<std::size_t>(c)];
        comp.insert(comp.begin() + p, block.begin(), block.end());
      };
      if (m.c1 == m.c2) {
        if (m.p1 <= m.p2) {
          insert_at(m.c2, m.p2, block2);
          insert_at(m.c1, m.p1, block1);
        } else {
          insert_at(m.c1, m.p1, block1);
          insert_at(m.c2, m.p2, block2);
        }
      } else {
        insert_at(m.c1, m.p1, block1);
        insert_at(m.c2, m.p2, block2);
      }
      break;
    }
    case MoveKind::R2Delete: {
      std::string why;
      if (!r2_delete_ok(code, m.c1, m.p1, m.c2, m.p2, &why)) inapplicable(why);
      const int len1 = static_cast<int>(code.components[static_cast<std::size_t>(m.c1)].size());
      const int len2 = static_cast<int>(code.components[static_cast<std::size_t>(m.c2)].size());
      if (m.c1 == m.c2) {
        erase_positions(out.components[static_cast<std::size_t>(m.c1)],
                        {m.p1, (m.p1 + 1) % len1, m.p2, (m.p2 + 1) % len1});
      } else {
        erase_positions(out.components[static_cast<std::size_t>(m.c1)], {m.p1, (m.p1 + 1) % len1});
        erase_positions(out.components[static_cast<std::size_t>(m.c2)], {m.p2, (m.p2 + 1) % len2});
      }
      break;
    }
    case MoveKind::R3: {
      std::string why;
      const std::array<PairLoc, 3> locs{{{m.c1, m.p1}, {m.c2, m.p2}, {m.c3, m.p3}}};
      if (!r3_site_ok(code, locs, &why)) inapplicable(why);
      for (const PairLoc& loc : locs) {
        auto& comp = out.components[static_cast<std::size_t>(loc.c)];
        const int len = static_cast<int>(comp.size());
        std::swap(comp[static_cast<std::size_t>(loc.p)],
                  comp[static_cast<std::size_t>((loc.p + 1) % len)]);
      }
      break;
    }
    case MoveKind::ZMove:
    case MoveKind::Switch: {
      if (code.free_mode) inapplicable("move needs a signed code");
      int found = 0;
      for (auto& comp : out.components)
        for (auto& p : comp)
          if (p.crossing == m.crossing) {
            p.role = (p.role == Role::Over) ? Role::Under : Role::Over;
            if (m.kind == MoveKind::Switch) p.sign = -p.sign;
            ++found;
          }
      if (found != 2) inapplicable("crossing " + std::to_string(m.crossing) + " not present");
      break;
    }
  }
  return out;
}

MoveRecord invert_move(const GaussCode& before, const MoveRecord& m) {
  MoveRecord inv;
  switch (m.kind) {
    case MoveKind::R1Insert:
      inv.kind = MoveKind::R1Delete;
      inv.c1 = m.c1;
      inv.p1 = m.p1;
      break;
    case MoveKind::R1Delete: {
      const auto& comp = comp_ref(before, m.c1);
      const int len = static_cast<int>(comp.size());
      if (len < 2 || m.p1 < 0 || m.p1 >= len) inapplicable("pair position out of range");
      const Passage& first = comp[static_cast<std::size_t>(m.p1)];
      inv.kind = MoveKind::R1Insert;
      inv.c1 = m.c1;
      inv.p1 = (m.p1 == len - 1) ? len - 2 : m.p1;
      inv.sign = first.sign;
      inv.variant = (first.role == Role::Under) ? 1 : 0;
      break;
    }
    case MoveKind::R2Insert:
      inv.kind = MoveKind::R2Delete;
      inv.c1 = m.c1;
      inv.c2 = m.c2;
      if (m.c1 == m.c2 && m.p1 <= m.p2) {
        inv.p1 = m.p1;
        inv.p2 = m.p2 + 2;
      } else if (m.c1 == m.c2) {
        inv.p1 = m.p1 + 2;
        inv.p2 = m.p2;
      } else {
        inv.p1 = m.p1;
        inv.p2 = m.p2;
      }
      break;
    case MoveKind::R2Delete: {
      std::string why;
      if (!r2_delete_ok(before, m.c1, m.p1, m.c2, m.p2, &why)) inapplicable(why);
      Passage a, b, c, d;
      adjacent_pair(before, {m.c1, m.p1}, a, b);
      adjacent_pair(before, {m.c2, m.p2}, c, d);
      const int len1 = static_cast<int>(before.components[static_cast<std::size_t>(m.c1)].size());
      const int len2 = static_cast<int>(before.components[static_cast<std::size_t>(m.c2)].size());
      const bool same = (m.c1 == m.c2);
      // gap: where the block re-inserts once all four passages are gone;
      // a block wrapping past the end re-inserts at the tail
      auto gap_of = [&](int p, int len, int other) {
        if (p == len - 1) return len - (same ? 4 : 2);
        int below = 0;
        if (same) {
          if (other < p) ++below;
          if ((other + 1) % len < p) ++below;
        }
        return p - below;
      };
      int g1 = gap_of(m.p1, len1, m.p2);
      int g2 = gap_of(m.p2, len2, m.p1);
      Passage pa = a, pb = b, pc = c;
      if (same && g1 == g2 && m.p1 > m.p2) {
        // blocks collapse to one boundary; keep the earlier block first
        std::swap(g1, g2);
        pa = c;
        pb = d;
        pc = a;
      }
      inv.kind = MoveKind::R2Insert;
      inv.c1 = m.c1;
      inv.c2 = m.c2;
      inv.p1 = g1;
      inv.p2 = g2;
      inv.sign = before.free_mode ? 0 : pa.sign;
      inv.variant = (pc.crossing == pb.crossing ? 1 : 0) |
                    (!before.free_mode && pa.role == Role::Under ? 2 : 0);
      break;
    }
    case MoveKind::R3:
    case MoveKind::ZMove:
    case MoveKind::Switch:
      inv = m;
      break;
  }
  return inv;
}

std::vector<MoveRecord> enumerate_moves(const GaussCode& code, const MoveOptions& opts) {
  std::vector<MoveRecord> out;
  const int ncomp = static_cast<int>(code.components.size());
  const int n = code.crossing_count();

  for (int c = 0; c < ncomp; ++c) {
    const auto& comp = code.components[static_cast<std::size_t>(c)];
    const int len = static_cast<int>(comp.size());
    if (len < 2) continue;
    for (int p = 0; p < len; ++p) {
      if (len == 2 && p == 1) break; // same pair as p=0
      if (comp[static_cast<std::size_t>(p)].crossing ==
          comp[static_cast<std::size_t>((p + 1) % len)].crossing) {
        MoveRecord m;
        m.kind = MoveKind::R1Delete;
        m.c1 = c;
        m.p1 = p;
        out.push_back(m);
      }
    }
  }

  for (int c1 = 0; c1 < ncomp; ++c1) {
    const int len1 = static_cast<int>(code.components[static_cast<std::size_t>(c1)].size());
    for (int p1 = 0; p1 < len1; ++p1)
      for (int c2 = c1; c2 < ncomp; ++c2) {
        const int len2 = static_cast<int>(code.components[static_cast<std::size_t>(c2)].size());
        for (int p2 = (c1 == c2 ? p1 + 1 : 0); p2 < len2; ++p2)
          if (r2_delete_ok(code, c1, p1, c2, p2, nullptr)) {
            MoveRecord m;
            m.kind = MoveKind::R2Delete;
            m.c1 = c1;
            m.p1 = p1;
            m.c2 = c2;
            m.p2 = p2;
            out.push_back(m);
          }
      }
  }

  {
    std::vector<PairLoc> pairs;
    for (int c = 0; c < ncomp; ++c) {
      const auto& comp = code.components[static_cast<std::size_t>(c)];
      const int len = static_cast<int>(comp.size());
      for (int p = 0; p < len; ++p)
        if (len >= 2 && comp[static_cast<std::size_t>(p)].crossing !=
                            comp[static_cast<std::size_t>((p + 1) % len)].crossing)
          pairs.push_back({c, p});
    }
    const std::size_t np = pairs.size();
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i + 1; j < np; ++j)
        for (std::size_t k = j + 1; k < np; ++k) {
          const std::array<PairLoc, 3> locs{pairs[i], pairs[j], pairs[k]};
          if (r3_site_ok(code, locs, nullptr)) {
            MoveRecord m;
            m.kind = MoveKind::R3;
            m.c1 = locs[0].c;
            m.p1 = locs[0].p;
            m.c2 = locs[1].c;
            m.p2 = locs[1].p;
            m.c3 = locs[2].c;
            m.p3 = locs[2].p;
            out.push_back(m);
          }
        }
  }

  if (!code.free_mode) {
    for (int id : code.crossing_ids()) {
      MoveRecord m;
      m.kind = MoveKind::ZMove;
      m.crossing = id;
      out.push_back(m);
    }
    if (opts.include_switches)
      for (int id : code.crossing_ids()) {
        MoveRecord m;
        m.kind = MoveKind::Switch;
        m.crossing = id;
        out.push_back(m);
      }
  }

  if (opts.include_inserts) {
    const auto signs = code.free_mode ? std::vector<int>{0} : std::vector<int>{1, -1};
    if (opts.max_crossings == 0 || n + 1 <= opts.max_crossings) {
      const auto variants = code.free_mode ? std::vector<int>{0} : std::vector<int>{0, 1};
      for (int c = 0; c < ncomp; ++c) {
        const int len = static_cast<int>(code.components[static_cast<std::size_t>(c)].size());
        for (int p = 0; p < std::max(len, 1); ++p)
          for (int s : signs)
            for (int v : variants) {
              MoveRecord m;
              m.kind = MoveKind::R1Insert;
              m.c1 = c;
              m.p1 = p;
              m.sign = s;
              m.variant = v;
              out.push_back(m);
            }
      }
    }
    if (opts.max_crossings == 0 || n + 2 <= opts.max_crossings) {
      const auto variants = code.free_mode ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2, 3};
      for (int c1 = 0; c1 < ncomp; ++c1) {
        const int len1 = static_cast<int>(code.components[static_cast<std::size_t>(c1)].size());
        for (int p1 = 0; p1 < std::max(len1, 1); ++p1)
          for (int c2 = c1; c2 < ncomp; ++c2) {
            const int len2 = static_cast<int>(code.components[static_cast<std::size_t>(c2)].size());
            for (int p2 = (c1 == c2 ? p1 : 0); p2 < std::max(len2, 1); ++p2)
              for (int s : signs)
                for (int v : variants) {
                  MoveRecord m;
                  m.kind = MoveKind::R2Insert;
                  m.c1 = c1;
                  m.p1 = p1;
                  m.c2 = c2;
                  m.p2 = p2;
                  m.sign = s;
                  m.variant = v;
                  out.push_back(m);
                }
          }
      }
    }
  }
  return out;
}

namespace {

const char* kind_token(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1+";
    case MoveKind::R1Delete: return "R1-";
    case MoveKind::R2Insert: return "R2+";
    case MoveKind::R2Delete: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::ZMove: return "Z";
    case MoveKind::Switch: return "SW";
  }
  return "?";
}

} // namespace

std::string move_to_string(const MoveRecord& m) {
  std::ostringstream os;
  os << kind_token(m.kind);
  switch (m.kind) {
    case MoveKind::R1Insert: os << " " << m.c1 << " " << m.p1 << " " << m.sign << " " << m.variant; break;
    case MoveKind::R1Delete: os << " " << m.c1 << " " << m.p1; break;
    case MoveKind::R2Insert:
      os << " " << m.c1 << " " << m.p1 << " " << m.c2 << " " << m.p2 << " " << m.sign << " "
         << m.variant;
      break;
    case MoveKind::R2Delete: os << " " << m.c1 << " " << m.p1 << " " << m.c2 << " " << m.p2; break;
    case MoveKind::R3:
      os << " " << m.c1 << " " << m.p1 << " " << m.c2 << " " << m.p2 << " " << m.c3 << " " << m.p3;
      break;
    case MoveKind::ZMove:
    case MoveKind::Switch: os << " " << m.crossing; break;
  }
  return os.str();
}

MoveRecord parse_move(const std::string& line) {
  std::istringstream is(line);
  std::string tok;
  if (!(is >> tok)) throw Error("parse.move", "empty move line");
  MoveRecord m;
  std::vector<int*> slots;
  if (tok == "R1+") {
    m.kind = MoveKind::R1Insert;
    slots = {&m.c1, &m.p1, &m.sign, &m.variant};
  } else if (tok == "R1-") {
    m.kind = MoveKind::R1Delete;
    slots = {&m.c1, &m.p1};
  } else if (tok == "R2+") {
    m.kind = MoveKind::R2Insert;
    slots = {&m.c1, &m.p1, &m.c2, &m.p2, &m.sign, &m.variant};
  } else if (tok == "R2-") {
    m.kind = MoveKind::R2Delete;
    slots = {&m.c1, &m.p1, &m.c2, &m.p2};
  } else if (tok == "R3") {
    m.kind = MoveKind::R3;
    slots = {&m.c1, &m.p1, &m.c2, &m.p2, &m.c3, &m.p3};
  } else if (tok == "Z") {
    m.kind = MoveKind::ZMove;
    slots = {&m.crossing};
  } else if (tok == "SW") {
    m.kind = MoveKind::Switch;
    slots = {&m.crossing};
  } else {
    throw Error("parse.move", "unknown move kind \"" + tok + "\"");
  }
  for (int* slot : slots)
    if (!(is >> *slot)) throw Error("parse.move", "truncated move line \"" + line + "\"");
  std::string extra;
  if (is >> extra) throw Error("parse.move", "trailing tokens in \"" + line + "\"");
  return m;
}

} // namespace kbracket
