#ifndef KBRACKET_GAUSS_CODE_HPP
#define KBRACKET_GAUSS_CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kbracket/laurent.hpp"
#include "kbracket/web.hpp"

namespace kbracket {

enum class Role { Over, Under, Unmarked };

struct Passage {
  int crossing = 0;
  Role role = Role::Unmarked;
  int sign = 0; // +1 / -1, or 0 in free mode

  bool operator==(const Passage&) const = default;
};

/// Cyclic passage sequences, one per link component. Signed mode carries
/// over/under roles and signs; free mode carries bare crossing ids.
struct GaussCode {
  std::vector<std::vector<Passage>> components;
  bool free_mode = false;

  bool operator==(const GaussCode&) const = default;

  int crossing_count() const;
  std::vector<int> crossing_ids() const; // sorted, unique
  int sign_of(int crossing) const;      // signed mode only
};

/// Grammar: components separated by ";", passages by ",". Signed passage
/// token = ("O"|"U") id ("+"|"-"); free token = bare id. Whitespace is
/// ignored. The empty string is the unknot (one empty component).
GaussCode parse_gauss(const std::string& text);

std::string to_string(const GaussCode& code);

/// Sum of crossing signs. Rejects free mode.
int writhe(const GaussCode& code);

/// Smoothing choices, one bit per crossing: bit i (over sorted crossing
/// ids) set means the unoriented smoothing.
struct State {
  std::uint64_t mask = 0;
};

std::uint64_t state_count(const GaussCode& code); // 2^n

/// Product over crossings of sign eps: A^{2 eps} when oriented, -A^{-eps}
/// when unoriented. Signed mode only.
LaurentPoly state_weight(const GaussCode& code, State s);

/// Cuts every crossing and reconnects: the oriented choice passes each
/// inbound strand through to the other passage's outbound strand; the
/// unoriented choice inserts a source (id 2k) and sink (id 2k+1) joined by
/// an edge, absorbing both inbound ends and emitting both outbound ends.
/// Arc chains touching no new vertex close into circles.
Web state_web(const GaussCode& code, State s);

Web unoriented_state_web(const GaussCode& code);

/// Girth of the 4-valent graph whose vertices are crossings and whose
/// edges are the arcs between consecutive passages. A loop arc gives 1.
int diagram_girth(const GaussCode& code);

/// The n-gon free knot: chord diagram whose interleavement graph is the
/// n-cycle. Optionally signed (first passage O, second U, all signs +).
GaussCode ngon_code(int n, bool make_signed = false);

/// Strips roles and signs.
GaussCode to_free(const GaussCode& code);

/// Assigns roles (first passage O, second U) and + signs to a free code.
GaussCode with_signs(const GaussCode& code);

/// Flips every sign and swaps every over/under role.
GaussCode mirror_code(const GaussCode& code);

/// Disjoint components of both codes; b's crossing ids are shifted past
/// a's. Modes must match.
GaussCode split_union(const GaussCode& a, const GaussCode& b);

/// Equality up to component order, cyclic rotation of each component, and
/// crossing renaming. Exponential in component count; fine at desk scale.
bool same_code(const GaussCode& a, const GaussCode& b);

} // namespace kbracket

#endif
