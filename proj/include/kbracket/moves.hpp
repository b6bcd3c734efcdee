#ifndef KBRACKET_MOVES_HPP
#define KBRACKET_MOVES_HPP

#include <string>
#include <vector>

#include "kbracket/gauss_code.hpp"

namespace kbracket {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3, ZMove, Switch };

/// Flat move description. Position slots (c*, p*) are (component index,
/// passage index) pairs; a deletion pair occupies positions p and p+1
/// (cyclically). Unused slots stay -1/0.
///
/// R1Insert: c1, p1 (gap index), sign, variant (0 over-first, 1 under-first)
/// R1Delete: c1, p1
/// R2Insert: c1, p1, c2, p2, sign (first fresh crossing; second gets -sign),
///           variant bit0 (0 parallel, 1 antiparallel) bit1 (under block first)
/// R2Delete: c1, p1, c2, p2 (non-wrapping pairs)
/// R3:       c1, p1, c2, p2, c3, p3 (three disjoint adjacent pairs)
/// ZMove / Switch: crossing
struct MoveRecord {
  MoveKind kind = MoveKind::R1Insert;
  int c1 = -1, p1 = -1;
  int c2 = -1, p2 = -1;
  int c3 = -1, p3 = -1;
  int sign = 0;
  int variant = 0;
  int crossing = -1;

  bool operator==(const MoveRecord&) const = default;
};

struct MoveOptions {
  bool include_inserts = true;
  bool include_switches = false;
  int max_crossings = 0; // 0 = no cap; at the cap, insertions are suppressed
};

/// Applies one move; throws Error("move.inapplicable") when the location
/// does not satisfy the move's preconditions.
GaussCode apply_move(const GaussCode& code, const MoveRecord& m);

/// Record that undoes m on apply_move(code, m); the composite restores the
/// original up to cyclic rotation and crossing renaming.
MoveRecord invert_move(const GaussCode& before, const MoveRecord& m);

/// All applicable R1/R2 deletions, R3 sites, Z-moves (signed codes), switch
/// moves (optional, signed codes), and insertion templates at every gap.
/// Deterministic order.
std::vector<MoveRecord> enumerate_moves(const GaussCode& code, const MoveOptions& opts = {});

/// One-line transcript form, e.g. "R2+ 0 1 0 4 1 1"; round-trips through
/// parse_move.
std::string move_to_string(const MoveRecord& m);
MoveRecord parse_move(const std::string& line);

/// Exposed for testing: the set of signed (role, sign, order) triangle
/// patterns realizable by three straight lines in the plane; R3 legality on
/// signed codes is membership of the candidate's normalized pattern.
const std::vector<std::string>& r3_pattern_table();

} // namespace kbracket

#endif
