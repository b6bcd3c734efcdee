#ifndef KBRACKET_BRACKET_HPP
#define KBRACKET_BRACKET_HPP

#include <vector>

#include "kbracket/canon.hpp"
#include "kbracket/gauss_code.hpp"
#include "kbracket/module_element.hpp"
#include "kbracket/reduce.hpp"

namespace kbracket {

struct EvalOptions {
  int threads = 0;      // 0 picks a sensible default
  bool use_cache = true; // memoize reduced components across states
};

/// State sum over all 2^n smoothings: sum of state_weight * normal form of
/// the state web. Signed codes only.
ModuleElement bracket(const GaussCode& code, const EvalOptions& opts = {});

/// A^{-8 wr} * bracket; invariant under Reidemeister and Z-moves.
ModuleElement normalized_bracket(const GaussCode& code, const EvalOptions& opts = {});

/// Sign-blind state sum at A = a (+1 or -1): oriented smoothings weigh 1,
/// unoriented ones -a. Works on free and signed codes alike.
ModuleElement free_bracket(const GaussCode& code, int a, const EvalOptions& opts = {});

/// True iff the bracket has a non-scalar summand, certifying the code is
/// not classical.
bool classicality_obstruction(const GaussCode& code, const EvalOptions& opts = {});

struct MinimalityCertificate {
  enum class Verdict { CertifiedMinimal, Inconclusive };
  enum class Reason { KusIrreducible, GirthAtLeast5, None };

  Verdict verdict = Verdict::Inconclusive;
  Reason reason = Reason::None;
  CanonicalWeb kus; // canonical all-unoriented web when connected

  std::string str() const;
};

/// Certified-minimal when the all-unoriented state web has no bigons and no
/// squares, or when the diagram girth is at least 5 (which implies it).
MinimalityCertificate minimality_certificate(const GaussCode& code);

struct BracketReport {
  ModuleElement raw;
  ModuleElement normalized;
  int writhe = 0;
  ModuleElement free_at_plus1;
  ModuleElement free_at_minus1;
  bool scalar = true;
  std::vector<std::pair<Monomial, std::vector<int>>> summands; // factor vertex counts
};

BracketReport report(const GaussCode& code, const EvalOptions& opts = {});

} // namespace kbracket

#endif
