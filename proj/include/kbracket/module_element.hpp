#ifndef KBRACKET_MODULE_ELEMENT_HPP
#define KBRACKET_MODULE_ELEMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "kbracket/canon.hpp"
#include "kbracket/laurent.hpp"

namespace kbracket {

/// Commutative product of irreducible connected webs; the empty product is
/// the scalar monomial. Factors are kept sorted by (vertex count, canonical
/// serialization), so equality is independent of multiplication order.
struct Monomial {
  std::vector<CanonicalWeb> factors;

  static Monomial scalar() { return {}; }
  static Monomial single(CanonicalWeb w);

  bool is_scalar() const { return factors.empty(); }
  int total_vertices() const;

  Monomial operator*(const Monomial& other) const; // multiset union

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& other) const;

  /// "1" for the scalar monomial, else "[key]*[key]*..." with each factor's
  /// canonical string.
  std::string str() const;
};

/// Finite sum of monomials with Laurent polynomial coefficients. Zero
/// coefficients are never stored.
class ModuleElement {
public:
  ModuleElement() = default; // zero
  static ModuleElement scalar(LaurentPoly coeff);
  static ModuleElement monomial(Monomial m, LaurentPoly coeff = LaurentPoly::constant(1));

  bool is_zero() const { return terms_.empty(); }

  /// True iff every stored monomial is the scalar monomial (zero counts).
  bool is_scalar() const;

  void add(const Monomial& m, const LaurentPoly& coeff);
  ModuleElement& operator+=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator*(const ModuleElement& a, const ModuleElement& b);
  ModuleElement operator*(const LaurentPoly& c) const;

  bool operator==(const ModuleElement&) const = default;

  /// Evaluates every coefficient at A = a (a in {+1,-1}), dropping zeros.
  ModuleElement specialized(int a) const;

  /// Coefficient-wise lp mirror with identical monomials.
  ModuleElement mirrored() const;

  /// Deterministic text form: terms sorted by monomial; a lone scalar term
  /// prints as its bare coefficient, any other term as "(coeff)*monomial".
  std::string str() const;

  const std::map<Monomial, LaurentPoly>& terms() const { return terms_; }

private:
  std::map<Monomial, LaurentPoly> terms_;
};

} // namespace kbracket

#endif
