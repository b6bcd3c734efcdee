#ifndef KBRACKET_LAURENT_HPP
#define KBRACKET_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace kbracket {

/// Sparse integer Laurent polynomial in the variable A.
///
/// The representation is unique: no zero coefficient is ever stored, so
/// structural equality of the term maps is polynomial equality.
class LaurentPoly {
public:
  LaurentPoly() = default; // zero

  static LaurentPoly constant(std::int64_t c);
  static LaurentPoly term(std::int64_t coeff, int exponent); // coeff*A^exponent

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly&) const = default;

  /// Substitutes A = a for a in {+1, -1}. Anything else is rejected.
  std::int64_t eval_at_unit(int a) const;

  /// A^e -> A^-e on every term.
  LaurentPoly mirrored() const;

  LaurentPoly pow(unsigned k) const;

  /// Sign-joined terms with exponents descending, e.g. "A^6+1+A^-6",
  /// "A^3-2*A^-1". The zero polynomial prints "0".
  std::string str() const;

  const std::map<int, std::int64_t>& terms() const { return terms_; }

  /// Adds coeff*A^exponent, dropping the entry if it cancels to zero.
  void add_term(int exponent, std::int64_t coeff);

private:
  std::map<int, std::int64_t> terms_;
};

/// Value of a vertex-free circle: A^6 + 1 + A^-6.
LaurentPoly loop_value();

/// Coefficient emitted by a bigon reduction: A^3 + A^-3.
LaurentPoly bigon_value();

} // namespace kbracket

#endif
