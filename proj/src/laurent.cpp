#include "kbracket/laurent.hpp"

#include <cstdlib>

#include "kbracket/error.hpp"

namespace kbracket {

LaurentPoly LaurentPoly::constant(std::int64_t c) { return term(c, 0); }

LaurentPoly LaurentPoly::term(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

std::int64_t LaurentPoly::eval_at_unit(int a) const {
  if (a != 1 && a != -1)
    throw Error("algebra.bad-specialization", "evaluation point must be +1 or -1");
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    bool negate = a == -1 && (e % 2 != 0);
    sum += negate ? -c : c;
  }
  return sum;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    std::int64_t m = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(m);
    } else {
      if (m != 1) out += std::to_string(m) + "*";
      out += "A^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly loop_value() {
  LaurentPoly p;
  p.add_term(6, 1);
  p.add_term(0, 1);
  p.add_term(-6, 1);
  return p;
}

LaurentPoly bigon_value() {
  LaurentPoly p;
  p.add_term(3, 1);
  p.add_term(-3, 1);
  return p;
}

} // namespace kbracket
