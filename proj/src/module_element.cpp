#include "kbracket/module_element.hpp"

#include <algorithm>
#include <tuple>

namespace kbracket {

namespace {

// Factor and monomial order both key on vertex count first, then on the
// canonical serialization, so printed output is stable across platforms.
bool factor_less(const CanonicalWeb& a, const CanonicalWeb& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  return a.str() < b.str();
}

} // namespace

Monomial Monomial::single(CanonicalWeb w) {
  Monomial m;
  m.factors.push_back(std::move(w));
  return m;
}

int Monomial::total_vertices() const {
  int total = 0;
  for (const auto& f : factors) total += f.vertex_count();
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors.reserve(factors.size() + other.factors.size());
  std::merge(factors.begin(), factors.end(), other.factors.begin(), other.factors.end(),
             std::back_inserter(out.factors), factor_less);
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  if (total_vertices() != other.total_vertices())
    return total_vertices() < other.total_vertices();
  return std::lexicographical_compare(factors.begin(), factors.end(), other.factors.begin(),
                                      other.factors.end(), factor_less);
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += "[" + factors[i].str() + "]";
  }
  return out;
}

ModuleElement ModuleElement::scalar(LaurentPoly coeff) {
  ModuleElement e;
  e.add(Monomial::scalar(), coeff);
  return e;
}

ModuleElement ModuleElement::monomial(Monomial m, LaurentPoly coeff) {
  ModuleElement e;
  e.add(std::move(m), coeff);
  return e;
}

bool ModuleElement::is_scalar() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_scalar()) return false;
  return true;
}

void ModuleElement::add(const Monomial& m, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

ModuleElement operator*(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  return out;
}

ModuleElement ModuleElement::operator*(const LaurentPoly& c) const {
  ModuleElement out;
  for (const auto& [m, coeff] : terms_) out.add(m, coeff * c);
  return out;
}

ModuleElement ModuleElement::specialized(int a) const {
  ModuleElement out;
  for (const auto& [m, coeff] : terms_)
    out.add(m, LaurentPoly::constant(coeff.eval_at_unit(a)));
  return out;
}

ModuleElement ModuleElement::mirrored() const {
  ModuleElement out;
  for (const auto& [m, coeff] : terms_) out.add(m, coeff.mirrored());
  return out;
}

std::string ModuleElement::str() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1 && terms_.begin()->first.is_scalar())
    return terms_.begin()->second.str();
  std::string out;
  for (const auto& [m, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.str() + ")*" + m.str();
  }
  return out;
}

} // namespace kbracket
