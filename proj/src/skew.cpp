#include "skew.hpp"

#include <sstream>

#include "error.hpp"

namespace mcs {

SkewPoly::SkewPoly(FieldPtr f) : field_(std::move(f)) {
  if (!field_) fail("bad_input", "skew polynomial needs a field");
}

SkewPoly::SkewPoly(FieldPtr f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) fail("bad_input", "skew polynomial needs a field");
  for (const auto& a : c_)
    if (!a.valid() || !same_field(a.field(), field_))
      fail("field_mismatch", "coefficient from a different field");
  normalize();
}

void SkewPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::zero(const FieldPtr& f) { return SkewPoly(f); }

SkewPoly SkewPoly::one(const FieldPtr& f) {
  return SkewPoly(f, {FieldElement::one(f)});
}

SkewPoly SkewPoly::constant(const FieldElement& a) {
  if (!a.valid()) fail("bad_input", "invalid coefficient");
  return SkewPoly(a.field(), {a});
}

SkewPoly SkewPoly::frobenius_term(const FieldPtr& f) {
  return SkewPoly(f, {FieldElement::zero(f), FieldElement::one(f)});
}

SkewPoly SkewPoly::monomial(const FieldElement& a, unsigned k) {
  if (!a.valid()) fail("bad_input", "invalid coefficient");
  std::vector<FieldElement> c(k + 1, FieldElement::zero(a.field()));
  c[k] = a;
  return SkewPoly(a.field(), std::move(c));
}

namespace {
void require_same(const SkewPoly& a, const SkewPoly& b) {
  if (!a.valid() || !b.valid()) fail("bad_input", "invalid skew polynomial");
  if (!same_field(a.field(), b.field()))
    fail("field_mismatch", "skew operands live in different fields");
}
}  // namespace

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  require_same(*this, o);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()),
                              FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return SkewPoly(field_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
  require_same(*this, o);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()),
                              FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return SkewPoly(field_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  require_same(*this, o);
  if (is_zero() || o.is_zero()) return SkewPoly(field_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1,
                              FieldElement::zero(field_));
  // (a F^i)(b F^j) = a b^(p^i) F^(i+j)
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] = r[i + j] + c_[i] * frobenius(o.c_[j], static_cast<long>(i));
    }
  }
  return SkewPoly(field_, std::move(r));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  require_same(*this, o);
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string SkewPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << "+";
    std::string coef = c_[i].to_string();
    if (i == 0) {
      os << coef;
    } else {
      if (!c_[i].is_one()) {
        bool needs_parens = coef.find('+') != std::string::npos;
        os << (needs_parens ? "(" + coef + ")" : coef);
      }
      os << "F";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace mcs
