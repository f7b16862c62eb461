#pragma once

#include <string>
#include <vector>

#include "gf.hpp"

namespace mcs {

// Additive polynomial ring K[F] over K = GF(p^m): elements are
// sum a_i F^i with the twist F a = a^p F. Multiplication is therefore
// noncommutative; degrees add and there are no zero divisors.
class SkewPoly {
 public:
  SkewPoly() = default;  // invalid until given a field
  explicit SkewPoly(FieldPtr f);
  SkewPoly(FieldPtr f, std::vector<FieldElement> coeffs);

  static SkewPoly zero(const FieldPtr& f);
  static SkewPoly one(const FieldPtr& f);
  static SkewPoly constant(const FieldElement& a);
  static SkewPoly frobenius_term(const FieldPtr& f);  // the monomial F
  // a * F^k
  static SkewPoly monomial(const FieldElement& a, unsigned k);

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  std::string to_string() const;  // e.g. "(t+1)F^2+F+t"

 private:
  void normalize();
  FieldPtr field_;
  std::vector<FieldElement> c_;  // c_[i] is the coefficient of F^i
};

}  // namespace mcs
