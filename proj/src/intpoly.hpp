#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mcs {

// Element of Z[t]: little-endian coefficients with no trailing zeros, so the
// zero polynomial is the empty vector and representations are unique.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  static IntPoly t();  // the monomial t

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(size_t i) const;  // 0 beyond the stored length

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  mpz_class eval(const mpz_class& x) const;

  // Coefficient-wise reduction into [0, p). The zero result means the
  // polynomial vanishes identically mod p.
  IntPoly reduce_mod(const mpz_class& p) const;

  std::string to_string() const;  // descending powers, e.g. "t^4+3t^2+2t"

 private:
  std::vector<mpz_class> c_;
};

}  // namespace mcs
