#include "intpoly.hpp"

#include <sstream>

#include "error.hpp"

namespace mcs {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::t() { return IntPoly({mpz_class(0), mpz_class(1)}); }

const mpz_class& IntPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly IntPoly::reduce_mod(const mpz_class& p) const {
  if (p < 2) fail("bad_input", "modulus must be >= 2");
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    r[i] = c_[i] % p;
    if (r[i] < 0) r[i] += p;
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    mpz_class a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) {
      os << "t";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace mcs
