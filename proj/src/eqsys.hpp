#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"
#include "intpoly.hpp"
#include "linalg.hpp"
#include "skew.hpp"

namespace mcs {

enum class EqKind { Sum, Product };

// x_target = x_left + x_right, or x_target = x_left * x_right with the
// operand order significant (solutions may live in noncommutative rings).
struct Equation {
  EqKind kind;
  int target;
  int left;
  int right;
};

// A family of equations over named variables with two distinguished
// constants: index 0 is 0 and index 1 is 1. A solution assigns ring
// elements to all variables, satisfies every equation, and makes all
// variable values pairwise distinct.
//
// The first equation targeting a non-constant variable defines it; any
// later equation on the same target (or one targeting x0/x1) is a
// constraint, checked during verification but skipped by propagation.
class EquationSystem {
 public:
  EquationSystem(std::vector<std::string> vars, std::vector<Equation> eqs);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Equation>& equations() const { return eqs_; }
  int var_index(const std::string& name) const;  // -1 if absent

  bool is_constraint(size_t eq) const { return constraint_[eq]; }
  const std::vector<size_t>& propagation_order() const { return order_; }
  const std::vector<int>& free_vars() const { return free_; }

  // Nonempty when some defining equation uses an operand that is neither a
  // constant, a free variable, nor previously defined; propagation and
  // search refuse such systems.
  const std::string& propagation_defect() const { return defect_; }

  std::string equation_text(size_t eq) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Equation> eqs_;
  std::vector<bool> constraint_;
  std::vector<size_t> order_;
  std::vector<int> free_;
  std::string defect_;
};

struct ValidationFinding {
  size_t equation;
  std::string message;
};

// Checks the grammar side conditions: sums must not use x0 as an operand
// and must have target distinct from both operands; products must avoid
// x0 and x1 entirely (target and operands) and have target distinct from
// both operands.
std::vector<ValidationFinding> validate_system(const EquationSystem& s);

// The tower system over y1: powers y_i, the shifted chain z_i, and the
// interleaved chain w_1..w_{2n-3}, w. Requires n >= 2.
EquationSystem build_phi_n(unsigned long n);

mpz_class checked_prime_product(const std::vector<mpz_class>& primes,
                                const mpz_class& min_product);

// Tower system plus the closing constraint y_{n+1} = w + y_{n-2} where
// n is the product of the given primes (n >= 3).
EquationSystem build_finite(const std::vector<mpz_class>& primes);
// Same tower but the closing value is bound to a fresh variable v, so it
// constrains nothing; n is the product of the complement primes.
EquationSystem build_cofinite(const std::vector<mpz_class>& complement_primes);
// build_cofinite plus the cubic gadget u1..u3 forcing u1^3 + u1 = 1.
EquationSystem build_cofinite_cofinite(const std::vector<mpz_class>& complement_primes);
// Tower plus the commutator gadget u1..u8 with the double definition of u8.
EquationSystem build_finite_all(const std::vector<mpz_class>& primes);
// Root-of-unity system: m = least multiple of n exceeding 6, y-powers up
// to y_{m-1}, the x1 = y_{m-1} * y1 closing product, and the z1/z2/z3
// conjugation gadget with k = m/n. Free variables: y1 and z1.
EquationSystem build_root_of_unity(unsigned long n);

// Assigns y1 -> t and pushes Z[t] values through the defining equations.
// Requires the free variables to be exactly {y1} (after x0, x1).
std::map<std::string, IntPoly> propagate_symbolic(const EquationSystem& s);

struct BadSetReport {
  mpz_class degree_bound;  // sum of degrees of nonzero pairwise differences
  bool has_identical_pair = false;
  std::vector<std::pair<std::string, std::string>> identical_pairs;
  struct PrimeResult {
    mpz_class p;
    bool all_nonzero;
    std::vector<std::pair<std::string, std::string>> vanishing;
  };
  std::vector<PrimeResult> per_prime;
};

// For each prime, certifies that every pairwise difference of propagated
// variable values is a nonzero polynomial mod p, which bounds the set of
// bad y1-specializations by the degree sum.
BadSetReport bad_set_certificate(const EquationSystem& s,
                                 const std::vector<mpz_class>& primes);

template <class R>
using Assignment = std::map<std::string, typename R::Elem>;

struct Violation {
  size_t equation;  // SIZE_MAX for non-equation findings
  std::string text;
};
struct Collision {
  std::string a;
  std::string b;
  std::string value;
};
struct VerificationReport {
  bool accepted = false;
  std::vector<Violation> violated;
  std::vector<Collision> collisions;
};

// Ring adapters: each supplies constants, operations, equality, rendering.
struct GFRing {
  FieldPtr F;
  using Elem = FieldElement;
  Elem zero() const { return FieldElement::zero(F); }
  Elem one() const { return FieldElement::one(F); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return a.to_string(); }
};

struct SkewRing {
  FieldPtr F;
  using Elem = SkewPoly;
  Elem zero() const { return SkewPoly::zero(F); }
  Elem one() const { return SkewPoly::one(F); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return a.to_string(); }
};

struct IntPolyRing {
  using Elem = IntPoly;
  Elem zero() const { return IntPoly(); }
  Elem one() const { return IntPoly::constant(1); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return a.to_string(); }
};

struct RatRing {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  static Elem add(const Elem& a, const Elem& b) { return Rat(a + b); }
  static Elem mul(const Elem& a, const Elem& b) { return Rat(a * b); }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return rat_to_string(a); }
};

template <class R>
VerificationReport verify_assignment(const EquationSystem& s, const R& ring,
                                     const Assignment<R>& a) {
  VerificationReport rep;
  size_t nv = s.vars().size();
  std::vector<std::optional<typename R::Elem>> val(nv);
  bool missing = false;
  for (size_t i = 0; i < nv; ++i) {
    auto it = a.find(s.vars()[i]);
    if (it == a.end()) {
      rep.violated.push_back({SIZE_MAX, "missing value for " + s.vars()[i]});
      missing = true;
    } else {
      val[i] = it->second;
    }
  }
  if (val[0] && !R::eq(*val[0], ring.zero()))
    rep.violated.push_back({SIZE_MAX, s.vars()[0] + " must be 0"});
  if (val[1] && !R::eq(*val[1], ring.one()))
    rep.violated.push_back({SIZE_MAX, s.vars()[1] + " must be 1"});
  for (size_t e = 0; e < s.equations().size(); ++e) {
    const Equation& eq = s.equations()[e];
    if (!val[eq.target] || !val[eq.left] || !val[eq.right]) continue;
    typename R::Elem rhs = eq.kind == EqKind::Sum
                               ? R::add(*val[eq.left], *val[eq.right])
                               : R::mul(*val[eq.left], *val[eq.right]);
    if (!R::eq(*val[eq.target], rhs)) {
      rep.violated.push_back(
          {e, s.equation_text(e) + " fails: lhs=" + R::str(*val[eq.target]) +
                  " rhs=" + R::str(rhs)});
    }
  }
  for (size_t i = 0; i < nv; ++i) {
    if (!val[i]) continue;
    for (size_t j = i + 1; j < nv; ++j) {
      if (!val[j]) continue;
      if (R::eq(*val[i], *val[j]))
        rep.collisions.push_back({s.vars()[i], s.vars()[j], R::str(*val[i])});
    }
  }
  rep.accepted = !missing && rep.violated.empty() && rep.collisions.empty();
  return rep;
}

// Fills every defined variable from the seeded free variables by walking
// the defining equations in order. Seeds are keyed by variable index.
template <class R>
std::vector<typename R::Elem> propagate_values(
    const EquationSystem& s, const R& ring,
    const std::map<int, typename R::Elem>& seed) {
  if (!s.propagation_defect().empty())
    fail("not_triangular", s.propagation_defect());
  size_t nv = s.vars().size();
  std::vector<typename R::Elem> val(nv, ring.zero());
  val[1] = ring.one();
  for (int f : s.free_vars()) {
    auto it = seed.find(f);
    if (it == seed.end())
      fail("bad_input", "missing seed for free variable " + s.vars()[f]);
    val[f] = it->second;
  }
  for (size_t e : s.propagation_order()) {
    const Equation& eq = s.equations()[e];
    val[eq.target] = eq.kind == EqKind::Sum
                         ? R::add(val[eq.left], val[eq.right])
                         : R::mul(val[eq.left], val[eq.right]);
  }
  return val;
}

struct SearchResult {
  std::vector<Assignment<GFRing>> solutions;
  unsigned long assignments_tried = 0;
};

// Enumerates the free variables over the field in lex order (the last free
// variable varies fastest), propagates, verifies, and collects accepted
// assignments. Errors with "search_too_large" when |K|^(#free) > limit.
SearchResult search_solutions(const EquationSystem& s, const FieldPtr& f,
                              unsigned long limit);

struct SkewWitness {
  FieldPtr field;
  Assignment<SkewRing> assignment;
  VerificationReport report;
};

// Witness for the commutator system over GF(p^r)[F], built from alpha with
// beta = (alpha^(p^(n-1)) - alpha)^-1, gamma = (alpha^(p^(n-2)) - alpha)^-1:
// y1 = F, u1 = beta F^(n-1) + gamma F^(n-2), u2 = n alpha.
// Errors: "alpha_in_subfield" when a denominator vanishes, "bad_input" when
// the characteristic divides the prime product or n < 3.
SkewWitness witness_finite_all(const std::vector<mpz_class>& primes,
                               const FieldElement& alpha);

// Lex-smallest alpha usable by witness_finite_all over the given field.
FieldElement default_witness_alpha(const FieldPtr& f, unsigned long n);

// Witness for the root-of-unity system over GF(p^m')[F] where m' is the
// order of p mod m: y1 = a primitive m-th root, z1 = F. Errors:
// "root_of_unity_obstruction" when p = 1 mod n (t^n - 1 splits in GF(p),
// so y_k is central and z2 = z3 collide), "not_coprime" when p | m.
SkewWitness witness_root_of_unity(unsigned long n, const mpz_class& p);

}  // namespace mcs
