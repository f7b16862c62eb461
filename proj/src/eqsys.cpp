#include "eqsys.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace mcs {

EquationSystem::EquationSystem(std::vector<std::string> vars,
                               std::vector<Equation> eqs)
    : vars_(std::move(vars)), eqs_(std::move(eqs)) {
  if (vars_.size() < 2)
    fail("bad_input", "a system needs at least the two constants");
  std::set<std::string> names(vars_.begin(), vars_.end());
  if (names.size() != vars_.size()) fail("bad_input", "duplicate variable name");
  int nv = static_cast<int>(vars_.size());
  for (const auto& e : eqs_) {
    for (int ix : {e.target, e.left, e.right})
      if (ix < 0 || ix >= nv) fail("bad_input", "equation index out of range");
  }
  constraint_.assign(eqs_.size(), false);
  std::vector<bool> defined(vars_.size(), false);
  for (size_t e = 0; e < eqs_.size(); ++e) {
    int t = eqs_[e].target;
    if (t <= 1 || defined[t]) {
      constraint_[e] = true;
    } else {
      defined[t] = true;
      order_.push_back(e);
    }
  }
  for (int v = 2; v < nv; ++v)
    if (!defined[v]) free_.push_back(v);
  // Propagation needs every operand of a defining equation to be a
  // constant, a free variable, or an earlier-defined variable.
  std::vector<bool> avail(vars_.size(), false);
  avail[0] = avail[1] = true;
  for (int v : free_) avail[v] = true;
  for (size_t e : order_) {
    for (int op : {eqs_[e].left, eqs_[e].right}) {
      if (!avail[op] && defect_.empty())
        defect_ = "equation '" + equation_text(e) + "' uses " + vars_[op] +
                  " before it is defined";
    }
    avail[eqs_[e].target] = true;
  }
}

int EquationSystem::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string EquationSystem::equation_text(size_t eq) const {
  const Equation& e = eqs_[eq];
  const char* op = e.kind == EqKind::Sum ? " + " : " * ";
  return vars_[e.target] + " = " + vars_[e.left] + op + vars_[e.right];
}

std::vector<ValidationFinding> validate_system(const EquationSystem& s) {
  std::vector<ValidationFinding> out;
  for (size_t e = 0; e < s.equations().size(); ++e) {
    const Equation& eq = s.equations()[e];
    auto name = [&](int i) { return s.vars()[i]; };
    if (eq.kind == EqKind::Sum) {
      if (eq.left == 0 || eq.right == 0)
        out.push_back({e, "sum uses the constant 0 as an operand"});
      if (eq.target == eq.left || eq.target == eq.right)
        out.push_back({e, "sum target " + name(eq.target) + " repeats an operand"});
    } else {
      for (int ix : {eq.target, eq.left, eq.right}) {
        if (ix == 0 || ix == 1) {
          out.push_back({e, "product involves the constant " + name(ix)});
        }
      }
      if (eq.target == eq.left || eq.target == eq.right)
        out.push_back(
            {e, "product target " + name(eq.target) + " repeats an operand"});
    }
  }
  return out;
}

namespace {

constexpr unsigned long kMaxTowerSize = 100000;

struct Builder {
  std::vector<std::string> vars{"x0", "x1"};
  std::vector<Equation> eqs;
  std::map<std::string, int> index{{"x0", 0}, {"x1", 1}};

  int add_var(const std::string& name) {
    int ix = static_cast<int>(vars.size());
    vars.push_back(name);
    index.emplace(name, ix);
    return ix;
  }
  int at(const std::string& name) const { return index.at(name); }
  void sum(const std::string& t, const std::string& l, const std::string& r) {
    eqs.push_back({EqKind::Sum, at(t), at(l), at(r)});
  }
  void prod(const std::string& t, const std::string& l, const std::string& r) {
    eqs.push_back({EqKind::Product, at(t), at(l), at(r)});
  }
  EquationSystem done() { return EquationSystem(std::move(vars), std::move(eqs)); }
};

void build_tower(Builder& b, unsigned long n) {
  if (n < 2) fail("bad_input", "tower system needs n >= 2");
  if (n > kMaxTowerSize) fail("bad_input", "tower system too large");
  auto y = [](unsigned long i) { return "y" + std::to_string(i); };
  auto z = [](unsigned long i) { return "z" + std::to_string(i); };
  auto w = [](unsigned long i) { return "w" + std::to_string(i); };
  for (unsigned long i = 1; i <= n + 1; ++i) b.add_var(y(i));
  for (unsigned long i = 1; i <= n - 1; ++i) b.add_var(z(i));
  for (unsigned long i = 1; i <= 2 * n - 3; ++i) b.add_var(w(i));
  b.add_var("w");
  for (unsigned long i = 2; i <= n + 1; ++i) b.prod(y(i), y(i - 1), y(1));
  b.sum(z(1), y(1), "x1");
  for (unsigned long i = 2; i <= n - 1; ++i) b.prod(z(i), z(i - 1), y(1));
  b.sum(w(1), y(3), y(1));
  if (2 * n - 3 >= 2) b.sum(w(2), w(1), z(1));
  for (unsigned long j = 3; j <= 2 * n - 3; ++j) {
    if (j % 2 == 1)
      b.prod(w(j), w(j - 1), y(1));
    else
      b.sum(w(j), w(j - 1), z(j / 2));
  }
  b.sum("w", w(2 * n - 3), z(n - 1));
}

unsigned long tower_size(const mpz_class& n) {
  if (!mpz_fits_ulong_p(n.get_mpz_t()) || n.get_ui() > kMaxTowerSize)
    fail("bad_input", "prime product too large to build the tower");
  return n.get_ui();
}

}  // namespace

mpz_class checked_prime_product(const std::vector<mpz_class>& primes,
                                const mpz_class& min_product) {
  if (primes.empty()) fail("bad_input", "empty prime set");
  std::set<mpz_class> seen;
  mpz_class n = 1;
  for (const auto& p : primes) {
    if (!is_prime(p)) fail("not_prime", p.get_str() + " is not prime");
    if (!seen.insert(p).second)
      fail("bad_input", "repeated prime " + p.get_str());
    n *= p;
  }
  if (n < min_product)
    fail("bad_input", "prime product must be at least " + min_product.get_str());
  return n;
}

EquationSystem build_phi_n(unsigned long n) {
  Builder b;
  build_tower(b, n);
  return b.done();
}

EquationSystem build_finite(const std::vector<mpz_class>& primes) {
  unsigned long n = tower_size(checked_prime_product(primes, 3));
  Builder b;
  build_tower(b, n);
  b.sum("y" + std::to_string(n + 1), "w", "y" + std::to_string(n - 2));
  return b.done();
}

EquationSystem build_cofinite(const std::vector<mpz_class>& complement_primes) {
  unsigned long n = tower_size(checked_prime_product(complement_primes, 3));
  Builder b;
  build_tower(b, n);
  b.add_var("v");
  b.sum("v", "w", "y" + std::to_string(n - 2));
  return b.done();
}

EquationSystem build_cofinite_cofinite(
    const std::vector<mpz_class>& complement_primes) {
  unsigned long n = tower_size(checked_prime_product(complement_primes, 3));
  Builder b;
  build_tower(b, n);
  b.add_var("v");
  b.sum("v", "w", "y" + std::to_string(n - 2));
  for (int i = 1; i <= 3; ++i) b.add_var("u" + std::to_string(i));
  b.prod("u2", "u1", "u1");
  b.prod("u3", "u2", "u1");
  b.sum("x1", "u3", "u1");
  return b.done();
}

EquationSystem build_finite_all(const std::vector<mpz_class>& primes) {
  unsigned long n = tower_size(checked_prime_product(primes, 3));
  Builder b;
  build_tower(b, n);
  for (int i = 1; i <= 8; ++i) b.add_var("u" + std::to_string(i));
  b.sum("u3", "u2", "x1");
  b.prod("u4", "u1", "u3");
  b.prod("u5", "u2", "u1");
  b.sum("u6", "u5", "w");
  b.sum("u7", "u6", "y" + std::to_string(n - 2));
  b.sum("u8", "u4", "y" + std::to_string(n + 1));
  b.sum("u8", "u7", "u1");
  return b.done();
}

EquationSystem build_root_of_unity(unsigned long n) {
  if (n < 2) fail("bad_input", "root-of-unity system needs n >= 2");
  unsigned long k = 6 / n + 1;
  unsigned long m = k * n;
  if (m > kMaxTowerSize) fail("bad_input", "system too large");
  Builder b;
  auto y = [](unsigned long i) { return "y" + std::to_string(i); };
  for (unsigned long i = 1; i <= m - 1; ++i) b.add_var(y(i));
  for (int i = 1; i <= 3; ++i) b.add_var("z" + std::to_string(i));
  for (unsigned long i = 2; i <= m - 1; ++i) b.prod(y(i), y(i - 1), y(1));
  b.prod("x1", y(m - 1), y(1));
  b.prod("z2", y(k), "z1");
  b.prod("z3", "z1", y(k));
  return b.done();
}

std::map<std::string, IntPoly> propagate_symbolic(const EquationSystem& s) {
  int y1 = s.var_index("y1");
  if (s.free_vars().size() != 1 || y1 < 0 || s.free_vars()[0] != y1)
    fail("not_triangular",
         "symbolic propagation needs y1 as the only free variable");
  IntPolyRing ring;
  std::map<int, IntPoly> seed{{y1, IntPoly::t()}};
  auto values = propagate_values(s, ring, seed);
  std::map<std::string, IntPoly> out;
  for (size_t i = 0; i < s.vars().size(); ++i) out[s.vars()[i]] = values[i];
  return out;
}

BadSetReport bad_set_certificate(const EquationSystem& s,
                                 const std::vector<mpz_class>& primes) {
  auto values = propagate_symbolic(s);
  // Keep variable order, not map order, so reports read naturally.
  std::vector<std::pair<std::string, IntPoly>> ordered;
  for (const auto& name : s.vars()) ordered.emplace_back(name, values.at(name));
  BadSetReport rep;
  rep.degree_bound = 0;
  std::vector<std::tuple<std::string, std::string, IntPoly>> diffs;
  for (size_t i = 0; i < ordered.size(); ++i) {
    for (size_t j = i + 1; j < ordered.size(); ++j) {
      IntPoly d = ordered[i].second - ordered[j].second;
      if (d.is_zero()) {
        rep.has_identical_pair = true;
        rep.identical_pairs.emplace_back(ordered[i].first, ordered[j].first);
        continue;
      }
      rep.degree_bound += d.degree();
      diffs.emplace_back(ordered[i].first, ordered[j].first, std::move(d));
    }
  }
  for (const auto& p : primes) {
    if (!is_prime(p)) fail("not_prime", p.get_str() + " is not prime");
    BadSetReport::PrimeResult pr{p, true, {}};
    for (const auto& [a, b, d] : diffs) {
      if (d.reduce_mod(p).is_zero()) {
        pr.all_nonzero = false;
        pr.vanishing.emplace_back(a, b);
      }
    }
    if (rep.has_identical_pair) {
      pr.all_nonzero = false;
      for (const auto& pr2 : rep.identical_pairs) pr.vanishing.push_back(pr2);
    }
    rep.per_prime.push_back(std::move(pr));
  }
  return rep;
}

SearchResult search_solutions(const EquationSystem& s, const FieldPtr& f,
                              unsigned long limit) {
  const auto& frees = s.free_vars();
  if (!s.propagation_defect().empty())
    fail("not_triangular", s.propagation_defect());
  mpz_class space = 1;
  mpz_class q = f->order();
  for (size_t i = 0; i < frees.size(); ++i) space *= q;
  if (space > limit)
    fail("search_too_large", "assignment space " + space.get_str() +
                                 " exceeds limit " + std::to_string(limit));
  GFRing ring{f};
  SearchResult res;
  std::map<int, FieldElement> seed;
  // Odometer over free variables, last one fastest: lex order on tuples.
  std::vector<FieldElement> current(frees.size(), FieldElement::zero(f));
  std::function<void(size_t)> walk = [&](size_t pos) {
    if (pos == frees.size()) {
      ++res.assignments_tried;
      for (size_t i = 0; i < frees.size(); ++i) seed[frees[i]] = current[i];
      auto values = propagate_values(s, ring, seed);
      Assignment<GFRing> a;
      for (size_t i = 0; i < s.vars().size(); ++i) a[s.vars()[i]] = values[i];
      auto rep = verify_assignment(s, ring, a);
      if (rep.accepted) res.solutions.push_back(std::move(a));
      return;
    }
    for_each_element(f, [&](const FieldElement& x) {
      current[pos] = x;
      walk(pos + 1);
      return true;
    });
  };
  walk(0);
  return res;
}

namespace {

unsigned long witness_tower_n(const std::vector<mpz_class>& primes,
                              const mpz_class& p) {
  mpz_class n = checked_prime_product(primes, 3);
  for (const auto& q : primes)
    if (q == p)
      fail("bad_input", "the characteristic must avoid the prime set");
  return tower_size(n);
}

}  // namespace

FieldElement default_witness_alpha(const FieldPtr& f, unsigned long n) {
  FieldElement found;
  for_each_element(f, [&](const FieldElement& a) {
    if (a.is_zero()) return true;
    if (frobenius(a, static_cast<long>(n) - 1) == a) return true;
    if (frobenius(a, static_cast<long>(n) - 2) == a) return true;
    found = a;
    return false;
  });
  if (!found.valid())
    fail("alpha_in_subfield",
         "no usable alpha in this field; enlarge the extension degree");
  return found;
}

SkewWitness witness_finite_all(const std::vector<mpz_class>& primes,
                               const FieldElement& alpha) {
  if (!alpha.valid()) fail("bad_input", "invalid alpha");
  FieldPtr f = alpha.field();
  const mpz_class& p = f->characteristic();
  unsigned long n = witness_tower_n(primes, p);
  FieldElement a1 = frobenius(alpha, static_cast<long>(n) - 1);
  FieldElement a2 = frobenius(alpha, static_cast<long>(n) - 2);
  if (a1 == alpha || a2 == alpha)
    fail("alpha_in_subfield",
         "alpha is fixed by F^(n-1) or F^(n-2); pick it outside those subfields");
  FieldElement beta = (a1 - alpha).inverse();
  FieldElement gamma = (a2 - alpha).inverse();
  EquationSystem sys = build_finite_all(primes);
  SkewRing ring{f};
  std::map<int, SkewPoly> seed;
  seed[sys.var_index("y1")] = SkewPoly::frobenius_term(f);
  seed[sys.var_index("u1")] =
      SkewPoly::monomial(beta, static_cast<unsigned>(n - 1)) +
      SkewPoly::monomial(gamma, static_cast<unsigned>(n - 2));
  seed[sys.var_index("u2")] = SkewPoly::constant(alpha.scalar_mul(n));
  auto values = propagate_values(sys, ring, seed);
  Assignment<SkewRing> a;
  for (size_t i = 0; i < sys.vars().size(); ++i) a[sys.vars()[i]] = values[i];
  auto report = verify_assignment(sys, ring, a);
  return SkewWitness{f, std::move(a), std::move(report)};
}

SkewWitness witness_root_of_unity(unsigned long n, const mpz_class& p) {
  if (n < 2) fail("bad_input", "need n >= 2");
  if (!is_prime(p)) fail("not_prime", p.get_str() + " is not prime");
  if (mpz_class(p % n) == 1)
    fail("root_of_unity_obstruction",
         "t^" + std::to_string(n) + "-1 splits in GF(" + p.get_str() +
             "): every root of unity is central, so z2 and z3 collide");
  unsigned long k = 6 / n + 1;
  unsigned long m = k * n;
  if (mpz_class(m) % p == 0)
    fail("not_coprime", "the characteristic divides " + std::to_string(m) +
                            "; no primitive root of that order exists");
  // Multiplicative order of p mod m.
  unsigned long mprime = 0;
  {
    mpz_class acc = 1;
    for (unsigned long j = 1; j <= m; ++j) {
      acc = (acc * p) % m;
      if (acc == 1) {
        mprime = j;
        break;
      }
    }
  }
  if (mprime == 0) fail("internal", "no multiplicative order found");
  FieldPtr f = Field::make(p, static_cast<unsigned>(mprime));
  FieldElement y1 = primitive_root_of_unity(f, m);
  EquationSystem sys = build_root_of_unity(n);
  SkewRing ring{f};
  std::map<int, SkewPoly> seed;
  seed[sys.var_index("y1")] = SkewPoly::constant(y1);
  seed[sys.var_index("z1")] = SkewPoly::frobenius_term(f);
  auto values = propagate_values(sys, ring, seed);
  Assignment<SkewRing> a;
  for (size_t i = 0; i < sys.vars().size(); ++i) a[sys.vars()[i]] = values[i];
  auto report = verify_assignment(sys, ring, a);
  return SkewWitness{f, std::move(a), std::move(report)};
}

}  // namespace mcs
