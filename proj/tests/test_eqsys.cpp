#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "eqsys.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "intpoly.hpp"

using namespace mcs;

namespace {

IntPoly closed_w(unsigned long n) {
  std::vector<mpz_class> c(n + 2, 0);
  c[n + 1] = 1;
  c[n - 1] = n;
  c[n - 2] = n - 1;
  return IntPoly(c);
}

IntPoly closed_w_last(unsigned long n) {
  std::vector<mpz_class> c(n + 2, 0);
  c[n + 1] = 1;
  c[n - 1] = n - 1;
  c[n - 2] = n - 2;
  return IntPoly(c);
}

std::string last_w_name(unsigned long n) {
  return "w" + std::to_string(n >= 3 ? 2 * n - 3 : 1);
}

const Equation& defining_equation(const EquationSystem& s,
                                  const std::string& target) {
  int ix = s.var_index(target);
  REQUIRE(ix >= 0);
  for (size_t e = 0; e < s.equations().size(); ++e)
    if (s.equations()[e].target == ix && !s.is_constraint(e))
      return s.equations()[e];
  FAIL(("no defining equation for " + target));
  return s.equations()[0];
}

Assignment<GFRing> seeded_assignment(const EquationSystem& s,
                                     const FieldPtr& f, long y1) {
  GFRing ring{f};
  std::map<int, FieldElement> seed{
      {s.var_index("y1"), FieldElement::from_integer(f, y1)}};
  auto values = propagate_values(s, ring, seed);
  Assignment<GFRing> a;
  for (size_t i = 0; i < s.vars().size(); ++i) a[s.vars()[i]] = values[i];
  return a;
}

std::vector<std::map<std::string, std::string>> printable(
    const std::vector<Assignment<GFRing>>& sols) {
  std::vector<std::map<std::string, std::string>> out;
  for (const auto& a : sols) {
    std::map<std::string, std::string> m;
    for (const auto& [k, v] : a) m[k] = v.to_string();
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tower systems have the documented shape") {
  EquationSystem s3 = build_phi_n(3);
  CHECK(s3.vars().size() == 12);
  CHECK(s3.equations().size() == 9);
  CHECK(s3.vars() == std::vector<std::string>{"x0", "x1", "y1", "y2", "y3",
                                              "y4", "z1", "z2", "w1", "w2",
                                              "w3", "w"});

  EquationSystem s2 = build_phi_n(2);
  CHECK(s2.vars() == std::vector<std::string>{"x0", "x1", "y1", "y2", "y3",
                                              "z1", "w1", "w"});
  CHECK(s2.equations().size() == 5);
  const Equation& w1 = defining_equation(s2, "w1");
  CHECK(w1.kind == EqKind::Sum);
  CHECK(s2.vars()[w1.left] == "y3");
  CHECK(s2.vars()[w1.right] == "y1");
  const Equation& w = defining_equation(s2, "w");
  CHECK(s2.vars()[w.left] == "w1");
  CHECK(s2.vars()[w.right] == "z1");

  EquationSystem s4 = build_phi_n(4);
  const Equation& w5 = defining_equation(s4, "w5");
  CHECK(w5.kind == EqKind::Product);
  CHECK(s4.vars()[w5.left] == "w4");
  CHECK(s4.vars()[w5.right] == "y1");

  CHECK_THROWS_AS(build_phi_n(1), Error);
}

TEST_CASE("validation reports exactly the side-condition breaches") {
  CHECK(validate_system(build_phi_n(3)).empty());
  CHECK(validate_system(build_finite({mpz_class(3)})).empty());
  CHECK(validate_system(build_finite_all({mpz_class(3)})).empty());

  auto findings = validate_system(build_root_of_unity(3));
  REQUIRE(findings.size() == 1);
  EquationSystem ru = build_root_of_unity(3);
  const Equation& eq = ru.equations()[findings[0].equation];
  CHECK(ru.vars()[eq.target] == "x1");

  // A product writing to the constant x1 and a sum using x0 both trip it.
  EquationSystem bad({"x0", "x1", "a", "b"},
                     {{EqKind::Product, 1, 2, 3}, {EqKind::Sum, 3, 0, 2}});
  auto f2 = validate_system(bad);
  CHECK(f2.size() == 2);
}

TEST_CASE("family builders attach their closing gadgets") {
  EquationSystem fin3 = build_finite({mpz_class(3)});
  const Equation& last = fin3.equations().back();
  CHECK(fin3.is_constraint(fin3.equations().size() - 1));
  CHECK(fin3.vars()[last.target] == "y4");
  CHECK(fin3.vars()[last.left] == "w");
  CHECK(fin3.vars()[last.right] == "y1");

  EquationSystem fin5 = build_finite({mpz_class(5)});
  const Equation& last5 = fin5.equations().back();
  CHECK(fin5.vars()[last5.target] == "y6");
  CHECK(fin5.vars()[last5.right] == "y3");

  CHECK_THROWS_AS(build_finite({mpz_class(2)}), Error);
  CHECK_THROWS_AS(build_finite({mpz_class(4)}), Error);
  CHECK_THROWS_AS(build_finite({mpz_class(3), mpz_class(3)}), Error);

  EquationSystem cof = build_cofinite({mpz_class(3)});
  CHECK(cof.var_index("v") >= 0);
  const Equation& vdef = defining_equation(cof, "v");
  CHECK(cof.vars()[vdef.left] == "w");
  CHECK(cof.vars()[vdef.right] == "y1");

  EquationSystem cof15 = build_cofinite({mpz_class(3), mpz_class(5)});
  const Equation& vdef15 = defining_equation(cof15, "v");
  CHECK(cof15.vars()[vdef15.right] == "y13");

  EquationSystem cc = build_cofinite({mpz_class(3)});
  EquationSystem ccc = build_cofinite_cofinite({mpz_class(3)});
  CHECK(ccc.vars().size() == cc.vars().size() + 3);
  CHECK(ccc.equations().size() == cc.equations().size() + 3);
  const Equation& x1c = ccc.equations().back();
  CHECK(ccc.vars()[x1c.target] == "x1");
  CHECK(ccc.is_constraint(ccc.equations().size() - 1));

  // The gadget forces u1^3 + u1 = 1, which has no rational root.
  for (long r : {1L, -1L}) CHECK(r * r * r + r - 1 != 0);

  EquationSystem fa = build_finite_all({mpz_class(3)});
  const Equation& u6 = defining_equation(fa, "u6");
  CHECK(fa.vars()[u6.left] == "u5");
  CHECK(fa.vars()[u6.right] == "w");
  const Equation& u7 = defining_equation(fa, "u7");
  CHECK(fa.vars()[u7.left] == "u6");
  CHECK(fa.vars()[u7.right] == "y1");
  size_t u8_defs = 0, u8_constraints = 0;
  for (size_t e = 0; e < fa.equations().size(); ++e)
    if (fa.vars()[fa.equations()[e].target] == "u8")
      (fa.is_constraint(e) ? u8_constraints : u8_defs)++;
  CHECK(u8_defs == 1);
  CHECK(u8_constraints == 1);
}

TEST_CASE("root-of-unity systems pick the least multiple of n above 6") {
  EquationSystem r3 = build_root_of_unity(3);
  CHECK(r3.vars().size() == 13);  // x0, x1, y1..y8, z1..z3
  CHECK(r3.var_index("y8") >= 0);
  CHECK(r3.var_index("y9") < 0);
  const Equation& z2 = defining_equation(r3, "z2");
  CHECK(r3.vars()[z2.left] == "y3");  // k = 9/3
  CHECK(r3.vars()[z2.right] == "z1");
  const Equation& z3 = defining_equation(r3, "z3");
  CHECK(r3.vars()[z3.left] == "z1");
  CHECK(r3.vars()[z3.right] == "y3");

  EquationSystem r7 = build_root_of_unity(7);
  CHECK(r7.var_index("y6") >= 0);
  CHECK(r7.var_index("y7") < 0);
  const Equation& z2b = defining_equation(r7, "z2");
  CHECK(r7.vars()[z2b.left] == "y1");  // k = 7/7

  EquationSystem r2 = build_root_of_unity(2);
  CHECK(r2.var_index("y7") >= 0);  // m = 8
  const Equation& z2c = defining_equation(r2, "z2");
  CHECK(r2.vars()[z2c.left] == "y4");

  CHECK_THROWS_AS(build_root_of_unity(1), Error);
}

TEST_CASE("symbolic propagation reproduces the value table") {
  auto vals = propagate_symbolic(build_phi_n(3));
  IntPoly t = IntPoly::t();
  CHECK(vals.at("y1") == t);
  CHECK(vals.at("z1") == t + IntPoly::constant(1));
  CHECK(vals.at("z2") == t * (t + IntPoly::constant(1)));
  CHECK(vals.at("w").to_string() == "t^4+3t^2+2t");
  CHECK(vals.at("w3").to_string() == "t^4+2t^2+t");

  auto v2 = propagate_symbolic(build_phi_n(2));
  CHECK(v2.at("w").to_string() == "t^3+2t+1");
  CHECK(v2.at("w1").to_string() == "t^3+t");

  for (unsigned long n = 2; n <= 12; ++n) {
    auto vn = propagate_symbolic(build_phi_n(n));
    CHECK(vn.at("w") == closed_w(n));
    CHECK(vn.at(last_w_name(n)) == closed_w_last(n));
  }

  // Systems with more than one free variable cannot be propagated.
  CHECK_THROWS_AS(propagate_symbolic(build_root_of_unity(3)), Error);
}

TEST_CASE("bad-set certificates bound the collision locus") {
  std::vector<mpz_class> small{2, 3, 5, 7, 11, 13};
  BadSetReport rep = bad_set_certificate(build_phi_n(3), small);
  CHECK(rep.degree_bound == 192);
  CHECK_FALSE(rep.has_identical_pair);
  for (const auto& pr : rep.per_prime) {
    CHECK(pr.all_nonzero);
    CHECK(pr.vanishing.empty());
  }

  // Independent recount of the degree bound from the propagated values.
  auto vals = propagate_symbolic(build_phi_n(3));
  EquationSystem s3 = build_phi_n(3);
  mpz_class bound = 0;
  for (size_t i = 0; i < s3.vars().size(); ++i)
    for (size_t j = i + 1; j < s3.vars().size(); ++j) {
      IntPoly d = vals.at(s3.vars()[i]) - vals.at(s3.vars()[j]);
      if (!d.is_zero()) bound += d.degree();
    }
  CHECK(rep.degree_bound == bound);

  // Two variables defined by identical expressions are flagged.
  EquationSystem dup({"x0", "x1", "y1", "a", "b"},
                     {{EqKind::Sum, 3, 2, 1}, {EqKind::Sum, 4, 2, 1}});
  BadSetReport bad = bad_set_certificate(dup, {mpz_class(7)});
  CHECK(bad.has_identical_pair);
  REQUIRE(bad.identical_pairs.size() == 1);
  CHECK(bad.identical_pairs[0].first == "a");
  CHECK(bad.identical_pairs[0].second == "b");
  CHECK_FALSE(bad.per_prime[0].all_nonzero);
}

TEST_CASE("verification checks equations, constants, and distinctness") {
  EquationSystem s3 = build_phi_n(3);
  FieldPtr f7 = Field::make(7, 1);
  GFRing ring{f7};

  VerificationReport r3 = verify_assignment(s3, ring, seeded_assignment(s3, f7, 3));
  CHECK_FALSE(r3.accepted);
  bool found = false;
  for (const auto& c : r3.collisions) {
    if ((c.a == "y4" && c.b == "z1") || (c.a == "z1" && c.b == "y4")) {
      found = true;
      CHECK(c.value == "4");
    }
  }
  CHECK(found);

  VerificationReport r0 = verify_assignment(s3, ring, seeded_assignment(s3, f7, 0));
  CHECK_FALSE(r0.accepted);

  // An unconstrained extra variable still participates in distinctness.
  EquationSystem tiny({"x0", "x1", "a", "c"}, {{EqKind::Sum, 2, 1, 1}});
  FieldPtr f5 = Field::make(5, 1);
  GFRing ring5{f5};
  Assignment<GFRing> good{{"x0", FieldElement::zero(f5)},
                          {"x1", FieldElement::one(f5)},
                          {"a", FieldElement::from_integer(f5, 2)},
                          {"c", FieldElement::from_integer(f5, 3)}};
  CHECK(verify_assignment(tiny, ring5, good).accepted);

  Assignment<GFRing> dup = good;
  dup["c"] = FieldElement::from_integer(f5, 2);
  VerificationReport rd = verify_assignment(tiny, ring5, dup);
  CHECK_FALSE(rd.accepted);
  CHECK(rd.violated.empty());
  REQUIRE(rd.collisions.size() == 1);
  CHECK(rd.collisions[0].value == "2");

  Assignment<GFRing> broken = good;
  broken["a"] = FieldElement::from_integer(f5, 4);
  VerificationReport rb = verify_assignment(tiny, ring5, broken);
  CHECK_FALSE(rb.accepted);
  CHECK(rb.violated.size() == 1);

  Assignment<GFRing> missing = good;
  missing.erase("c");
  VerificationReport rm = verify_assignment(tiny, ring5, missing);
  CHECK_FALSE(rm.accepted);
  REQUIRE_FALSE(rm.violated.empty());
  CHECK(rm.violated[0].equation == SIZE_MAX);
}

TEST_CASE("bounded search agrees with a brute-force oracle") {
  EquationSystem sq({"x0", "x1", "a", "b"}, {{EqKind::Product, 3, 2, 2}});
  for (long p : {2L, 3L, 5L}) {
    FieldPtr f = Field::make(p, 1);
    SearchResult got = search_solutions(sq, f, 1000);
    CHECK(got.assignments_tried == static_cast<unsigned long>(p));

    // Oracle: every total assignment, equations and distinctness by hand.
    std::vector<Assignment<GFRing>> naive;
    for_each_element(f, [&](const FieldElement& a) {
      for_each_element(f, [&](const FieldElement& b) {
        bool ok = b == a * a;
        std::vector<FieldElement> all{FieldElement::zero(f),
                                      FieldElement::one(f), a, b};
        for (size_t i = 0; i < all.size() && ok; ++i)
          for (size_t j = i + 1; j < all.size() && ok; ++j)
            if (all[i] == all[j]) ok = false;
        if (ok)
          naive.push_back({{"x0", all[0]}, {"x1", all[1]}, {"a", a}, {"b", b}});
        return true;
      });
      return true;
    });
    CHECK(printable(got.solutions) == printable(naive));
    if (p == 5) CHECK(got.solutions.size() == 2);
  }

  // The tower over GF(7) has no solutions at all.
  SearchResult none = search_solutions(build_phi_n(3), Field::make(7, 1), 100);
  CHECK(none.solutions.empty());
  CHECK(none.assignments_tried == 7);

  CHECK_THROWS_AS(search_solutions(build_root_of_unity(3), Field::make(2, 3), 10),
                  Error);
}

TEST_CASE("commutator witnesses verify over the skew ring") {
  FieldPtr f8 = Field::make(2, 3);
  CHECK(default_witness_alpha(f8, 3).coeffs() ==
        std::vector<mpz_class>{0, 0, 1});

  unsigned accepted = 0;
  for_each_element(f8, [&](const FieldElement& alpha) {
    if (alpha.is_zero() || alpha.is_one()) return true;
    SkewWitness w = witness_finite_all({mpz_class(3)}, alpha);
    CHECK(w.report.accepted);
    CHECK(w.report.violated.empty());
    CHECK(w.report.collisions.empty());
    ++accepted;
    return true;
  });
  CHECK(accepted == 6);

  CHECK_THROWS_AS(witness_finite_all({mpz_class(3)}, FieldElement::one(f8)),
                  Error);
  CHECK_THROWS_AS(witness_finite_all({mpz_class(2)},
                                     FieldElement::generator(f8)),
                  Error);
}

TEST_CASE("root-of-unity witnesses split on the residue of p") {
  SkewWitness w2 = witness_root_of_unity(3, 2);
  CHECK(w2.field->order() == 64);
  CHECK(w2.report.accepted);
  CHECK(w2.assignment.at("z2") != w2.assignment.at("z3"));

  SkewWitness w5 = witness_root_of_unity(3, 5);
  CHECK(w5.field->characteristic() == 5);
  CHECK(w5.field->degree() == 6);
  CHECK(w5.report.accepted);

  try {
    witness_root_of_unity(3, 7);
    FAIL("expected the splitting obstruction");
  } catch (const Error& e) {
    CHECK(e.code == "root_of_unity_obstruction");
  }
  CHECK_THROWS_AS(witness_root_of_unity(3, 13), Error);
  CHECK_THROWS_AS(witness_root_of_unity(2, 3), Error);  // 3 = 1 mod 2
  CHECK_THROWS_AS(witness_root_of_unity(3, 3), Error);  // p divides m
}

TEST_CASE("free variables are the never-defined ones") {
  EquationSystem r3 = build_root_of_unity(3);
  std::vector<std::string> free;
  for (int ix : r3.free_vars()) free.push_back(r3.vars()[ix]);
  std::sort(free.begin(), free.end());
  CHECK(free == std::vector<std::string>{"y1", "z1"});

  EquationSystem fin = build_finite({mpz_class(3)});
  CHECK(fin.free_vars().size() == 1);
  CHECK(fin.vars()[fin.free_vars()[0]] == "y1");
}
