#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "brylawski.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "matroid.hpp"

using namespace mcs;

namespace {

Subspace gspan(const FieldPtr& f, std::vector<std::string> ground,
               const std::vector<std::vector<long>>& rows) {
  Mat<GFDom> m;
  for (const auto& r : rows) {
    std::vector<FieldElement> er;
    for (long x : r) er.push_back(FieldElement::from_integer(f, x));
    m.push_back(std::move(er));
  }
  return make_subspace(GFDom{f}, std::move(ground), std::move(m));
}

std::vector<std::string> labels(size_t n) {
  std::vector<std::string> g;
  for (size_t i = 1; i <= n; ++i) g.push_back(std::to_string(i));
  return g;
}

Matroid uniform(size_t r, size_t n) {
  std::vector<uint64_t> bases;
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m)
    if (static_cast<size_t>(__builtin_popcountll(m)) == r) bases.push_back(m);
  return Matroid(labels(n), bases);
}

std::vector<std::vector<std::string>> sorted(
    std::vector<std::vector<std::string>> v) {
  for (auto& x : v) std::sort(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("column matroids read bases off invertible column sets") {
  FieldPtr f2 = Field::make(2, 1);

  Matroid u23 = matroid_from_subspace(gspan(f2, labels(3), {{1, 0, 1}, {0, 1, 1}}));
  CHECK(u23.rank() == 2);
  CHECK(sorted(u23.basis_labels()) ==
        sorted({{"1", "2"}, {"1", "3"}, {"2", "3"}}));
  CHECK(u23 == uniform(2, 3));

  Matroid free3 = matroid_from_subspace(
      gspan(f2, labels(3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(free3.bases().size() == 1);
  CHECK(free3.rank() == 3);

  Matroid parallel = matroid_from_subspace(
      gspan(f2, labels(3), {{1, 0, 0}, {0, 1, 1}}));
  CHECK(sorted(parallel.basis_labels()) == sorted({{"1", "2"}, {"1", "3"}}));
}

TEST_CASE("matroid construction enforces the exchange axiom") {
  CHECK_NOTHROW(uniform(2, 4));
  CHECK_NOTHROW(Matroid(labels(2), {1}));  // {1} plus a loop
  CHECK_THROWS_AS(Matroid(labels(4), {0b0011, 0b1100}), Error);
  CHECK_THROWS_AS(Matroid(labels(2), {}), Error);
  CHECK_THROWS_AS(Matroid(labels(3), {0b001, 0b011}), Error);  // mixed size
}

TEST_CASE("duality complements bases and involutes") {
  Matroid u23 = uniform(2, 3);
  CHECK(matroid_dual(u23) == uniform(1, 3));
  CHECK(matroid_dual(matroid_dual(u23)) == u23);

  Matroid free2 = uniform(2, 2);
  Matroid dual = matroid_dual(free2);
  CHECK(dual.rank() == 0);
  CHECK(dual.bases() == std::vector<uint64_t>{0});
}

TEST_CASE("direct sums multiply basis families") {
  Matroid a(std::vector<std::string>{"a"}, {1});
  Matroid b(std::vector<std::string>{"b"}, {1});
  Matroid ab = matroid_direct_sum(a, b);
  CHECK(ab.bases().size() == 1);
  CHECK(ab.rank() == 2);

  Matroid u12a(std::vector<std::string>{"a1", "a2"}, {0b01, 0b10});
  Matroid u12b(std::vector<std::string>{"b1", "b2"}, {0b01, 0b10});
  CHECK(matroid_direct_sum(u12a, u12b).bases().size() == 4);

  Matroid loop(std::vector<std::string>{"z"}, {0});
  Matroid with_loop = matroid_direct_sum(u12a, loop);
  CHECK(with_loop.rank() == 1);
  CHECK(with_loop.ground().size() == 3);
  CHECK(with_loop.bases().size() == 2);

  CHECK_THROWS_AS(matroid_direct_sum(u12a, u12a), Error);
}

TEST_CASE("minors delete and contract on the basis family") {
  Matroid u23 = uniform(2, 3);
  Matroid del = matroid_minor(u23, {"3"}, {});
  CHECK(del.rank() == 2);
  CHECK(del.bases().size() == 1);

  Matroid con = matroid_minor(u23, {}, {"3"});
  CHECK(sorted(con.basis_labels()) == sorted({{"1"}, {"2"}}));

  CHECK_THROWS_AS(matroid_minor(u23, {"1"}, {"1"}), Error);
}

TEST_CASE("minors commute with the subspace bridge") {
  std::mt19937 rng(37);
  FieldPtr f3 = Field::make(3, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long>> rows(2, std::vector<long>(4));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<long>(rng() % 3);
    Subspace V = gspan(f3, labels(4), rows);
    if (V.dim() == 0) continue;
    std::string i = std::to_string(1 + rng() % 4);
    CHECK(matroid_from_subspace(subspace_delete(V, {i})) ==
          matroid_minor(matroid_from_subspace(V), {i}, {}));
    CHECK(matroid_from_subspace(subspace_contract(V, {i})) ==
          matroid_minor(matroid_from_subspace(V), {}, {i}));
  }
}

TEST_CASE("perp of the subspace gives the dual matroid") {
  std::mt19937 rng(41);
  for (auto f : {Field::make(2, 1), Field::make(3, 1)}) {
    long p = f->characteristic().get_si();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::vector<long>> rows(2, std::vector<long>(5));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<long>(rng() % p);
      Subspace V = gspan(f, labels(5), rows);
      CHECK(matroid_from_subspace(orthogonal_complement(V)) ==
            matroid_dual(matroid_from_subspace(V)));
    }
  }
}

TEST_CASE("circuits are the minimal dependent sets") {
  CHECK(sorted(circuits(uniform(2, 3))) == sorted({{"1", "2", "3"}}));
  CHECK(circuits(uniform(2, 4)).size() == 4);

  FieldPtr f2 = Field::make(2, 1);
  Matroid parallel = matroid_from_subspace(
      gspan(f2, labels(3), {{1, 0, 0}, {0, 1, 1}}));
  CHECK(sorted(circuits(parallel)) == sorted({{"2", "3"}}));

  Matroid u12 = uniform(1, 2);
  Matroid u23 = uniform(2, 3);
  Matroid sum = matroid_direct_sum(
      matroid_minor(u12, {}, {}),
      Matroid(std::vector<std::string>{"x", "y", "z"},
              {0b011, 0b101, 0b110}));
  CHECK(sum.rank() == u12.rank() + u23.rank());
  CHECK(circuits(sum).size() ==
        circuits(u12).size() + circuits(u23).size());
}

TEST_CASE("circuit queries work directly on subspace columns") {
  // Brylawski matrix for {5}: n = 6, s = 2, b = (0,1,3).
  BrylawskiMatrix bm = brylawski_matrix({mpz_class(5)});
  FieldPtr f5 = Field::make(5, 1);
  Mat<GFDom> rows(3, std::vector<FieldElement>(bm.labels.size()));
  for (size_t c = 0; c < bm.columns.size(); ++c)
    for (size_t r = 0; r < 3; ++r)
      rows[r][c] = FieldElement::from_integer(f5, bm.columns[c][r]);
  Subspace V = make_subspace(GFDom{f5}, bm.labels, rows);
  CHECK(V.dim() == 3);

  CHECK(is_circuit(V, {"v1", "v2", "v5"}));
  CHECK_FALSE(is_circuit(V, {"v1", "v2"}));
  CHECK(is_circuit(V, {"v1", "w1", "u2"}));  // closing minor 2*3-1 = 5 = 0
  CHECK_FALSE(is_circuit(V, {"v1", "v2", "v3"}));
  CHECK(is_circuit(V, {"v3", "v4", "v5"}));
}

TEST_CASE("mask helpers translate labels both ways") {
  Matroid u23 = uniform(2, 3);
  CHECK(u23.mask_of({"1", "3"}) == 0b101);
  CHECK(u23.labels_of(0b101) == std::vector<std::string>{"1", "3"});
  CHECK(u23.is_basis(0b011));
  CHECK_FALSE(u23.is_basis(0b111));
  CHECK(u23.is_independent(0b100));
  CHECK(u23.is_independent(0));
  CHECK_THROWS_AS(u23.mask_of({"7"}), Error);
}
