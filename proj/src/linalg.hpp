#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf.hpp"

namespace mcs {

using Rat = mpq_class;

// Accepts "a", "-a", "a/b"; canonicalizes sign into the numerator.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// p-adic valuation; the zero rational reports the sentinel kValInfinity.
inline constexpr long kValInfinity = LONG_MAX;
long padic_val(const Rat& r, const mpz_class& p);
// Residue mod p of a rational with valuation 0.
mpz_class residue_mod(const Rat& r, const mpz_class& p);

// Scalar domains shared by the generic routines below. A domain carries
// whatever context its element type needs (the field pointer for GF).
struct GFDom {
  FieldPtr F;
  using Elem = FieldElement;
  Elem zero() const { return FieldElement::zero(F); }
  Elem one() const { return FieldElement::one(F); }
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static Elem inv(const Elem& a) { return a.inverse(); }
  static Elem neg(const Elem& a) { return -a; }
};

struct QDom {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem inv(const Elem& a) {
    if (a == 0) fail("division_by_zero", "inverse of zero");
    return Rat(Rat(1) / a);
  }
  static Elem neg(const Elem& a) { return Rat(-a); }
};

template <class D>
using Mat = std::vector<std::vector<typename D::Elem>>;

using QMatrix = Mat<QDom>;

// Reduced row echelon form in place; returns the rank and optionally the
// pivot columns. The RREF of a row space is unique, so equal row spaces
// produce identical matrices.
template <class D>
size_t rref_in_place(const D& dom, Mat<D>& M,
                     std::vector<size_t>* pivots_out = nullptr) {
  size_t nr = M.size();
  size_t nc = nr ? M[0].size() : 0;
  size_t r = 0;
  std::vector<size_t> pivots;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t sel = nr;
    for (size_t i = r; i < nr; ++i) {
      if (!D::is_zero(M[i][c])) {
        sel = i;
        break;
      }
    }
    if (sel == nr) continue;
    std::swap(M[r], M[sel]);
    auto piv_inv = D::inv(M[r][c]);
    for (size_t j = c; j < nc; ++j)
      M[r][j] = typename D::Elem(M[r][j] * piv_inv);
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || D::is_zero(M[i][c])) continue;
      typename D::Elem f = M[i][c];
      for (size_t j = c; j < nc; ++j)
        M[i][j] = typename D::Elem(M[i][j] - f * M[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots_out) *pivots_out = pivots;
  return r;
}

template <class D>
size_t rank_of(const D& dom, Mat<D> M) {
  return rref_in_place(dom, M);
}

template <class D>
Mat<D> transpose(const D& dom, const Mat<D>& M, size_t ncols) {
  Mat<D> T(ncols, std::vector<typename D::Elem>(M.size(), dom.zero()));
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) T[j][i] = M[i][j];
  return T;
}

// Canonical basis of {x : M x = 0}.
template <class D>
Mat<D> right_kernel(const D& dom, Mat<D> M, size_t ncols) {
  std::vector<size_t> pivots;
  size_t rank = rref_in_place(dom, M, &pivots);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pivots) is_piv[c] = true;
  Mat<D> out;
  for (size_t j = 0; j < ncols; ++j) {
    if (is_piv[j]) continue;
    std::vector<typename D::Elem> v(ncols, dom.zero());
    v[j] = dom.one();
    for (size_t i = 0; i < rank; ++i) v[pivots[i]] = D::neg(M[i][j]);
    out.push_back(std::move(v));
  }
  rref_in_place(dom, out);
  return out;
}

template <class D>
typename D::Elem det(const D& dom, Mat<D> M) {
  size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) fail("bad_input", "determinant needs a square matrix");
  auto result = dom.one();
  bool negate = false;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t i = c; i < n; ++i) {
      if (!D::is_zero(M[i][c])) {
        sel = i;
        break;
      }
    }
    if (sel == n) return dom.zero();
    if (sel != c) {
      std::swap(M[c], M[sel]);
      negate = !negate;
    }
    result = typename D::Elem(result * M[c][c]);
    auto piv_inv = D::inv(M[c][c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (D::is_zero(M[i][c])) continue;
      typename D::Elem f(M[i][c] * piv_inv);
      for (size_t j = c; j < n; ++j)
        M[i][j] = typename D::Elem(M[i][j] - f * M[c][j]);
    }
  }
  return negate ? D::neg(result) : result;
}

// Fraction-free exact integer determinant (Bareiss).
mpz_class det_int(std::vector<std::vector<mpz_class>> M);

// A linear subspace of K^E held as its unique RREF basis, with labeled
// coordinates. Equality of spaces is equality of these matrices.
template <class D>
struct BasicSubspace {
  std::vector<std::string> ground;
  D dom;
  Mat<D> rows;

  size_t dim() const { return rows.size(); }
};

using Subspace = BasicSubspace<GFDom>;
using QSubspace = BasicSubspace<QDom>;

template <class D>
BasicSubspace<D> make_subspace(D dom, std::vector<std::string> ground,
                               Mat<D> rows) {
  for (const auto& r : rows)
    if (r.size() != ground.size())
      fail("bad_input", "row width does not match ground size");
  size_t rank = rref_in_place(dom, rows);
  rows.resize(rank, std::vector<typename D::Elem>());
  return BasicSubspace<D>{std::move(ground), std::move(dom), std::move(rows)};
}

inline bool same_dom(const GFDom& a, const GFDom& b) {
  return same_field(a.F, b.F);
}
inline bool same_dom(const QDom&, const QDom&) { return true; }

template <class D>
bool same_space(const BasicSubspace<D>& a, const BasicSubspace<D>& b) {
  if (a.ground != b.ground || !same_dom(a.dom, b.dom)) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (size_t i = 0; i < a.rows.size(); ++i)
    for (size_t j = 0; j < a.ground.size(); ++j)
      if (!(a.rows[i][j] == b.rows[i][j])) return false;
  return true;
}

std::vector<size_t> resolve_labels(const std::vector<std::string>& ground,
                                   const std::vector<std::string>& subset);

// Projection onto the coordinates outside I (matroid deletion on spaces).
template <class D>
BasicSubspace<D> subspace_delete(const BasicSubspace<D>& V,
                                 const std::vector<std::string>& I) {
  auto idx = resolve_labels(V.ground, I);
  std::vector<bool> drop(V.ground.size(), false);
  for (auto i : idx) drop[i] = true;
  std::vector<std::string> ground;
  for (size_t j = 0; j < V.ground.size(); ++j)
    if (!drop[j]) ground.push_back(V.ground[j]);
  Mat<D> rows;
  for (const auto& r : V.rows) {
    std::vector<typename D::Elem> nr;
    for (size_t j = 0; j < r.size(); ++j)
      if (!drop[j]) nr.push_back(r[j]);
    rows.push_back(std::move(nr));
  }
  return make_subspace(V.dom, std::move(ground), std::move(rows));
}

// Vectors of V vanishing on I, then projected away from I (contraction).
template <class D>
BasicSubspace<D> subspace_contract(const BasicSubspace<D>& V,
                                   const std::vector<std::string>& I) {
  auto idx = resolve_labels(V.ground, I);
  std::vector<bool> drop(V.ground.size(), false);
  for (auto i : idx) drop[i] = true;
  size_t d = V.rows.size();
  // Coefficient vectors c with (c . rows) zero on I: left kernel of the
  // I-column block.
  Mat<D> block_t(idx.size(), std::vector<typename D::Elem>(d, V.dom.zero()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t i = 0; i < d; ++i) block_t[a][i] = V.rows[i][idx[a]];
  Mat<D> coeffs = right_kernel(V.dom, std::move(block_t), d);
  std::vector<std::string> ground;
  for (size_t j = 0; j < V.ground.size(); ++j)
    if (!drop[j]) ground.push_back(V.ground[j]);
  Mat<D> rows;
  for (const auto& c : coeffs) {
    std::vector<typename D::Elem> nr;
    nr.reserve(ground.size());
    for (size_t j = 0; j < V.ground.size(); ++j) {
      if (drop[j]) continue;
      auto acc = V.dom.zero();
      for (size_t i = 0; i < d; ++i)
        acc = typename D::Elem(acc + c[i] * V.rows[i][j]);
      nr.push_back(acc);
    }
    rows.push_back(std::move(nr));
  }
  return make_subspace(V.dom, std::move(ground), std::move(rows));
}

// Orthogonal complement for the standard bilinear form on K^E.
template <class D>
BasicSubspace<D> orthogonal_complement(const BasicSubspace<D>& V) {
  Mat<D> K = right_kernel(V.dom, V.rows, V.ground.size());
  return BasicSubspace<D>{V.ground, V.dom, std::move(K)};
}

// Assembles subspaces on disjoint label sets into one space on `ground`,
// placing each part's coordinates at their labeled positions.
template <class D>
BasicSubspace<D> direct_sum_on_ground(const D& dom,
                                      const std::vector<BasicSubspace<D>>& parts,
                                      const std::vector<std::string>& ground) {
  std::vector<bool> seen(ground.size(), false);
  Mat<D> rows;
  for (const auto& part : parts) {
    auto idx = resolve_labels(ground, part.ground);
    for (auto i : idx) {
      if (seen[i]) fail("bad_input", "direct sum parts overlap on " + ground[i]);
      seen[i] = true;
    }
    for (const auto& r : part.rows) {
      std::vector<typename D::Elem> nr(ground.size(), dom.zero());
      for (size_t a = 0; a < idx.size(); ++a) nr[idx[a]] = r[a];
      rows.push_back(std::move(nr));
    }
  }
  return make_subspace(dom, ground, std::move(rows));
}

// Entrywise field automorphism x -> x^(p^e). RREF shape is preserved.
Subspace map_frobenius(const Subspace& V, long e);

// Reinterprets a prime-field subspace inside an extension of the same
// characteristic (coefficient-wise embedding).
Subspace embed_subspace(const Subspace& V, const FieldPtr& target);

// Reduction of a rational row space to GF(p) after scaling coordinate i by
// p^(-alpha_i): the image of the p-integral part of the scaled space.
// Errors: "dependent_rows" if the input rows are not independent over Q.
Subspace p_reduce(QMatrix rows, std::vector<std::string> ground,
                  const mpz_class& p, const std::vector<long>& alpha);

}  // namespace mcs
