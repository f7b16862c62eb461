#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace mcs {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail("bad_input", "empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) fail("bad_input", "not a rational: " + s);
  if (r.get_den() == 0) fail("bad_input", "zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long padic_val(const Rat& r, const mpz_class& p) {
  if (r == 0) return kValInfinity;
  mpz_class tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

mpz_class residue_mod(const Rat& r, const mpz_class& p) {
  if (padic_val(r, p) != 0)
    fail("internal", "residue of a rational with nonzero valuation");
  mpz_class num = r.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = r.get_den() % p;
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    fail("internal", "denominator not invertible mod p");
  mpz_class out = (num * den_inv) % p;
  if (out < 0) out += p;
  return out;
}

mpz_class det_int(std::vector<std::vector<mpz_class>> M) {
  size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) fail("bad_input", "determinant needs a square matrix");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      size_t sel = n;
      for (size_t i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          sel = i;
          break;
        }
      if (sel == n) return 0;
      std::swap(M[k], M[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign < 0 ? mpz_class(-M[n - 1][n - 1]) : M[n - 1][n - 1];
}

std::vector<size_t> resolve_labels(const std::vector<std::string>& ground,
                                   const std::vector<std::string>& subset) {
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (!pos.emplace(ground[i], i).second)
      fail("bad_input", "duplicate ground label " + ground[i]);
  }
  std::vector<size_t> out;
  std::vector<bool> used(ground.size(), false);
  for (const auto& s : subset) {
    auto it = pos.find(s);
    if (it == pos.end()) fail("unknown_label", "label not in ground set: " + s);
    if (used[it->second]) fail("bad_input", "repeated label " + s);
    used[it->second] = true;
    out.push_back(it->second);
  }
  return out;
}

Subspace map_frobenius(const Subspace& V, long e) {
  Mat<GFDom> rows = V.rows;
  for (auto& r : rows)
    for (auto& x : r) x = frobenius(x, e);
  return Subspace{V.ground, V.dom, std::move(rows)};
}

Subspace embed_subspace(const Subspace& V, const FieldPtr& target) {
  if (same_field(V.dom.F, target)) return V;
  if (V.dom.F->degree() != 1)
    fail("bad_input", "embedding is only supported from the prime field");
  if (V.dom.F->characteristic() != target->characteristic())
    fail("field_mismatch", "embedding must preserve the characteristic");
  GFDom dom{target};
  Mat<GFDom> rows;
  for (const auto& r : V.rows) {
    std::vector<FieldElement> nr;
    nr.reserve(r.size());
    for (const auto& x : r)
      nr.push_back(FieldElement::from_integer(target, x.coeffs()[0]));
    rows.push_back(std::move(nr));
  }
  return Subspace{V.ground, std::move(dom), std::move(rows)};
}

Subspace p_reduce(QMatrix rows, std::vector<std::string> ground,
                  const mpz_class& p, const std::vector<long>& alpha) {
  if (!is_prime(p)) fail("not_prime", "reduction modulus must be prime");
  if (alpha.size() != ground.size())
    fail("bad_input", "alpha length does not match ground size");
  size_t nr = rows.size();
  size_t nc = ground.size();
  for (const auto& r : rows)
    if (r.size() != nc) fail("bad_input", "row width does not match ground size");

  QDom q;
  if (rank_of(q, rows) != nr) fail("dependent_rows", "input rows are dependent");

  // Scale coordinate j by p^(-alpha_j).
  for (size_t j = 0; j < nc; ++j) {
    if (alpha[j] == 0) continue;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(std::abs(alpha[j])));
    Rat factor = alpha[j] > 0 ? Rat(1, pw) : Rat(pw);
    for (size_t i = 0; i < nr; ++i) rows[i][j] = Rat(rows[i][j] * factor);
  }

  FieldPtr gfp = Field::make(p, 1);
  GFDom gf{gfp};
  // Lattice refinement: scale rows to minimum valuation 0, reduce mod p;
  // while the reduction is rank-deficient, a mod-p dependency lifts to a
  // p-divisible combination whose quotient by p replaces its highest row.
  // The valuation of the lattice strictly drops, so this terminates.
  for (int guard = 0; guard < 100000; ++guard) {
    for (size_t i = 0; i < nr; ++i) {
      long mv = kValInfinity;
      for (size_t j = 0; j < nc; ++j) {
        if (rows[i][j] == 0) continue;
        mv = std::min(mv, padic_val(rows[i][j], p));
      }
      if (mv == kValInfinity)
        fail("internal", "zero row during reduction of independent input");
      if (mv != 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(std::abs(mv)));
        Rat factor = mv > 0 ? Rat(1, pw) : Rat(pw);
        for (size_t j = 0; j < nc; ++j) rows[i][j] = Rat(rows[i][j] * factor);
      }
    }
    Mat<GFDom> R(nr, std::vector<FieldElement>(nc, gf.zero()));
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) {
        if (rows[i][j] == 0) continue;
        if (padic_val(rows[i][j], p) == 0)
          R[i][j] = FieldElement::from_integer(gfp, residue_mod(rows[i][j], p));
      }
    {
      Mat<GFDom> Rc = R;
      if (rref_in_place(gf, Rc) == nr)
        return make_subspace(gf, std::move(ground), std::move(R));
    }
    Mat<GFDom> K = right_kernel(gf, transpose(gf, R, nc), nr);
    if (K.empty()) fail("internal", "rank-deficient reduction with no kernel");
    const auto& lam = K[0];
    size_t hi = nr;
    for (size_t i = 0; i < nr; ++i)
      if (!lam[i].is_zero()) hi = i;
    std::vector<Rat> combo(nc, Rat(0));
    for (size_t i = 0; i < nr; ++i) {
      if (lam[i].is_zero()) continue;
      mpz_class c = lam[i].coeffs()[0];
      for (size_t j = 0; j < nc; ++j) combo[j] += Rat(c) * rows[i][j];
    }
    for (size_t j = 0; j < nc; ++j) combo[j] = Rat(combo[j] / Rat(p));
    rows[hi] = std::move(combo);
  }
  fail("internal", "p-adic reduction did not terminate");
}

}  // namespace mcs
