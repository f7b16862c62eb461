#include "flock.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace mcs {

mpz_class Window::point_count() const {
  if (lo.size() != hi.size()) fail("bad_input", "window bound lists differ");
  mpz_class c = 1;
  for (size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) fail("bad_input", "window bound reversed");
    c *= mpz_class(hi[i]) - mpz_class(lo[i]) + 1;
  }
  return c;
}

bool Window::contains(const std::vector<long>& a) const {
  if (a.size() != lo.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < lo[i] || a[i] > hi[i]) return false;
  return true;
}

Window cube_window(size_t n, long lo, long hi) {
  return Window{std::vector<long>(n, lo), std::vector<long>(n, hi)};
}

void for_each_point(const Window& w,
                    const std::function<void(const std::vector<long>&)>& visit) {
  w.point_count();
  std::vector<long> a = w.lo;
  for (;;) {
    visit(a);
    size_t i = a.size();
    while (i > 0) {
      --i;
      if (a[i] < w.hi[i]) {
        ++a[i];
        for (size_t j = i + 1; j < a.size(); ++j) a[j] = w.lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (a.empty()) return;
  }
}

FlockPtr Flock::valuation(QMatrix A, std::vector<std::string> ground,
                          const mpz_class& p) {
  if (!is_prime(p)) fail("not_prime", p.get_str() + " is not prime");
  for (const auto& r : A)
    if (r.size() != ground.size())
      fail("bad_input", "matrix width does not match ground size");
  QDom q;
  if (rank_of(q, A) != A.size())
    fail("dependent_rows", "valuation flock needs independent rows");
  auto f = std::shared_ptr<Flock>(new Flock());
  f->kind_ = FlockKind::Valuation;
  f->ground_ = std::move(ground);
  f->field_ = Field::make(p, 1);
  f->exp_ = 0;
  f->dim_ = A.size();
  f->A_ = std::move(A);
  f->p_ = p;
  return f;
}

FlockPtr Flock::explicit_window(std::vector<std::string> ground,
                                FieldPtr field, long autom_exp, Window box,
                                std::map<std::vector<long>, Subspace> table) {
  if (box.coords() != ground.size())
    fail("bad_input", "window arity does not match ground size");
  if (table.empty()) fail("bad_input", "empty evaluation table");
  size_t d = table.begin()->second.dim();
  mpz_class expected = box.point_count();
  if (mpz_class(table.size()) != expected)
    fail("bad_input", "table must cover the box exactly");
  for (const auto& [a, sub] : table) {
    if (!box.contains(a)) fail("bad_input", "table point outside the box");
    if (sub.ground != ground) fail("bad_input", "subspace ground mismatch");
    if (!same_field(sub.dom.F, field)) fail("bad_input", "subspace field mismatch");
    if (sub.dim() != d) fail("bad_input", "subspace dimensions differ");
  }
  auto f = std::shared_ptr<Flock>(new Flock());
  f->kind_ = FlockKind::Explicit;
  f->ground_ = std::move(ground);
  f->field_ = std::move(field);
  f->exp_ = autom_exp;
  f->dim_ = d;
  f->box_ = std::move(box);
  f->table_ = std::move(table);
  return f;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Subspace stretched_at(const Flock& f, const std::vector<long>& beta) {
  long m = static_cast<long>(f.stretch_factor());
  size_t n = beta.size();
  std::vector<long> alpha(n);
  std::vector<long> r(n);
  for (size_t i = 0; i < n; ++i) {
    alpha[i] = floor_div(beta[i], m);
    r[i] = beta[i] - m * alpha[i];
  }
  Subspace inner = flock_at(f.inner(), alpha);
  bool base_change = !same_field(inner.dom.F, f.field());
  std::vector<Subspace> parts;
  for (long k = 0; k < m; ++k) {
    std::vector<std::string> at_k, above, below;
    for (size_t i = 0; i < n; ++i) {
      if (r[i] == k)
        at_k.push_back(f.ground()[i]);
      else if (r[i] > k)
        above.push_back(f.ground()[i]);
      else
        below.push_back(f.ground()[i]);
    }
    if (at_k.empty()) continue;
    Subspace piece = inner;
    if (!above.empty()) piece = subspace_contract(piece, above);
    if (!below.empty()) piece = subspace_delete(piece, below);
    if (base_change) piece = embed_subspace(piece, f.field());
    if (k != 0) piece = map_frobenius(piece, f.autom_exp() * k);
    parts.push_back(std::move(piece));
  }
  return direct_sum_on_ground(GFDom{f.field()}, parts, f.ground());
}

}  // namespace

Subspace flock_at(const FlockPtr& f, const std::vector<long>& alpha) {
  if (!f) fail("bad_input", "null flock");
  if (alpha.size() != f->ground().size())
    fail("bad_input", "alpha arity does not match ground size");
  switch (f->kind()) {
    case FlockKind::Valuation:
      return p_reduce(f->matrix(), f->ground(), f->prime(), alpha);
    case FlockKind::Stretched:
      return stretched_at(*f, alpha);
    case FlockKind::Dual: {
      std::vector<long> neg(alpha.size());
      for (size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
      return orthogonal_complement(flock_at(f->inner(), neg));
    }
    case FlockKind::Explicit: {
      auto it = f->table().find(alpha);
      if (it == f->table().end())
        fail("out_of_window", "explicit flock has no value at that point");
      return it->second;
    }
  }
  fail("internal", "unknown flock kind");
}

FlockPtr stretch_flock(const FlockPtr& f, unsigned long m) {
  if (!f) fail("bad_input", "null flock");
  if (m == 0) fail("bad_input", "stretch factor must be at least 1");
  if (m == 1) return f;
  FieldPtr target;
  long eprime = 0;
  if (f->field()->degree() == 1) {
    // Trivial automorphism on the prime field: base-change to GF(p^m) and
    // declare psi = F^-1, whose m-th power is again trivial.
    target = Field::make(f->field()->characteristic(),
                         static_cast<unsigned>(m));
    eprime = -1;
  } else {
    long d = f->field()->degree();
    long e = ((f->autom_exp() % d) + d) % d;
    long mm = static_cast<long>(m % static_cast<unsigned long>(d));
    bool found = false;
    for (long c = 0; c < d; ++c) {
      if ((mm * c) % d == e) {
        eprime = c;
        found = true;
        break;
      }
    }
    if (!found)
      fail("no_compatible_automorphism",
           "no exponent e' with " + std::to_string(m) + "e' = " +
               std::to_string(e) + " mod " + std::to_string(d));
    if (eprime > d / 2) eprime -= d;
    target = f->field();
  }
  auto out = std::shared_ptr<Flock>(new Flock());
  out->kind_ = FlockKind::Stretched;
  out->ground_ = f->ground();
  out->field_ = std::move(target);
  out->exp_ = eprime;
  out->dim_ = f->dim();
  out->inner_ = f;
  out->m_ = m;
  return out;
}

FlockPtr dual_flock(const FlockPtr& f) {
  if (!f) fail("bad_input", "null flock");
  auto out = std::shared_ptr<Flock>(new Flock());
  out->kind_ = FlockKind::Dual;
  out->ground_ = f->ground();
  out->field_ = f->field();
  out->exp_ = -f->autom_exp();
  out->dim_ = f->ground().size() - f->dim();
  out->inner_ = f;
  return out;
}

namespace {

std::string point_text(const std::vector<long>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

void enforce_budget(const Window& w, unsigned long max_points) {
  if (w.point_count() > max_points)
    fail("window_too_large",
         "window has more than " + std::to_string(max_points) +
             " points; raise the budget to opt in");
}

}  // namespace

AxiomReport check_axioms(const FlockPtr& f, const Window& w,
                         unsigned subset_samples, unsigned long seed,
                         unsigned long max_points) {
  if (!f) fail("bad_input", "null flock");
  size_t n = f->ground().size();
  if (w.coords() != n) fail("bad_input", "window arity mismatch");
  if (n > 63) fail("enumeration_too_large", "ground set too large");
  enforce_budget(w, max_points);
  AxiomReport rep{w, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for_each_point(w, [&](const std::vector<long>& alpha) {
    ++rep.points;
    Subspace va = flock_at(f, alpha);
    if (va.dim() != f->dim())
      rep.violations.push_back(
          {"dimension", alpha,
           "dim " + std::to_string(va.dim()) + ", flock declares " +
               std::to_string(f->dim())});
    std::vector<long> shifted(alpha);
    for (auto& c : shifted) ++c;
    Subspace all_up = flock_at(f, shifted);
    Subspace twisted = map_frobenius(va, f->autom_exp());
    ++rep.checks;
    if (!same_space(all_up, twisted))
      rep.violations.push_back(
          {"LF2", alpha, "V(alpha+1) differs from psi V(alpha)"});
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::string> one{f->ground()[i]};
      Subspace lhs = subspace_contract(va, one);
      std::vector<long> aei(alpha);
      ++aei[i];
      Subspace rhs = subspace_delete(flock_at(f, aei), one);
      ++rep.checks;
      if (!same_space(lhs, rhs))
        rep.violations.push_back(
            {"LF1", alpha, "coordinate " + f->ground()[i]});
    }
    for (unsigned s = 0; s < subset_samples && n >= 2; ++s) {
      uint64_t mask = rng() & ((uint64_t(1) << n) - 1);
      if (std::popcount(mask) < 2) continue;
      std::vector<std::string> labels;
      std::vector<long> ai(alpha);
      for (size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          labels.push_back(f->ground()[i]);
          ++ai[i];
        }
      }
      Subspace lhs = subspace_contract(va, labels);
      Subspace rhs = subspace_delete(flock_at(f, ai), labels);
      ++rep.checks;
      if (!same_space(lhs, rhs)) {
        std::string names;
        for (const auto& l : labels) names += (names.empty() ? "" : ",") + l;
        rep.violations.push_back({"LF1'", alpha, "subset {" + names + "}"});
      }
    }
  });
  return rep;
}

Matroid support_matroid(const FlockPtr& f, const Window& w,
                        unsigned long max_points) {
  if (!f) fail("bad_input", "null flock");
  if (w.coords() != f->ground().size()) fail("bad_input", "window arity mismatch");
  enforce_budget(w, max_points);
  std::vector<uint64_t> bases;
  for_each_point(w, [&](const std::vector<long>& alpha) {
    Matroid m = matroid_from_subspace(flock_at(f, alpha));
    bases.insert(bases.end(), m.bases().begin(), m.bases().end());
  });
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid(f->ground(), std::move(bases));
}

}  // namespace mcs
