#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "matroid.hpp"

namespace mcs {

// Finite observation box in Z^E: a closed integer interval per coordinate.
struct Window {
  std::vector<long> lo;
  std::vector<long> hi;

  size_t coords() const { return lo.size(); }
  mpz_class point_count() const;
  bool contains(const std::vector<long>& a) const;
};

Window cube_window(size_t n, long lo, long hi);

// Visits every integer point of the box in lex order, the last coordinate
// varying fastest.
void for_each_point(const Window& w,
                    const std::function<void(const std::vector<long>&)>& visit);

enum class FlockKind { Valuation, Stretched, Dual, Explicit };

class Flock;
using FlockPtr = std::shared_ptr<const Flock>;

// A lazily evaluated family alpha -> V_alpha of d-dimensional subspaces of
// K^E, together with a declared automorphism psi = F^e (e = 0 is trivial).
// Valuation: V_alpha = p-adic reduction of a fixed rational row space.
// Stretched: the factor-m refinement of an inner flock with psi^m equal to
// the inner automorphism. Dual: alpha -> complement of inner at -alpha.
// Explicit: a finite table over a box, for negative controls.
class Flock {
 public:
  static FlockPtr valuation(QMatrix A, std::vector<std::string> ground,
                            const mpz_class& p);
  static FlockPtr explicit_window(std::vector<std::string> ground,
                                  FieldPtr field, long autom_exp, Window box,
                                  std::map<std::vector<long>, Subspace> table);

  FlockKind kind() const { return kind_; }
  const std::vector<std::string>& ground() const { return ground_; }
  const FieldPtr& field() const { return field_; }
  long autom_exp() const { return exp_; }
  size_t dim() const { return dim_; }

  const QMatrix& matrix() const { return A_; }
  const mpz_class& prime() const { return p_; }
  unsigned long stretch_factor() const { return m_; }
  const FlockPtr& inner() const { return inner_; }
  const Window& box() const { return box_; }
  const std::map<std::vector<long>, Subspace>& table() const { return table_; }

 private:
  Flock() = default;
  friend FlockPtr stretch_flock(const FlockPtr& f, unsigned long m);
  friend FlockPtr dual_flock(const FlockPtr& f);

  FlockKind kind_ = FlockKind::Valuation;
  std::vector<std::string> ground_;
  FieldPtr field_;
  long exp_ = 0;
  size_t dim_ = 0;

  QMatrix A_;
  mpz_class p_;
  FlockPtr inner_;
  unsigned long m_ = 1;
  Window box_;
  std::map<std::vector<long>, Subspace> table_;
};

// Evaluates the family at one integer vector.
// Errors: "out_of_window" for Explicit flocks outside their box.
Subspace flock_at(const FlockPtr& f, const std::vector<long>& alpha);

// Factor-m refinement: V'_{m alpha + r} assembles the psi^k-twisted
// contract/delete pieces of V_alpha along the partition I_k = {i: r_i = k}.
// A prime-field inner flock with trivial automorphism is base-changed to
// GF(p^m) with psi = F^-1; otherwise the field is kept and the declared
// exponent e' solves m e' = e mod the extension degree.
// Errors: "no_compatible_automorphism" when that congruence has no solution.
FlockPtr stretch_flock(const FlockPtr& f, unsigned long m);

// alpha -> orthogonal complement of the inner space at -alpha; the declared
// automorphism exponent is negated.
FlockPtr dual_flock(const FlockPtr& f);

struct AxiomViolation {
  std::string axiom;  // "LF1", "LF2", "LF1'", "dimension"
  std::vector<long> alpha;
  std::string detail;
};

struct AxiomReport {
  Window window;
  unsigned long points = 0;
  unsigned long checks = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Verifies, at every window point alpha: constant dimension, LF2
// (V_{alpha+1} = psi V_alpha), LF1 at every coordinate (V_alpha / i =
// V_{alpha+e_i} minus i), and LF1' on `subset_samples` seeded random
// subsets of size >= 2. The flock must be evaluable on the window and its
// +e_i / +1 shifts. Windows above `max_points` points are refused.
AxiomReport check_axioms(const FlockPtr& f, const Window& w,
                         unsigned subset_samples = 4, unsigned long seed = 0,
                         unsigned long max_points = 10000);

// Union over the window of the bases of the column matroids M(V_alpha).
// The window is a finite approximation of Z^E; reports carry it.
Matroid support_matroid(const FlockPtr& f, const Window& w,
                        unsigned long max_points = 10000);

}  // namespace mcs
