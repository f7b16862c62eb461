#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace mcs {

// Cap on C(|E|, d) for basis enumeration from a subspace, and on subset
// enumeration for circuits.
inline constexpr unsigned long kEnumerationLimit = 1000000;

// Matroid on a labeled ground set, stored as the full basis family with
// each basis a bit mask over ground positions (|E| <= 64). Construction
// validates nonemptiness and uniform basis size, and checks the
// basis-exchange axiom when the instance is small enough to afford it.
class Matroid {
 public:
  Matroid(std::vector<std::string> ground, std::vector<uint64_t> bases);

  const std::vector<std::string>& ground() const { return ground_; }
  size_t rank() const { return rank_; }
  const std::vector<uint64_t>& bases() const { return bases_; }

  bool is_basis(uint64_t mask) const;
  // A set is independent exactly when some basis contains it.
  bool is_independent(uint64_t mask) const;

  uint64_t mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(uint64_t mask) const;
  std::vector<std::vector<std::string>> basis_labels() const;

  bool operator==(const Matroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
  }

 private:
  std::vector<std::string> ground_;
  size_t rank_ = 0;
  std::vector<uint64_t> bases_;  // sorted, deduplicated
};

Matroid matroid_dual(const Matroid& m);
// Ground sets must be disjoint; the result lives on their concatenation.
Matroid matroid_direct_sum(const Matroid& a, const Matroid& b);
// Deletion and contraction sets must be disjoint subsets of the ground set.
Matroid matroid_minor(const Matroid& m, const std::vector<std::string>& del,
                      const std::vector<std::string>& contract);
// All circuits, each as sorted labels, ordered by (size, position).
std::vector<std::vector<std::string>> circuits(const Matroid& m);

namespace detail {
unsigned long binom_capped(size_t n, size_t k, unsigned long cap);
void for_each_combination(size_t n, size_t k,
                          const std::function<void(const std::vector<size_t>&)>& f);
}  // namespace detail

// Column matroid of the RREF basis matrix: a d-subset of coordinates is a
// basis exactly when the corresponding column block is invertible.
template <class D>
Matroid matroid_from_subspace(const BasicSubspace<D>& V) {
  size_t n = V.ground.size();
  size_t d = V.dim();
  if (n > 64) fail("enumeration_too_large", "ground set exceeds 64 elements");
  if (detail::binom_capped(n, d, kEnumerationLimit) > kEnumerationLimit)
    fail("enumeration_too_large", "too many candidate bases to enumerate");
  std::vector<uint64_t> bases;
  detail::for_each_combination(n, d, [&](const std::vector<size_t>& comb) {
    Mat<D> sub(d, std::vector<typename D::Elem>(d, V.dom.zero()));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) sub[i][j] = V.rows[i][comb[j]];
    if (rref_in_place(V.dom, sub) == d) {
      uint64_t mask = 0;
      for (auto c : comb) mask |= uint64_t(1) << c;
      bases.push_back(mask);
    }
  });
  return Matroid(V.ground, std::move(bases));
}

// Circuit test straight on subspace columns, with no basis enumeration:
// C is a circuit iff its columns have rank |C|-1 and every proper subset
// is independent.
template <class D>
bool is_circuit(const BasicSubspace<D>& V, const std::vector<std::string>& C) {
  if (C.empty()) return false;
  auto idx = resolve_labels(V.ground, C);
  size_t d = V.dim();
  auto col_rank = [&](const std::vector<size_t>& cols) {
    Mat<D> sub(d, std::vector<typename D::Elem>(cols.size(), V.dom.zero()));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = V.rows[i][cols[j]];
    return rref_in_place(V.dom, sub);
  };
  if (col_rank(idx) != idx.size() - 1) return false;
  for (size_t skip = 0; skip < idx.size(); ++skip) {
    std::vector<size_t> rest;
    for (size_t j = 0; j < idx.size(); ++j)
      if (j != skip) rest.push_back(idx[j]);
    if (col_rank(rest) != rest.size()) return false;
  }
  return true;
}

}  // namespace mcs
