#include "matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace mcs {

namespace detail {

unsigned long binom_capped(size_t n, size_t k, unsigned long cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 4 * static_cast<unsigned long long>(cap)) return cap + 1;
  }
  return static_cast<unsigned long>(r);
}

void for_each_combination(size_t n, size_t k,
                          const std::function<void(const std::vector<size_t>&)>& f) {
  if (k > n) return;
  std::vector<size_t> comb(k);
  for (size_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    f(comb);
    if (k == 0) return;
    size_t i = k;
    while (i-- > 0) {
      if (comb[i] + 1 <= n - k + i) {
        ++comb[i];
        for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace detail

namespace {

// Exchange-axiom verification is quadratic in the basis count; bound the
// instance size so construction stays cheap on large families.
constexpr size_t kExchangeGroundLimit = 12;
constexpr size_t kExchangeBasisLimit = 800;

void check_exchange(const std::vector<uint64_t>& bases, size_t n) {
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      uint64_t only1 = b1 & ~b2;
      if (only1 == 0) continue;
      for (size_t x = 0; x < n; ++x) {
        if (!(only1 >> x & 1)) continue;
        uint64_t base = b1 & ~(uint64_t(1) << x);
        uint64_t only2 = b2 & ~b1;
        bool found = false;
        for (size_t y = 0; y < n && !found; ++y) {
          if (!(only2 >> y & 1)) continue;
          uint64_t cand = base | (uint64_t(1) << y);
          found = std::binary_search(bases.begin(), bases.end(), cand);
        }
        if (!found)
          fail("not_a_matroid", "basis-exchange fails for a basis pair");
      }
    }
  }
}

}  // namespace

Matroid::Matroid(std::vector<std::string> ground, std::vector<uint64_t> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  if (ground_.size() > 64)
    fail("bad_input", "ground set exceeds 64 elements");
  {
    std::map<std::string, size_t> seen;
    for (size_t i = 0; i < ground_.size(); ++i)
      if (!seen.emplace(ground_[i], i).second)
        fail("bad_input", "duplicate ground label " + ground_[i]);
  }
  if (bases_.empty()) fail("not_a_matroid", "basis family is empty");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  uint64_t full = ground_.size() == 64 ? ~uint64_t(0)
                                       : (uint64_t(1) << ground_.size()) - 1;
  rank_ = static_cast<size_t>(std::popcount(bases_[0]));
  for (const auto& b : bases_) {
    if ((b & ~full) != 0) fail("bad_input", "basis mask outside ground set");
    if (static_cast<size_t>(std::popcount(b)) != rank_)
      fail("not_a_matroid", "bases of unequal size");
  }
  if (ground_.size() <= kExchangeGroundLimit && bases_.size() <= kExchangeBasisLimit)
    check_exchange(bases_, ground_.size());
}

bool Matroid::is_basis(uint64_t mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask);
}

bool Matroid::is_independent(uint64_t mask) const {
  for (const auto& b : bases_)
    if ((mask & b) == mask) return true;
  return false;
}

uint64_t Matroid::mask_of(const std::vector<std::string>& labels) const {
  auto idx = resolve_labels(ground_, labels);
  uint64_t m = 0;
  for (auto i : idx) m |= uint64_t(1) << i;
  return m;
}

std::vector<std::string> Matroid::labels_of(uint64_t mask) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ground_.size(); ++i)
    if (mask >> i & 1) out.push_back(ground_[i]);
  return out;
}

std::vector<std::vector<std::string>> Matroid::basis_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(bases_.size());
  for (const auto& b : bases_) out.push_back(labels_of(b));
  return out;
}

Matroid matroid_dual(const Matroid& m) {
  size_t n = m.ground().size();
  uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  std::vector<uint64_t> bases;
  bases.reserve(m.bases().size());
  for (const auto& b : m.bases()) bases.push_back(full & ~b);
  return Matroid(m.ground(), std::move(bases));
}

Matroid matroid_direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> ground = a.ground();
  for (const auto& g : b.ground()) {
    if (std::find(ground.begin(), ground.end(), g) != ground.end())
      fail("bad_input", "direct sum ground sets share label " + g);
    ground.push_back(g);
  }
  if (ground.size() > 64) fail("bad_input", "ground set exceeds 64 elements");
  size_t shift = a.ground().size();
  std::vector<uint64_t> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (const auto& x : a.bases())
    for (const auto& y : b.bases()) bases.push_back(x | (y << shift));
  return Matroid(std::move(ground), std::move(bases));
}

Matroid matroid_minor(const Matroid& m, const std::vector<std::string>& del,
                      const std::vector<std::string>& contract) {
  auto di = resolve_labels(m.ground(), del);
  auto ci = resolve_labels(m.ground(), contract);
  uint64_t dmask = 0, cmask = 0;
  for (auto i : di) dmask |= uint64_t(1) << i;
  for (auto i : ci) cmask |= uint64_t(1) << i;
  if (dmask & cmask) fail("bad_input", "deletion and contraction sets overlap");

  // Contract first: keep bases meeting C in a maximum independent subset.
  int rc = 0;
  for (const auto& b : m.bases())
    rc = std::max(rc, std::popcount(b & cmask));
  std::vector<uint64_t> after_contract;
  for (const auto& b : m.bases())
    if (std::popcount(b & cmask) == rc) after_contract.push_back(b & ~cmask);

  // Then delete: maximum-size traces on the kept coordinates are the bases.
  uint64_t keep = ~(dmask | cmask);
  int rd = 0;
  for (const auto& b : after_contract)
    rd = std::max(rd, std::popcount(b & keep));
  std::vector<uint64_t> traces;
  for (const auto& b : after_contract)
    if (std::popcount(b & keep) == rd) traces.push_back(b & keep);

  // Re-index masks onto the shrunken ground set.
  std::vector<std::string> ground;
  std::vector<int> newpos(m.ground().size(), -1);
  for (size_t i = 0; i < m.ground().size(); ++i) {
    if ((dmask | cmask) >> i & 1) continue;
    newpos[i] = static_cast<int>(ground.size());
    ground.push_back(m.ground()[i]);
  }
  std::vector<uint64_t> bases;
  for (const auto& t : traces) {
    uint64_t nb = 0;
    for (size_t i = 0; i < m.ground().size(); ++i)
      if (t >> i & 1) nb |= uint64_t(1) << newpos[i];
    bases.push_back(nb);
  }
  return Matroid(std::move(ground), std::move(bases));
}

std::vector<std::vector<std::string>> circuits(const Matroid& m) {
  size_t n = m.ground().size();
  size_t d = m.rank();
  unsigned long total = 0;
  for (size_t k = 1; k <= d + 1 && k <= n; ++k)
    total += detail::binom_capped(n, k, kEnumerationLimit);
  if (total > kEnumerationLimit)
    fail("enumeration_too_large", "too many subsets to scan for circuits");
  std::vector<std::vector<std::string>> out;
  for (size_t k = 1; k <= d + 1 && k <= n; ++k) {
    detail::for_each_combination(n, k, [&](const std::vector<size_t>& comb) {
      uint64_t mask = 0;
      for (auto c : comb) mask |= uint64_t(1) << c;
      if (m.is_independent(mask)) return;
      for (auto c : comb)
        if (!m.is_independent(mask & ~(uint64_t(1) << c))) return;
      out.push_back(m.labels_of(mask));
    });
  }
  return out;
}

}  // namespace mcs
