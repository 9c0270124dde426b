#pragma once

#include <vector>

#include "galcluster/perm_group.hpp"

namespace galcluster::detail {

using Index = ElementTable::Index;

/// Writes a*b (apply b first) into `out`.
inline void compose_into(std::span<const Point> a, std::span<const Point> b, std::vector<Point>& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
}

/// Writes g*x*g^-1 into `out` without forming g^-1.
inline void conjugate_into(std::span<const Point> g, std::span<const Point> x, std::vector<Point>& out) {
  out.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = g[x[i]];
}

/// A subgroup of an enumerated ambient group, tracked in the ambient's index
/// space and grown one generator at a time.
class IndexClosure {
 public:
  explicit IndexClosure(const ElementTable& ambient)
      : table_(&ambient), member_(ambient.size(), 0), members_{0} {
    member_[0] = 1;
  }

  bool contains(Index i) const noexcept { return member_[i] != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Index>& members() const noexcept { return members_; }
  const std::vector<Index>& generators() const noexcept { return gens_; }

  /// Replaces the subgroup by <subgroup, g>. Existing members are already
  /// closed under the old generators, so only they need multiplying by g;
  /// newly found elements are multiplied by every generator.
  void adjoin(Index g) {
    if (contains(g)) return;
    gens_.push_back(g);
    std::size_t frontier = members_.size();
    for (std::size_t i = 0; i < frontier; ++i) push(product(members_[i], g));
    for (std::size_t i = frontier; i < members_.size(); ++i) {
      for (Index gen : gens_) push(product(members_[i], gen));
    }
  }

 private:
  Index product(Index a, Index b) {
    compose_into(table_->row(a), table_->row(b), scratch_);
    // The ambient table is a group, so the product is always present.
    return *table_->find(scratch_);
  }

  void push(Index i) {
    if (member_[i]) return;
    member_[i] = 1;
    members_.push_back(i);
  }

  const ElementTable* table_;
  std::vector<char> member_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
  std::vector<Point> scratch_;
};

}  // namespace galcluster::detail
