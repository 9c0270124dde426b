#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "galcluster/permutation.hpp"

namespace galcluster {

/// Resource caps. Element enumeration refuses groups larger than
/// `element_cap`; normal-subgroup lattice searches refuse groups larger than
/// `lattice_cap`. Groups derived from another group inherit its limits.
struct Limits {
  std::size_t element_cap = 2'000'000;
  std::size_t lattice_cap = 20'000;
};

/// Flat, hash-indexed storage of permutations of a fixed degree.
///
/// Rows are addressed by dense indices in insertion order. The table is
/// neither copyable nor movable because its hash functor refers back to it.
class ElementTable {
 public:
  using Index = std::uint32_t;

  /// `degree` must be positive.
  explicit ElementTable(std::size_t degree);
  ElementTable(const ElementTable&) = delete;
  ElementTable& operator=(const ElementTable&) = delete;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return data_.size() / degree_; }

  std::span<const Point> row(Index i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation permutation(Index i) const;

  std::optional<Index> find(std::span<const Point> images) const;
  /// Returns the index of `images` and whether it was newly inserted.
  std::pair<Index, bool> insert(std::span<const Point> images);

  void reserve(std::size_t rows);

 private:
  struct Hash {
    using is_transparent = void;
    const ElementTable* table;
    std::size_t operator()(Index i) const noexcept;
    std::size_t operator()(std::span<const Point> s) const noexcept;
  };
  struct Equal {
    using is_transparent = void;
    const ElementTable* table;
    bool operator()(Index a, Index b) const noexcept;
    bool operator()(std::span<const Point> a, Index b) const noexcept;
    bool operator()(Index a, std::span<const Point> b) const noexcept;
  };

  std::size_t degree_;
  std::vector<Point> data_;
  std::unordered_set<Index, Hash, Equal> index_;
};

/// A finite permutation group given by degree and generators.
///
/// Values are immutable handles onto shared state; copying is cheap. The
/// element set is enumerated lazily on first use (single-flight, safe for
/// concurrent readers) and cached. The identity is always element 0.
class PermGroup {
 public:
  using Index = ElementTable::Index;

  /// Lazy construction: validates degrees but defers enumeration.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits = {});

  static PermGroup trivial(std::size_t degree, Limits limits = {});

  /// Builds the subgroup of `ambient` whose elements are `members` (indices
  /// into ambient's table). The caller guarantees closure. Generators are
  /// chosen canonically: a greedy pass over the members in lexicographic
  /// order, so the result does not depend on how `ambient` was presented.
  static PermGroup from_members(const PermGroup& ambient, std::vector<Index> members);

  std::size_t degree() const noexcept;
  std::span<const Permutation> generators() const noexcept;
  const Limits& limits() const noexcept;

  /// Enumerates on first call. Throws CapExceeded.
  std::uint64_t order() const;
  const ElementTable& elements() const;

  bool contains(const Permutation& p) const;
  bool contains(std::span<const Point> images) const;
  /// Every generator of *this lies in `other`.
  bool is_subgroup_of(const PermGroup& other) const;

  /// Element indices sorted lexicographically by image array.
  const std::vector<Index>& lex_order() const;

  /// Element set equality (same degree).
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  /// Total order used for deterministic listings: by order, then by the
  /// lexicographically sorted element list.
  friend bool canonical_less(const PermGroup& a, const PermGroup& b);

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool operator==(const PermGroup& a, const PermGroup& b);
bool canonical_less(const PermGroup& a, const PermGroup& b);

/// Validating constructor used by the public API: checks degrees and
/// enumerates eagerly so cap violations surface here.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators,
                                Limits limits = {});

/// Typed containment H <= G.
class SubgroupRel {
 public:
  /// Throws DomainError if degrees differ or a generator of `sub` is not in
  /// `ambient`.
  SubgroupRel(PermGroup ambient, PermGroup sub);

  const PermGroup& ambient() const noexcept { return ambient_; }
  const PermGroup& sub() const noexcept { return sub_; }

 private:
  PermGroup ambient_;
  PermGroup sub_;
};

}  // namespace galcluster
