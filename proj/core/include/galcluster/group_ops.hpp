#pragma once

#include <cstdint>
#include <vector>

#include "galcluster/perm_group.hpp"

namespace galcluster {

/// Orbits of G on its points, each sorted, listed by least point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Throws DomainError if `point` is outside the domain.
PermGroup point_stabilizer(const PermGroup& g, Point point);

/// Points fixed by every element of H (equivalently, by every generator).
std::vector<Point> fixed_points(const PermGroup& h);

/// N_G(H) = {g in G : gHg^-1 = H}, by a scan over the elements of G.
PermGroup normalizer(const SubgroupRel& rel);

/// H^G, the smallest normal subgroup of G containing H.
PermGroup normal_closure(const SubgroupRel& rel);

/// The intersection of all conjugates of H: the largest normal subgroup of G
/// contained in H.
PermGroup core(const SubgroupRel& rel);

bool is_normal(const SubgroupRel& rel);

/// Permutation action of G on the left cosets gH.
///
/// Cosets are labelled 0, 1, ... in increasing order of their
/// lexicographically least element, so the coset H itself is point 0.
class CosetAction {
 public:
  /// Throws CapExceeded if [G:H] exceeds the element cap.
  explicit CosetAction(const SubgroupRel& rel);

  std::size_t degree() const noexcept { return representatives_.size(); }
  /// The image of G; lazily enumerated like any PermGroup.
  const PermGroup& image() const noexcept { return image_; }
  /// Least element of each coset, in label order.
  std::vector<Permutation> representatives() const;
  /// Label of the coset containing `g` (an element of G).
  Point coset_of(const Permutation& g) const;

  /// The permutation induced by g in G.
  Permutation act(const Permutation& g) const;
  /// Image of a subgroup K <= G.
  PermGroup image_of(const PermGroup& k) const;

 private:
  PermGroup ambient_;
  std::vector<ElementTable::Index> representatives_;
  std::vector<Point> label_;  // per ambient element index
  PermGroup image_;
};

inline CosetAction coset_action(const SubgroupRel& rel) { return CosetAction(rel); }

/// G1 x G2 acting on the disjoint union of the domains; the points of G2 are
/// shifted by deg(G1). Throws CapExceeded if |G1||G2| exceeds G1's element
/// cap.
PermGroup direct_product(const PermGroup& g1, const PermGroup& g2);

/// p acting on the first deg(p) points of a domain with `extra` trailing
/// fixed points.
Permutation embed_left(const Permutation& p, std::size_t extra);
/// q acting on the last deg(q) points, after `shift` leading fixed points.
Permutation embed_right(std::size_t shift, const Permutation& q);

/// Conjugacy classes as lists of element indices into g.elements(), ordered
/// by least index; class 0 is {identity}.
std::vector<std::vector<ElementTable::Index>> conjugacy_classes(const PermGroup& g);

/// Every normal subgroup of G, trivial group and G included, sorted by
/// canonical_less. Computed as the join closure of the normal closures of
/// single conjugacy classes. Throws CapExceeded if |G| exceeds the lattice
/// cap.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

/// |A n B| for subgroups of a common degree.
std::uint64_t intersection_order(const PermGroup& a, const PermGroup& b);

}  // namespace galcluster
