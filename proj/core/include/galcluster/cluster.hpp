#pragma once

#include <cstdint>
#include <optional>

#include "galcluster/perm_group.hpp"

namespace galcluster {

/// A finite separable extension L/K seen through its Galois correspondence:
/// G = Gal(L~/K) and H = Gal(L~/L), H <= G. Fields are never represented
/// directly; every field-level notion is read off the pair.
class ExtensionModel {
 public:
  /// Throws DomainError unless H <= G.
  ExtensionModel(PermGroup group, PermGroup subgroup);
  explicit ExtensionModel(SubgroupRel rel) : rel_(std::move(rel)) {}

  const PermGroup& group() const noexcept { return rel_.ambient(); }
  const PermGroup& subgroup() const noexcept { return rel_.sub(); }
  const SubgroupRel& rel() const noexcept { return rel_; }

  /// [G:H], the degree of the modelled extension.
  std::uint64_t degree() const { return group().order() / subgroup().order(); }
  /// H = G, i.e. the degree-1 extension.
  bool is_trivial() const { return group().order() == subgroup().order(); }

 private:
  SubgroupRel rel_;
};

/// (n, r, s, t, u) = ([G:H], [N_G(H):H], [G:N_G(H)], [G:H^G], [H^G:H]).
struct ClusterInvariants {
  std::uint64_t n = 1;
  std::uint64_t r = 1;
  std::uint64_t s = 1;
  std::uint64_t t = 1;
  std::uint64_t u = 1;

  friend bool operator==(const ClusterInvariants&, const ClusterInvariants&) = default;
};

ClusterInvariants operator*(const ClusterInvariants& a, const ClusterInvariants& b);

/// Component-wise quotients (r, s, t, u) between a model and a submodel.
struct MagnificationTuple {
  std::uint64_t r = 1;
  std::uint64_t s = 1;
  std::uint64_t t = 1;
  std::uint64_t u = 1;

  bool is_trivial() const noexcept { return r == 1 && s == 1 && t == 1 && u == 1; }
  friend bool operator==(const MagnificationTuple&, const MagnificationTuple&) = default;
};

/// Throws std::logic_error if r*s != n or t*u != n (cannot happen for a
/// valid model; the check guards the group engine).
ClusterInvariants invariants(const ExtensionModel& m);

/// Cluster size recomputed independently: the number of points of G/H fixed
/// by H in the coset action. Always equals invariants(m).r.
std::uint64_t cluster_size_fixed_point_oracle(const ExtensionModel& m);

/// (G_L x G_J, H_L x H_J) on the disjoint union of the two domains: the
/// compositum LJ of two extensions with linearly disjoint Galois closures.
ExtensionModel product_model(const ExtensionModel& l, const ExtensionModel& j);

/// Weak general magnification of M over L: all four divisibilities
/// r_L | r_M, s_L | s_M, t_L | t_M, u_L | u_M, returning the quotients.
/// The subextension relation between the two models is the caller's
/// contract; it cannot be decided from two unrelated (G, H) pairs.
std::optional<MagnificationTuple> magnification_tuple(const ClusterInvariants& m,
                                                      const ClusterInvariants& l);

/// Weak cluster magnification factor r_M / r_L, if r_L divides r_M.
std::optional<std::uint64_t> weak_cluster_factor(const ClusterInvariants& m,
                                                 const ClusterInvariants& l);

}  // namespace galcluster
