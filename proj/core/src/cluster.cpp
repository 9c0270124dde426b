#include "galcluster/cluster.hpp"

#include <stdexcept>
#include <string>

#include "galcluster/group_ops.hpp"

namespace galcluster {

ExtensionModel::ExtensionModel(PermGroup group, PermGroup subgroup)
    : rel_(std::move(group), std::move(subgroup)) {}

ClusterInvariants operator*(const ClusterInvariants& a, const ClusterInvariants& b) {
  return {a.n * b.n, a.r * b.r, a.s * b.s, a.t * b.t, a.u * b.u};
}

ClusterInvariants invariants(const ExtensionModel& m) {
  const std::uint64_t g = m.group().order();
  const std::uint64_t h = m.subgroup().order();
  const std::uint64_t norm = normalizer(m.rel()).order();
  const std::uint64_t closure = normal_closure(m.rel()).order();

  ClusterInvariants inv{g / h, norm / h, g / norm, g / closure, closure / h};
  if (inv.r * inv.s != inv.n || inv.t * inv.u != inv.n) {
    throw std::logic_error("cluster invariants violate r*s = n = t*u");
  }
  return inv;
}

std::uint64_t cluster_size_fixed_point_oracle(const ExtensionModel& m) {
  const CosetAction action(m.rel());
  return fixed_points(action.image_of(m.subgroup())).size();
}

ExtensionModel product_model(const ExtensionModel& l, const ExtensionModel& j) {
  PermGroup g = direct_product(l.group(), j.group());
  PermGroup h = direct_product(l.subgroup(), j.subgroup());
  return ExtensionModel(std::move(g), std::move(h));
}

namespace {

std::optional<std::uint64_t> quotient(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  return num / den;
}

}  // namespace

std::optional<MagnificationTuple> magnification_tuple(const ClusterInvariants& m,
                                                      const ClusterInvariants& l) {
  auto r = quotient(m.r, l.r);
  auto s = quotient(m.s, l.s);
  auto t = quotient(m.t, l.t);
  auto u = quotient(m.u, l.u);
  if (!r || !s || !t || !u) return std::nullopt;
  return MagnificationTuple{*r, *s, *t, *u};
}

std::optional<std::uint64_t> weak_cluster_factor(const ClusterInvariants& m,
                                                 const ClusterInvariants& l) {
  return quotient(m.r, l.r);
}

}  // namespace galcluster
