#include "galcluster/magnification.hpp"

#include "galcluster/group_ops.hpp"

namespace galcluster {

std::vector<Decomposition> enumerate_decompositions(const PermGroup& g) {
  const auto normals = normal_subgroups(g);
  const std::uint64_t order = g.order();
  std::vector<Decomposition> result;
  for (const auto& a : normals) {
    for (const auto& b : normals) {
      if (a.order() * b.order() != order) continue;
      if (intersection_order(a, b) != 1) continue;
      result.push_back({a, b});
    }
  }
  return result;
}

std::optional<DecompositionWitness> scm_witness(const ExtensionModel& m) {
  const PermGroup& h = m.subgroup();
  for (auto& d : enumerate_decompositions(m.group())) {
    if (d.b.order() <= 1) continue;
    if (!h.is_subgroup_of(d.a)) continue;
    const std::uint64_t index = d.a.order() / h.order();
    if (index <= 2) continue;
    const std::uint64_t b_order = d.b.order();
    return DecompositionWitness{std::move(d.a), std::move(d.b), DecompositionWitness::Kind::kScm,
                                {index, b_order}};
  }
  return std::nullopt;
}

std::optional<DecompositionWitness> sgm_witness(const ExtensionModel& m) {
  const PermGroup& h = m.subgroup();
  for (auto& d : enumerate_decompositions(m.group())) {
    const std::uint64_t ha = intersection_order(h, d.a);
    const std::uint64_t hb = intersection_order(h, d.b);
    if (ha * hb != h.order()) continue;
    const std::uint64_t ia = d.a.order() / ha;
    const std::uint64_t ib = d.b.order() / hb;
    if (ia <= 1 || ib <= 1) continue;
    return DecompositionWitness{std::move(d.a), std::move(d.b), DecompositionWitness::Kind::kSgm,
                                {ia, ib}};
  }
  return std::nullopt;
}

bool is_primitive(const ExtensionModel& m) { return !scm_witness(m).has_value(); }

bool is_general_primitive(const ExtensionModel& m) { return !sgm_witness(m).has_value(); }

bool verify_witness(const ExtensionModel& m, const DecompositionWitness& w) {
  const PermGroup& g = m.group();
  const PermGroup& h = m.subgroup();
  if (!w.a.is_subgroup_of(g) || !w.b.is_subgroup_of(g)) return false;
  if (!is_normal(SubgroupRel(g, w.a)) || !is_normal(SubgroupRel(g, w.b))) return false;
  if (intersection_order(w.a, w.b) != 1) return false;
  if (w.a.order() * w.b.order() != g.order()) return false;

  if (w.kind == DecompositionWitness::Kind::kScm) {
    if (!h.is_subgroup_of(w.a)) return false;
    const std::uint64_t index = w.a.order() / h.order();
    return index > 2 && w.b.order() > 1 && w.indices == std::pair{index, w.b.order()};
  }
  const std::uint64_t ha = intersection_order(h, w.a);
  const std::uint64_t hb = intersection_order(h, w.b);
  if (ha * hb != h.order()) return false;
  const std::pair indices{w.a.order() / ha, w.b.order() / hb};
  return indices.first > 1 && indices.second > 1 && w.indices == indices;
}

QuickVerdict quick_primitive_check(const ExtensionModel& m) {
  const PermGroup& h = m.subgroup();
  const std::uint64_t order = m.group().order();
  for (const auto& n : normal_subgroups(m.group())) {
    if (n.order() < order && h.is_subgroup_of(n)) return QuickVerdict::kSilent;
  }
  return QuickVerdict::kNoProperNormalContainsH;
}

QuickVerdict quick_general_primitive_check(const ExtensionModel& m) {
  const std::uint64_t order = m.group().order();
  std::vector<PermGroup> nontrivial;
  for (auto& n : normal_subgroups(m.group())) {
    if (n.order() > 1) nontrivial.push_back(std::move(n));
  }
  std::size_t proper = 0;
  for (const auto& n : nontrivial) proper += n.order() < order ? 1 : 0;
  if (proper < 2) return QuickVerdict::kFewNormalSubgroups;

  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j) {
      if (intersection_order(nontrivial[i], nontrivial[j]) == 1) return QuickVerdict::kSilent;
    }
  }
  return QuickVerdict::kNormalsIntersect;
}

CoincidenceClauses coincidence_clauses(const ExtensionModel& l, const ExtensionModel& j) {
  CoincidenceClauses c;
  const bool j_nontrivial = !j.is_trivial();
  c.l_primitive = is_primitive(l);
  c.j_nontrivial_and_primitive = j_nontrivial && is_primitive(j);

  const auto inv_l = invariants(l);
  const auto inv_j = invariants(j);
  const bool l_up_ends_at_l = ascending_chain(l).subgroups.back() == l.subgroup();
  const bool j_up_ends_at_j = ascending_chain(j).subgroups.back() == j.subgroup();
  const bool l_down_ends_at_k = descending_chain(l).subgroups.back() == l.group();
  const bool j_down_ends_at_k = descending_chain(j).subgroups.back() == j.group();

  c.j_rigid_l_descends = j_nontrivial && inv_j.r == 1 && inv_l.t == 1 && j_up_ends_at_j && l_down_ends_at_k;
  c.l_rigid_j_descends = j_nontrivial && inv_l.r == 1 && inv_j.t == 1 && l_up_ends_at_l && j_down_ends_at_k;
  return c;
}

}  // namespace galcluster
