#include "galcluster/group_ops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "galcluster/errors.hpp"
#include "index_closure.hpp"

namespace galcluster {

using detail::Index;

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& gen : g.generators()) {
        Point y = gen[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

PermGroup point_stabilizer(const PermGroup& g, Point point) {
  if (point >= g.degree()) {
    throw DomainError("point " + std::to_string(point + 1) + " outside domain 1.." +
                      std::to_string(g.degree()));
  }
  const ElementTable& t = g.elements();
  std::vector<Index> members;
  for (Index i = 0; i < t.size(); ++i) {
    if (t.row(i)[point] == point) members.push_back(i);
  }
  return PermGroup::from_members(g, std::move(members));
}

std::vector<Point> fixed_points(const PermGroup& h) {
  std::vector<Point> fixed;
  for (Point x = 0; x < h.degree(); ++x) {
    bool all = std::ranges::all_of(h.generators(), [x](const Permutation& p) { return p[x] == x; });
    if (all) fixed.push_back(x);
  }
  return fixed;
}

PermGroup normalizer(const SubgroupRel& rel) {
  const PermGroup& g = rel.ambient();
  const PermGroup& h = rel.sub();
  const ElementTable& t = g.elements();
  h.elements();
  std::vector<Index> members;
  std::vector<Point> scratch;
  for (Index i = 0; i < t.size(); ++i) {
    auto gi = t.row(i);
    bool normalizes = true;
    for (const auto& gen : h.generators()) {
      detail::conjugate_into(gi, gen.images(), scratch);
      if (!h.contains(scratch)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(i);
  }
  return PermGroup::from_members(g, std::move(members));
}

PermGroup normal_closure(const SubgroupRel& rel) {
  const PermGroup& g = rel.ambient();
  const ElementTable& t = g.elements();
  detail::IndexClosure closure(t);
  for (const auto& h : rel.sub().generators()) closure.adjoin(*t.find(h.images()));

  // Close the generator list under conjugation by the generators of G.
  std::vector<Point> scratch;
  for (std::size_t k = 0; k < closure.generators().size(); ++k) {
    const Index n = closure.generators()[k];
    for (const auto& x : g.generators()) {
      detail::conjugate_into(x.images(), t.row(n), scratch);
      closure.adjoin(*t.find(scratch));
    }
  }
  return PermGroup::from_members(g, closure.members());
}

PermGroup core(const SubgroupRel& rel) {
  const PermGroup& h = rel.sub();
  const ElementTable& t = h.elements();
  std::vector<char> alive(t.size(), 1);
  std::vector<Point> scratch;
  // Shrink to the largest subset of H closed under conjugation by G.
  for (bool changed = true; changed;) {
    changed = false;
    for (Index i = 0; i < t.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& x : rel.ambient().generators()) {
        detail::conjugate_into(x.images(), t.row(i), scratch);
        auto j = t.find(scratch);
        if (!j || !alive[*j]) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Index> members;
  for (Index i = 0; i < t.size(); ++i) {
    if (alive[i]) members.push_back(i);
  }
  return PermGroup::from_members(h, std::move(members));
}

bool is_normal(const SubgroupRel& rel) {
  std::vector<Point> scratch;
  for (const auto& x : rel.ambient().generators()) {
    for (const auto& h : rel.sub().generators()) {
      detail::conjugate_into(x.images(), h.images(), scratch);
      if (!rel.sub().contains(scratch)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// CosetAction

namespace {
constexpr Point kUnlabelled = std::numeric_limits<Point>::max();
}

CosetAction::CosetAction(const SubgroupRel& rel)
    : ambient_(rel.ambient()), image_(PermGroup::trivial(1)) {
  const PermGroup& h = rel.sub();
  const ElementTable& gt = ambient_.elements();
  const ElementTable& ht = h.elements();
  const std::uint64_t index = gt.size() / ht.size();
  if (index > ambient_.limits().element_cap) {
    throw CapExceeded("coset action degree " + std::to_string(index) + " exceeds element cap");
  }

  label_.assign(gt.size(), kUnlabelled);
  std::vector<Point> scratch;
  for (Index g : ambient_.lex_order()) {
    if (label_[g] != kUnlabelled) continue;
    const auto label = static_cast<Point>(representatives_.size());
    representatives_.push_back(g);
    for (Index k = 0; k < ht.size(); ++k) {
      detail::compose_into(gt.row(g), ht.row(k), scratch);
      label_[*gt.find(scratch)] = label;
    }
  }

  std::vector<Permutation> gens;
  for (const auto& x : ambient_.generators()) gens.push_back(act(x));
  image_ = PermGroup(representatives_.size(), std::move(gens), ambient_.limits());
}

std::vector<Permutation> CosetAction::representatives() const {
  std::vector<Permutation> reps;
  reps.reserve(representatives_.size());
  for (Index r : representatives_) reps.push_back(ambient_.elements().permutation(r));
  return reps;
}

Point CosetAction::coset_of(const Permutation& g) const {
  auto i = ambient_.elements().find(g.images());
  if (!i || g.degree() != ambient_.degree()) {
    throw DomainError(format_cycles(g) + " is not an element of the acting group");
  }
  return label_[*i];
}

Permutation CosetAction::act(const Permutation& g) const {
  const ElementTable& gt = ambient_.elements();
  if (g.degree() != ambient_.degree() || !gt.find(g.images())) {
    throw DomainError(format_cycles(g) + " is not an element of the acting group");
  }
  std::vector<Point> images(representatives_.size());
  std::vector<Point> scratch;
  for (std::size_t l = 0; l < representatives_.size(); ++l) {
    detail::compose_into(g.images(), gt.row(representatives_[l]), scratch);
    images[l] = label_[*gt.find(scratch)];
  }
  return Permutation::from_images(std::move(images));
}

PermGroup CosetAction::image_of(const PermGroup& k) const {
  std::vector<Permutation> gens;
  for (const auto& x : k.generators()) gens.push_back(act(x));
  return PermGroup(representatives_.size(), std::move(gens), ambient_.limits());
}

// ---------------------------------------------------------------------------
// Products

Permutation embed_left(const Permutation& p, std::size_t extra) {
  std::vector<Point> images(p.degree() + extra);
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = i < p.degree() ? p[static_cast<Point>(i)] : static_cast<Point>(i);
  }
  return Permutation::from_images(std::move(images));
}

Permutation embed_right(std::size_t shift, const Permutation& q) {
  std::vector<Point> images(shift + q.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = i < shift ? static_cast<Point>(i)
                          : static_cast<Point>(shift + q[static_cast<Point>(i - shift)]);
  }
  return Permutation::from_images(std::move(images));
}

PermGroup direct_product(const PermGroup& g1, const PermGroup& g2) {
  const std::uint64_t order = g1.order() * g2.order();
  if (order > g1.limits().element_cap) {
    throw CapExceeded("direct product order " + std::to_string(order) + " exceeds element cap");
  }
  std::vector<Permutation> gens;
  for (const auto& x : g1.generators()) gens.push_back(embed_left(x, g2.degree()));
  for (const auto& y : g2.generators()) gens.push_back(embed_right(g1.degree(), y));
  return PermGroup(g1.degree() + g2.degree(), std::move(gens), g1.limits());
}

// ---------------------------------------------------------------------------
// Conjugacy classes and the normal-subgroup lattice

std::vector<std::vector<Index>> conjugacy_classes(const PermGroup& g) {
  const ElementTable& t = g.elements();
  std::vector<char> seen(t.size(), 0);
  std::vector<std::vector<Index>> classes;
  std::vector<Point> scratch;
  for (Index start = 0; start < t.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Index> cls{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& x : g.generators()) {
        detail::conjugate_into(x.images(), t.row(cls[i]), scratch);
        Index j = *t.find(scratch);
        if (!seen[j]) {
          seen[j] = 1;
          cls.push_back(j);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

struct LatticeNode {
  std::vector<Index> members;
  std::vector<Index> gens;
};

std::vector<bool> mask_of(const std::vector<Index>& members, std::size_t size) {
  std::vector<bool> mask(size, false);
  for (Index m : members) mask[m] = true;
  return mask;
}

}  // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  const ElementTable& t = g.elements();
  if (t.size() > g.limits().lattice_cap) {
    throw CapExceeded("group order " + std::to_string(t.size()) + " exceeds lattice cap of " +
                      std::to_string(g.limits().lattice_cap));
  }

  std::vector<LatticeNode> nodes;
  std::map<std::vector<bool>, std::size_t> seen;
  auto record = [&](detail::IndexClosure&& c) {
    auto mask = mask_of(c.members(), t.size());
    if (seen.contains(mask)) return false;
    seen.emplace(std::move(mask), nodes.size());
    nodes.push_back({c.members(), c.generators()});
    return true;
  };

  // A conjugacy class generates a normal subgroup.
  for (const auto& cls : conjugacy_classes(g)) {
    detail::IndexClosure c(t);
    for (Index x : cls) c.adjoin(x);
    record(std::move(c));
  }
  const std::size_t base_count = nodes.size();

  // Every normal subgroup is a union of classes, hence the join of the
  // subgroups generated by those classes.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto mask = mask_of(nodes[i].members, t.size());
    const auto gens = nodes[i].gens;
    for (std::size_t b = 0; b < base_count; ++b) {
      const auto base_gens = nodes[b].gens;
      if (std::ranges::all_of(base_gens, [&](Index x) { return mask[x]; })) continue;
      detail::IndexClosure c(t);
      for (Index x : gens) c.adjoin(x);
      for (Index x : base_gens) c.adjoin(x);
      record(std::move(c));
    }
  }

  std::vector<PermGroup> result;
  result.reserve(nodes.size());
  for (auto& n : nodes) result.push_back(PermGroup::from_members(g, std::move(n.members)));
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

std::uint64_t intersection_order(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  const ElementTable& t = small.elements();
  std::uint64_t count = 0;
  for (Index i = 0; i < t.size(); ++i) {
    if (large.contains(t.row(i))) ++count;
  }
  return count;
}

}  // namespace galcluster
