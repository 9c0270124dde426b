#include "brute_force.hpp"

#include <algorithm>
#include <map>

namespace oracle {

Perm multiply(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::set<Perm> close(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> result{id};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> snapshot(result.begin(), result.end());
    for (const auto& x : snapshot) {
      for (const auto& g : gens) grew |= result.insert(multiply(x, g)).second;
    }
  }
  return result;
}

std::vector<Perm> generators_of(const galcluster::PermGroup& g) {
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) gens.emplace_back(p.images().begin(), p.images().end());
  return gens;
}

std::set<Perm> elements_of(const galcluster::PermGroup& g) {
  std::set<Perm> out;
  const auto& t = g.elements();
  for (galcluster::ElementTable::Index i = 0; i < t.size(); ++i) {
    out.emplace(t.row(i).begin(), t.row(i).end());
  }
  return out;
}

Group::Group(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
  const auto all = close(degree, gens);
  elems_.assign(all.begin(), all.end());
  const std::size_t n = elems_.size();
  table_.assign(n, std::vector<int>(n));
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table_[a][b] = index_of(multiply(elems_[a], elems_[b]));
    inverse_[a] = index_of(invert(elems_[a]));
  }
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  identity_ = index_of(id);
}

int Group::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  return it != elems_.end() && *it == p ? static_cast<int>(it - elems_.begin()) : -1;
}

Mask Group::mask_of(const std::set<Perm>& members) const {
  Mask m(order(), false);
  for (const auto& p : members) m[index_of(p)] = true;
  return m;
}

std::set<Perm> Group::members(const Mask& m) const {
  std::set<Perm> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.insert(elems_[i]);
  }
  return out;
}

std::size_t Group::count(const Mask& m) const { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

Mask Group::generated(const Mask& seed) const {
  Mask m(order(), false);
  m[identity_] = true;
  std::vector<int> list{identity_};
  std::vector<int> gens;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (seed[i]) gens.push_back(static_cast<int>(i));
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (int g : gens) {
      const int x = mul(list[k], g);
      if (!m[x]) {
        m[x] = true;
        list.push_back(x);
      }
    }
  }
  return m;
}

std::vector<Mask> Group::all_subgroups() const {
  std::set<Mask> seen;
  std::vector<Mask> cyclic;
  for (std::size_t i = 0; i < order(); ++i) {
    Mask seed(order(), false);
    seed[i] = true;
    Mask c = generated(seed);
    if (seen.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Mask> result(seen.begin(), seen.end());
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const auto& c : cyclic) {
      Mask seed = result[k];
      bool inside = true;
      for (std::size_t i = 0; i < seed.size(); ++i) {
        if (c[i] && !seed[i]) inside = false;
        seed[i] = seed[i] || c[i];
      }
      if (inside) continue;
      Mask j = generated(seed);
      if (seen.insert(j).second) result.push_back(j);
    }
  }
  return result;
}

bool Group::is_normal(const Mask& h) const {
  for (std::size_t g = 0; g < order(); ++g) {
    for (std::size_t x = 0; x < order(); ++x) {
      if (h[x] && !h[mul(mul(static_cast<int>(g), static_cast<int>(x)), inv(static_cast<int>(g)))]) return false;
    }
  }
  return true;
}

std::vector<Mask> Group::normal_subgroups() const {
  std::vector<Mask> out;
  for (auto& s : all_subgroups()) {
    if (is_normal(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<Mask, Mask>> Group::decompositions() const {
  const auto subs = all_subgroups();
  std::vector<std::pair<Mask, Mask>> out;
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (count(a) * count(b) != order()) continue;
      std::size_t common = 0;
      for (std::size_t i = 0; i < order(); ++i) common += (a[i] && b[i]) ? 1 : 0;
      if (common != 1) continue;
      if (!is_normal(a) || !is_normal(b)) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

Mask Group::normalizer(const Mask& h) const {
  Mask n(order(), false);
  for (std::size_t g = 0; g < order(); ++g) {
    bool ok = true;
    for (std::size_t x = 0; x < order() && ok; ++x) {
      if (h[x] && !h[mul(mul(static_cast<int>(g), static_cast<int>(x)), inv(static_cast<int>(g)))]) ok = false;
    }
    n[g] = ok;
  }
  return n;
}

Mask Group::normal_closure(const Mask& h) const {
  Mask seed(order(), false);
  for (std::size_t g = 0; g < order(); ++g) {
    for (std::size_t x = 0; x < order(); ++x) {
      if (h[x]) seed[mul(mul(static_cast<int>(g), static_cast<int>(x)), inv(static_cast<int>(g)))] = true;
    }
  }
  return generated(seed);
}

Mask Group::core(const Mask& h) const {
  Mask c = h;
  for (std::size_t g = 0; g < order(); ++g) {
    for (std::size_t x = 0; x < order(); ++x) {
      // x survives only if g^-1 x g lies in H for every g.
      if (c[x] && !h[mul(mul(inv(static_cast<int>(g)), static_cast<int>(x)), static_cast<int>(g))]) c[x] = false;
    }
  }
  return c;
}

Invariants invariants(const Group& g, const Mask& h) {
  const std::uint64_t order = g.order();
  const std::uint64_t hh = g.count(h);
  const std::uint64_t nn = g.count(g.normalizer(h));
  const std::uint64_t cl = g.count(g.normal_closure(h));
  return {order / hh, nn / hh, order / nn, order / cl, cl / hh};
}

}  // namespace oracle
