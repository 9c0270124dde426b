#include "galcluster/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "galcluster/errors.hpp"
#include "index_closure.hpp"

namespace galcluster {

// ---------------------------------------------------------------------------
// ElementTable

ElementTable::ElementTable(std::size_t degree)
    : degree_(degree), index_(16, Hash{this}, Equal{this}) {
  if (degree == 0) throw DomainError("element table degree must be positive");
}

Permutation ElementTable::permutation(Index i) const {
  auto r = row(i);
  return Permutation::from_images(std::vector<Point>(r.begin(), r.end()));
}

std::optional<ElementTable::Index> ElementTable::find(std::span<const Point> images) const {
  auto it = index_.find(images);
  if (it == index_.end()) return std::nullopt;
  return *it;
}

std::pair<ElementTable::Index, bool> ElementTable::insert(std::span<const Point> images) {
  if (auto it = index_.find(images); it != index_.end()) return {*it, false};
  const auto id = static_cast<Index>(size());
  data_.insert(data_.end(), images.begin(), images.end());
  index_.insert(id);
  return {id, true};
}

void ElementTable::reserve(std::size_t rows) {
  data_.reserve(rows * degree_);
  index_.reserve(rows);
}

std::size_t ElementTable::Hash::operator()(Index i) const noexcept {
  return hash_images(table->row(i));
}
std::size_t ElementTable::Hash::operator()(std::span<const Point> s) const noexcept {
  return hash_images(s);
}
bool ElementTable::Equal::operator()(Index a, Index b) const noexcept { return a == b; }
bool ElementTable::Equal::operator()(std::span<const Point> a, Index b) const noexcept {
  return std::ranges::equal(a, table->row(b));
}
bool ElementTable::Equal::operator()(Index a, std::span<const Point> b) const noexcept {
  return std::ranges::equal(table->row(a), b);
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  Limits limits;

  mutable std::once_flag enumerated;
  mutable std::unique_ptr<ElementTable> table;

  mutable std::once_flag sorted;
  mutable std::vector<Index> lex;

  void enumerate() const {
    if (table) return;  // prefilled by from_members
    auto t = std::make_unique<ElementTable>(degree);
    t->insert(Permutation(degree).images());
    std::vector<Point> scratch;
    for (std::size_t i = 0; i < t->size(); ++i) {
      for (const auto& g : gens) {
        detail::compose_into(t->row(static_cast<Index>(i)), g.images(), scratch);
        if (t->insert(scratch).second && t->size() > limits.element_cap) {
          throw CapExceeded("group order exceeds element cap of " +
                            std::to_string(limits.element_cap));
        }
      }
    }
    table = std::move(t);
  }
};

namespace {

bool row_less(std::span<const Point> a, std::span<const Point> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits) {
  if (degree == 0) throw DomainError("group degree must be positive");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->limits = limits;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw DomainError("generator " + format_cycles(g) + " has degree " +
                        std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(impl->gens.begin(), impl->gens.end(), g) == impl->gens.end()) {
      impl->gens.push_back(std::move(g));
    }
  }
  impl_ = std::move(impl);
}

PermGroup PermGroup::trivial(std::size_t degree, Limits limits) { return PermGroup(degree, {}, limits); }

PermGroup PermGroup::from_members(const PermGroup& ambient, std::vector<Index> members) {
  const ElementTable& amb = ambient.elements();
  std::sort(members.begin(), members.end(),
            [&](Index a, Index b) { return row_less(amb.row(a), amb.row(b)); });

  detail::IndexClosure closure(amb);
  for (Index m : members) closure.adjoin(m);
  if (closure.size() != members.size()) {
    throw std::logic_error("from_members: member set is not a subgroup");
  }

  auto impl = std::make_shared<Impl>();
  impl->degree = ambient.degree();
  impl->limits = ambient.limits();
  for (Index g : closure.generators()) impl->gens.push_back(amb.permutation(g));
  auto t = std::make_unique<ElementTable>(impl->degree);
  t->reserve(members.size());
  // Members are already sorted, and the identity (the lexicographic minimum)
  // lands at index 0.
  for (Index m : members) t->insert(amb.row(m));
  impl->table = std::move(t);
  return PermGroup(std::shared_ptr<const Impl>(std::move(impl)));
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
std::span<const Permutation> PermGroup::generators() const noexcept { return impl_->gens; }
const Limits& PermGroup::limits() const noexcept { return impl_->limits; }

const ElementTable& PermGroup::elements() const {
  std::call_once(impl_->enumerated, [this] { impl_->enumerate(); });
  return *impl_->table;
}

std::uint64_t PermGroup::order() const { return elements().size(); }

bool PermGroup::contains(std::span<const Point> images) const {
  if (images.size() != degree()) return false;
  return elements().find(images).has_value();
}

bool PermGroup::contains(const Permutation& p) const { return contains(p.images()); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  return std::ranges::all_of(generators(), [&](const Permutation& g) { return other.contains(g); });
}

const std::vector<PermGroup::Index>& PermGroup::lex_order() const {
  std::call_once(impl_->sorted, [this] {
    const ElementTable& t = elements();
    std::vector<Index> idx(t.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Index>(i);
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) { return row_less(t.row(a), t.row(b)); });
    impl_->lex = std::move(idx);
  });
  return impl_->lex;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.impl_ == b.impl_) return true;
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

bool canonical_less(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.order() != b.order()) return a.order() < b.order();
  const auto& la = a.lex_order();
  const auto& lb = b.lex_order();
  const ElementTable& ta = a.elements();
  const ElementTable& tb = b.elements();
  for (std::size_t i = 0; i < la.size(); ++i) {
    auto ra = ta.row(la[i]);
    auto rb = tb.row(lb[i]);
    if (row_less(ra, rb)) return true;
    if (row_less(rb, ra)) return false;
  }
  return false;
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators, Limits limits) {
  PermGroup g(degree, std::move(generators), limits);
  g.order();
  return g;
}

// ---------------------------------------------------------------------------
// SubgroupRel

SubgroupRel::SubgroupRel(PermGroup ambient, PermGroup sub)
    : ambient_(std::move(ambient)), sub_(std::move(sub)) {
  if (ambient_.degree() != sub_.degree()) {
    throw DomainError("subgroup degree " + std::to_string(sub_.degree()) +
                      " differs from ambient degree " + std::to_string(ambient_.degree()));
  }
  for (const auto& h : sub_.generators()) {
    if (!ambient_.contains(h)) {
      throw DomainError("subgroup generator " + format_cycles(h) + " is not in the ambient group");
    }
  }
}

}  // namespace galcluster
