#include "galcluster/chains.hpp"

#include <algorithm>

#include "galcluster/group_ops.hpp"

namespace galcluster {

DescendingChain descending_chain(const ExtensionModel& m) {
  const PermGroup& g = m.group();
  DescendingChain chain{{m.subgroup()}};
  for (;;) {
    const PermGroup& last = chain.subgroups.back();
    if (last.order() == g.order()) break;
    PermGroup next = normalizer(SubgroupRel(g, last));
    if (next.order() == last.order()) break;
    chain.subgroups.push_back(std::move(next));
  }
  return chain;
}

AscendingChain ascending_chain(const ExtensionModel& m) {
  const PermGroup& h = m.subgroup();
  AscendingChain chain{{m.group()}};
  for (;;) {
    const PermGroup& last = chain.subgroups.back();
    if (last.order() == h.order()) break;
    PermGroup next = normal_closure(SubgroupRel(last, h));
    if (next.order() == last.order()) break;
    chain.subgroups.push_back(std::move(next));
  }
  return chain;
}

std::optional<CoincidenceCertificate> chains_coincide(const ExtensionModel& m) {
  const auto down = descending_chain(m);
  const auto up = ascending_chain(m);
  const auto g_order = m.group().order();
  const auto h_order = m.subgroup().order();
  for (std::size_t i = 0; i < down.subgroups.size(); ++i) {
    const PermGroup& d = down.subgroups[i];
    if (d.order() == g_order || d.order() == h_order) continue;
    for (std::size_t j = 0; j < up.subgroups.size(); ++j) {
      if (up.subgroups[j] == d) return CoincidenceCertificate{d, i, j};
    }
  }
  return std::nullopt;
}

ChainPrimitivity primitivity_certificate_via_chains(const ExtensionModel& m) {
  auto cert = chains_coincide(m);
  return {cert.has_value(), std::move(cert)};
}

namespace {

template <typename Chain>
bool factors_termwise(const Chain& product, const Chain& left, const Chain& right) {
  const std::size_t len = std::max(left.subgroups.size(), right.subgroups.size());
  if (product.subgroups.size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    const PermGroup& a = left.subgroups[std::min(i, left.subgroups.size() - 1)];
    const PermGroup& b = right.subgroups[std::min(i, right.subgroups.size() - 1)];
    if (!(product.subgroups[i] == direct_product(a, b))) return false;
  }
  return true;
}

}  // namespace

bool product_chain_structure_check(const ExtensionModel& l, const ExtensionModel& j) {
  const ExtensionModel m = product_model(l, j);
  return factors_termwise(descending_chain(m), descending_chain(l), descending_chain(j)) &&
         factors_termwise(ascending_chain(m), ascending_chain(l), ascending_chain(j));
}

}  // namespace galcluster
