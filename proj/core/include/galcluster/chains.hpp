#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galcluster/cluster.hpp"

namespace galcluster {

/// H = H_0 < H_1 < ... < H_k with H_{i+1} = N_G(H_i). The fixed fields
/// N_i of the H_i form the unique descending chain L = N_0 > N_1 > ...,
/// each step the largest Galois subextension below the previous field.
/// Stops once H_k = G or H_k is self-normalizing.
struct DescendingChain {
  std::vector<PermGroup> subgroups;
};

/// G = M_0 > M_1 > ... > M_l with M_{j+1} = H^{M_j}, the normal closure of
/// H in the previous term. The fixed fields F_j form the unique ascending
/// chain K = F_0 < F_1 < .... Stops once M_l = H or H^{M_l} = M_l.
struct AscendingChain {
  std::vector<PermGroup> subgroups;
};

/// A subgroup that appears in both chains and is neither H nor G.
struct CoincidenceCertificate {
  PermGroup subgroup;
  std::size_t descending_index = 0;
  std::size_t ascending_index = 0;
};

DescendingChain descending_chain(const ExtensionModel& m);
AscendingChain ascending_chain(const ExtensionModel& m);

/// First coincidence in lexicographic (descending index, ascending index)
/// order, or nothing.
std::optional<CoincidenceCertificate> chains_coincide(const ExtensionModel& m);

/// Chain criterion for primitivity. It is only sufficient: `certified`
/// false means the criterion is silent, not that the model is imprimitive.
struct ChainPrimitivity {
  bool certified = false;
  std::optional<CoincidenceCertificate> certificate;
};

ChainPrimitivity primitivity_certificate_via_chains(const ExtensionModel& m);

/// Checks that both chains of product_model(l, j) are the termwise direct
/// products of the factor chains, the shorter factor chain padded with its
/// last term.
bool product_chain_structure_check(const ExtensionModel& l, const ExtensionModel& j);

}  // namespace galcluster
