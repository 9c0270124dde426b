#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galcluster/chains.hpp"
#include "galcluster/cluster.hpp"

namespace galcluster {

/// An internal direct decomposition G = A x B.
struct Decomposition {
  PermGroup a;
  PermGroup b;
};

/// A decomposition certifying that a model is a nontrivial magnification.
///
/// Strong cluster magnification (kScm): H <= A, [A:H] > 2, |B| > 1. The
/// model is then L'F with L' = fixed field of H x B (degree [A:H] > 2) and F
/// the Galois field fixed by A (group B).
///
/// Strong general magnification (kSgm): H = (H n A)(H n B) with
/// [A : H n A] > 1 and [B : H n B] > 1.
struct DecompositionWitness {
  enum class Kind { kScm, kSgm };

  PermGroup a;
  PermGroup b;
  Kind kind = Kind::kSgm;
  /// kSgm: ([A : H n A], [B : H n B]); kScm: ([A:H], |B|).
  std::pair<std::uint64_t, std::uint64_t> indices{1, 1};
};

/// All ordered pairs (A, B) of normal subgroups with A n B = 1 and
/// |A||B| = |G|, trivial factors included. Ordered by A, then B, in
/// normal_subgroups order. Throws CapExceeded past the lattice cap.
std::vector<Decomposition> enumerate_decompositions(const PermGroup& g);

std::optional<DecompositionWitness> scm_witness(const ExtensionModel& m);
std::optional<DecompositionWitness> sgm_witness(const ExtensionModel& m);

/// Not obtained by a nontrivial strong cluster magnification.
bool is_primitive(const ExtensionModel& m);
/// Not obtained by a nontrivial strong general magnification. Implies
/// is_primitive.
bool is_general_primitive(const ExtensionModel& m);

/// Recomputes the defining conditions of a witness against the model.
bool verify_witness(const ExtensionModel& m, const DecompositionWitness& w);

enum class QuickVerdict {
  kSilent,
  /// No proper normal subgroup of G contains H.
  kNoProperNormalContainsH,
  /// G has fewer than two proper nontrivial normal subgroups.
  kFewNormalSubgroups,
  /// Any two nontrivial normal subgroups meet nontrivially, so G has no
  /// nontrivial direct decomposition.
  kNormalsIntersect,
};

/// Sufficient test for primitivity; kSilent decides nothing.
QuickVerdict quick_primitive_check(const ExtensionModel& m);
/// Sufficient test for general primitivity; kSilent decides nothing.
QuickVerdict quick_general_primitive_check(const ExtensionModel& m);

/// Which conclusions hold for the product model of `l` and `j` when its
/// chains coincide at an interior subgroup. At least one must be true.
struct CoincidenceClauses {
  bool l_primitive = false;
  bool j_nontrivial_and_primitive = false;
  /// J nontrivial, r(J) = 1, t(L) = 1, J's ascending chain ends at J and
  /// L's descending chain ends at K.
  bool j_rigid_l_descends = false;
  /// The mirror image with L and J exchanged.
  bool l_rigid_j_descends = false;

  bool any() const noexcept {
    return l_primitive || j_nontrivial_and_primitive || j_rigid_l_descends || l_rigid_j_descends;
  }
};

CoincidenceClauses coincidence_clauses(const ExtensionModel& l, const ExtensionModel& j);

}  // namespace galcluster
