#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "galcluster/cluster.hpp"

namespace galcluster {

/// Parameters of the witness families. Constraints are enforced by
/// validate() and by every builder.
namespace family {

/// G = (Z/r)^s x| Z/s (shift action), H = {((a_1..a_{s-1}, 0), 0)}.
/// r >= 2, s >= 2.
struct Semidirect {
  unsigned r = 2;
  unsigned s = 2;
};
/// G = S_n, H = pointwise stabilizer of {1..k}. n > 2, 1 <= k <= n-2.
struct SnTuple {
  unsigned n = 3;
  unsigned k = 1;
};
/// G = S_n, H = A_k x A_{n-k} on {1..k} and {k+1..n}. n > 2, 1 <= k <= n-1.
struct AltProduct {
  unsigned n = 3;
  unsigned k = 1;
};
/// G = D_4 on the square's vertices, H = stabilizer of a vertex.
struct Dihedral4 {};
/// G = PSL_2(F_p) on the projective line, H = unipotent subgroup. p >= 5 prime.
struct Psl2Max {
  unsigned p = 5;
};
/// G = PSL_2(F_p), H = image of {[[c^l, b], [0, c^-l]]} with c of order
/// (p-1)/r. p >= 5 prime, r >= 3, 2r | p-1.
struct Psl2BorelImage {
  unsigned p = 7;
  unsigned r = 3;
};
/// G = B_2(F_p) on the nonzero vectors of F_p^2, H = <diag(c, c^-1)> with c
/// of order (p-1)/r. p odd prime, r | p-1, p-1 > 2r.
struct Borel {
  unsigned p = 7;
  unsigned r = 1;
};
/// G = Z/n acting regularly, H = 1. n >= 2.
struct CyclicGalois {
  unsigned n = 2;
};
/// G = A_n x A_n on 2n points, H = A_{n-1} x A_{n-1}. n >= 5.
struct AnSquare {
  unsigned n = 5;
};

}  // namespace family

using FamilySpec = std::variant<family::Semidirect, family::SnTuple, family::AltProduct,
                                family::Dihedral4, family::Psl2Max, family::Psl2BorelImage,
                                family::Borel, family::CyclicGalois, family::AnSquare>;

/// Throws DomainError on a parameter violation.
void validate(const FamilySpec& spec);

/// Builds the model for any family. Throws DomainError or CapExceeded.
ExtensionModel build(const FamilySpec& spec, Limits limits = {});

ExtensionModel build_semidirect(unsigned r, unsigned s, Limits limits = {});
ExtensionModel build_sn_tuple(unsigned n, unsigned k, Limits limits = {});
ExtensionModel build_alt_product(unsigned n, unsigned k, Limits limits = {});
ExtensionModel build_dihedral4(Limits limits = {});
ExtensionModel build_psl2_max(unsigned p, Limits limits = {});
ExtensionModel build_psl2_borel_image(unsigned p, unsigned r, Limits limits = {});
ExtensionModel build_borel(unsigned p, unsigned r, Limits limits = {});
ExtensionModel build_cyclic_galois(unsigned n, Limits limits = {});
ExtensionModel build_an_square(unsigned n, Limits limits = {});

/// Family syntax: a name followed by key=value parameters, e.g.
/// "semidirect r=2 s=3" or "family=borel p=7 r=2". Names: semidirect,
/// sn_tuple, alt_product, dihedral4, psl2_max, psl2_borel_image, borel,
/// cyclic_galois, an_square. Throws ParseError on unknown names, missing or
/// unknown keys and non-numeric values.
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family without the "family=" prefix.
std::string format_family(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);

bool is_prime(std::uint64_t n);
/// Least generator of (Z/p)^*. p must be prime.
unsigned smallest_primitive_root(unsigned p);

}  // namespace galcluster
