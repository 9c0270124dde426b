#pragma once

#include <string>
#include <vector>

#include "galcluster/constructions.hpp"
#include "helpers.hpp"

namespace test {

struct NamedGroup {
  std::string name;
  galcluster::PermGroup group;
};

/// Every group of order <= 200 that the families produce at small
/// parameters, plus a few classic small groups.
inline std::vector<NamedGroup> small_groups() {
  using namespace galcluster;
  std::vector<NamedGroup> out = {
      {"Z4", cyclic(4)},
      {"Z6", cyclic(6)},
      {"Z12", cyclic(12)},
      {"Klein", group(4, {"(1 2)(3 4)", "(1 3)(2 4)"})},
      {"S3", symmetric(3)},
      {"A4", group(4, {"(1 2 3)", "(2 3 4)"})},
      {"Q8", group(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"})},
      {"Z2xZ2xZ2", group(6, {"(1 2)", "(3 4)", "(5 6)"})},
      {"S3xZ2", group(5, {"(1 2)", "(1 2 3)", "(4 5)"})},
      {"Z2xZ6", group(8, {"(1 2)", "(3 4 5 6 7 8)"})},
  };
  for (const char* family :
       {"semidirect r=2 s=2", "semidirect r=3 s=2", "semidirect r=2 s=3", "semidirect r=4 s=2",
        "semidirect r=3 s=3", "semidirect r=4 s=3", "sn_tuple n=4 k=1", "sn_tuple n=5 k=1", "dihedral4",
        "psl2_max p=5", "psl2_max p=7", "borel p=7 r=2", "borel p=11 r=2", "borel p=13 r=3",
        "cyclic_galois n=15", "cyclic_galois n=25"}) {
    std::string name = family;
    for (auto& c : name) {
      if (c == ' ' || c == '=') c = '_';
    }
    out.push_back({name, build(parse_family(family)).group()});
  }
  return out;
}

}  // namespace test
