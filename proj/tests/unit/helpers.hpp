#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "galcluster/perm_group.hpp"

namespace test {

inline galcluster::Permutation perm(const std::string& cycles, std::size_t degree) {
  return galcluster::parse_permutation(cycles, degree);
}

inline galcluster::PermGroup group(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<galcluster::Permutation> ps;
  for (const char* g : gens) ps.push_back(perm(g, degree));
  return galcluster::group_from_generators(degree, std::move(ps));
}

inline galcluster::PermGroup symmetric(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
  return group(n, {"(1 2)", cycle.c_str()});
}

inline galcluster::PermGroup cyclic(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
  return group(n, {cycle.c_str()});
}

template <class Groups>
std::vector<std::uint64_t> orders(const Groups& gs) {
  std::vector<std::uint64_t> out;
  for (const auto& g : gs) out.push_back(g.order());
  return out;
}

}  // namespace test
