#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galcluster/chains.hpp"
#include "galcluster/magnification.hpp"

namespace galcluster::tools {

using Json = nlohmann::ordered_json;

struct ChainTerm {
  std::uint64_t order = 1;
  std::uint64_t index_in_group = 1;
  std::vector<std::string> generators;
};

struct ChainReport {
  std::vector<ChainTerm> descending;
  std::vector<ChainTerm> ascending;
  std::optional<CoincidenceCertificate> coincidence;
};

struct ModelReport {
  std::uint64_t group_order = 1;
  std::uint64_t subgroup_order = 1;
  std::size_t degree = 1;
  ClusterInvariants invariants;
  std::uint64_t oracle_r = 1;
  bool primitive = true;
  bool general_primitive = true;
  QuickVerdict quick_primitive = QuickVerdict::kSilent;
  QuickVerdict quick_general_primitive = QuickVerdict::kSilent;
  std::optional<DecompositionWitness> scm;
  std::optional<DecompositionWitness> sgm;
  ChainReport chains;
};

ChainReport make_chain_report(const ExtensionModel& m);
ModelReport make_report(const ExtensionModel& m);

std::string verdict_name(QuickVerdict v);
std::vector<std::string> generator_strings(const PermGroup& g);

Json to_json(const ClusterInvariants& inv);
Json to_json(const MagnificationTuple& t);
Json to_json(const DecompositionWitness& w);
Json to_json(const ChainReport& c);
Json to_json(const ModelReport& r);

std::string to_text(const ChainReport& c);
std::string to_text(const ModelReport& r);
std::string to_text(const ClusterInvariants& inv);

}  // namespace galcluster::tools
