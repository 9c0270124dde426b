#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galcluster/constructions.hpp"
#include "report.hpp"

namespace galcluster::tools {

/// quick: one or two rows per criterion. default: the acceptance grid.
/// full: default plus larger primes and extra cyclic cases.
enum class Grid { kQuick, kDefault, kFull };

std::optional<Grid> parse_grid(std::string_view name);

/// Where an expected value comes from: "published" (stated in the source
/// results), "brute-force" (computed once by an independent exhaustive
/// method and frozen) or "definition" (immediate from the definitions).
struct Check {
  std::string field;
  std::string expected;
  std::string computed;
  std::string provenance;

  bool pass() const { return expected == computed; }
};

struct VerificationRow {
  int criterion = 0;
  std::string case_id;
  std::string subject;
  std::vector<Check> checks;
  std::string error;  // non-empty if the row threw

  bool pass() const;
};

/// The models whose pairwise products feed the multiplicativity and chain
/// structure criteria.
std::vector<FamilySpec> product_corpus();

/// Ordered index pairs into product_corpus() with |G_L||G_J| <= max_order,
/// drawn without repetition from a fixed-seed generator.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t count, unsigned seed,
                                                               std::uint64_t max_order,
                                                               const Limits& limits);

/// Runs every row of the grid, in parallel, and returns them in a fixed
/// order (criterion, then case).
std::vector<VerificationRow> run_verification(Grid grid, Limits limits = {});

Json to_json(const VerificationRow& row);
std::string to_text(const VerificationRow& row);

}  // namespace galcluster::tools
