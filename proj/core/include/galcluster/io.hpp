#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "galcluster/cluster.hpp"

namespace galcluster {

/// Group files are JSON objects
///
///   {
///     "degree": 4,
///     "generators": ["(1 2 3 4)", "(1 3)"]
///   }
///
/// with points numbered from 1. A model file adds "subgroup_generators", a
/// list of cycle strings that must lie in the group. A group file read as a
/// model gives the Galois model (trivial subgroup). Unknown keys are
/// rejected.
///
/// The formatters emit two-space indentation, keys in the order above,
/// canonical cycle strings and a trailing newline, so a canonical file
/// survives parse + format byte for byte.

/// Throws ParseError on malformed input, DomainError on a degree mismatch.
PermGroup parse_group(std::string_view text, Limits limits = {});
/// As parse_group; also throws DomainError if H is not contained in G.
ExtensionModel parse_model(std::string_view text, Limits limits = {});

std::string format_group(const PermGroup& g);
std::string format_model(const ExtensionModel& m);

/// Reads a file and parses it as a model. Throws ParseError if the file
/// cannot be read.
ExtensionModel read_model_file(const std::filesystem::path& path, Limits limits = {});

}  // namespace galcluster
