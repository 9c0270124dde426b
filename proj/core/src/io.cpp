#include "galcluster/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "galcluster/errors.hpp"

namespace galcluster {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kDegree = "degree";
constexpr const char* kGenerators = "generators";
constexpr const char* kSubgroupGenerators = "subgroup_generators";

Json parse_object(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != kDegree && key != kGenerators && key != kSubgroupGenerators) {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  return doc;
}

std::size_t read_degree(const Json& doc) {
  const auto it = doc.find(kDegree);
  if (it == doc.end()) throw ParseError("missing key \"degree\"");
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
    throw ParseError("\"degree\" must be a positive integer");
  }
  return it->get<std::size_t>();
}

std::vector<Permutation> read_cycles(const Json& doc, const char* key, std::size_t degree,
                                     bool required) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw ParseError("missing key \"" + std::string(key) + "\"");
    return {};
  }
  if (!it->is_array()) throw ParseError("\"" + std::string(key) + "\" must be a list of strings");
  std::vector<Permutation> perms;
  for (const auto& entry : *it) {
    if (!entry.is_string()) throw ParseError("\"" + std::string(key) + "\" must be a list of strings");
    perms.push_back(parse_permutation(entry.get<std::string>(), degree));
  }
  return perms;
}

Json cycles_json(const PermGroup& g) {
  Json list = Json::array();
  for (const auto& p : g.generators()) list.push_back(format_cycles(p));
  return list;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

PermGroup parse_group(std::string_view text, Limits limits) {
  const Json doc = parse_object(text);
  if (doc.contains(kSubgroupGenerators)) throw ParseError("a group file has no \"subgroup_generators\"");
  const std::size_t degree = read_degree(doc);
  return PermGroup(degree, read_cycles(doc, kGenerators, degree, true), limits);
}

ExtensionModel parse_model(std::string_view text, Limits limits) {
  const Json doc = parse_object(text);
  const std::size_t degree = read_degree(doc);
  PermGroup g(degree, read_cycles(doc, kGenerators, degree, true), limits);
  PermGroup h(degree, read_cycles(doc, kSubgroupGenerators, degree, false), limits);
  return ExtensionModel(std::move(g), std::move(h));
}

std::string format_group(const PermGroup& g) {
  Json doc;
  doc[kDegree] = g.degree();
  doc[kGenerators] = cycles_json(g);
  return dump(doc);
}

std::string format_model(const ExtensionModel& m) {
  Json doc;
  doc[kDegree] = m.group().degree();
  doc[kGenerators] = cycles_json(m.group());
  doc[kSubgroupGenerators] = cycles_json(m.subgroup());
  return dump(doc);
}

ExtensionModel read_model_file(const std::filesystem::path& path, Limits limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), limits);
}

}  // namespace galcluster
