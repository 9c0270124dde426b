// galcluster: cluster invariants, chains and primitivity of extension models.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse or input error,
// 3 resource cap exceeded.

#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galcluster/errors.hpp"
#include "galcluster/io.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace gc = galcluster;
namespace gt = galcluster::tools;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Options {
  bool json = false;
  std::size_t element_cap = gc::Limits{}.element_cap;
  std::size_t lattice_cap = gc::Limits{}.lattice_cap;

  gc::Limits limits() const { return {element_cap, lattice_cap}; }
};

// One model input: an existing file path, or a family description such as
// "borel p=7 r=2" (optionally prefixed "family=").
gc::ExtensionModel load(const std::string& input, const Options& opt) {
  if (!input.starts_with("family=") && std::filesystem::is_regular_file(input)) {
    return gc::read_model_file(input, opt.limits());
  }
  return gc::build(gc::parse_family(input), opt.limits());
}

std::string join(const std::vector<std::string>& tokens) {
  return std::accumulate(tokens.begin(), tokens.end(), std::string(),
                         [](std::string acc, const std::string& t) { return acc.empty() ? t : acc + " " + t; });
}

void emit(const Options& opt, const gt::Json& json, const std::string& text) {
  if (opt.json) {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_report(const std::string& input, const Options& opt) {
  const auto m = load(input, opt);
  const auto r = gt::make_report(m);
  gt::Json json{{"command", "report"}, {"input", input}};
  json.update(gt::to_json(r));
  emit(opt, json, "input                    " + input + "\n" + gt::to_text(r));
  return kOk;
}

int cmd_chains(const std::string& input, const Options& opt) {
  const auto m = load(input, opt);
  const auto c = gt::make_chain_report(m);
  gt::Json json{{"command", "chains"}, {"input", input}};
  json.update(gt::to_json(c));
  emit(opt, json, gt::to_text(c));
  return kOk;
}

int cmd_decompose(const std::string& input, const Options& opt) {
  const auto m = load(input, opt);
  const auto pairs = gc::enumerate_decompositions(m.group());
  const std::uint64_t order = m.group().order();

  // enumerate_decompositions lists ordered pairs; keep each nontrivial
  // unordered pair once, in the order it first appears.
  gt::Json list = gt::Json::array();
  std::string text;
  std::vector<const gc::Decomposition*> kept;
  for (const auto& d : pairs) {
    if (d.a.order() == 1 || d.b.order() == 1) continue;
    bool duplicate = false;
    for (const auto* k : kept) duplicate = duplicate || (k->a == d.b && k->b == d.a);
    if (duplicate) continue;
    kept.push_back(&d);
    list.push_back(gt::Json{{"order_a", d.a.order()},
                            {"order_b", d.b.order()},
                            {"generators_a", gt::generator_strings(d.a)},
                            {"generators_b", gt::generator_strings(d.b)}});
    text += "  |A| = " + std::to_string(d.a.order()) + ", |B| = " + std::to_string(d.b.order()) + "\n";
  }
  const gt::Json json{{"command", "decompose"},
                      {"input", input},
                      {"group_order", order},
                      {"ordered_pairs", pairs.size()},
                      {"nontrivial", list}};
  emit(opt, json,
       "|G| = " + std::to_string(order) + ", nontrivial decompositions G = A x B: " +
           std::to_string(kept.size()) + "\n" + text);
  return kOk;
}

int cmd_product(const std::string& left, const std::string& right, const Options& opt) {
  const auto l = load(left, opt);
  const auto j = load(right, opt);
  const auto m = gc::product_model(l, j);
  const auto r = gt::make_report(m);
  const auto inv_l = gc::invariants(l);
  const auto inv_j = gc::invariants(j);
  const bool multiplicative = r.invariants == inv_l * inv_j;
  const bool chain_structure = gc::product_chain_structure_check(l, j);
  gt::Json json{{"command", "product"},
                {"left", left},
                {"right", right},
                {"left_invariants", gt::to_json(inv_l)},
                {"right_invariants", gt::to_json(inv_j)},
                {"multiplicative", multiplicative},
                {"chain_structure", chain_structure}};
  json.update(gt::to_json(r));
  emit(opt, json,
       "left                     " + gt::to_text(inv_l) + "\nright                    " + gt::to_text(inv_j) +
           "\nmultiplicative           " + (multiplicative ? "yes" : "no") + "\nchain structure          " +
           (chain_structure ? "yes" : "no") + "\n" + gt::to_text(r));
  return kOk;
}

int cmd_weak(const std::string& upper, const std::string& lower, const Options& opt) {
  const auto m = gc::invariants(load(upper, opt));
  const auto l = gc::invariants(load(lower, opt));
  const auto tuple = gc::magnification_tuple(m, l);
  const auto factor = gc::weak_cluster_factor(m, l);
  const gt::Json json{{"command", "weak"},
                      {"m", upper},
                      {"l", lower},
                      {"m_invariants", gt::to_json(m)},
                      {"l_invariants", gt::to_json(l)},
                      {"weak_cluster_factor", factor ? gt::Json(*factor) : gt::Json(nullptr)},
                      {"magnification_tuple", tuple ? gt::to_json(*tuple) : gt::Json(nullptr)}};
  std::string text = "M                        " + gt::to_text(m) + "\nL                        " + gt::to_text(l) +
                     "\nweak cluster factor      " + (factor ? std::to_string(*factor) : "absent") +
                     "\nmagnification tuple      ";
  text += tuple ? "(r, s, t, u) = (" + std::to_string(tuple->r) + ", " + std::to_string(tuple->s) + ", " +
                      std::to_string(tuple->t) + ", " + std::to_string(tuple->u) + ")\n"
                : "absent\n";
  emit(opt, json, text);
  return kOk;
}

int cmd_export(const std::string& input, const Options& opt) {
  std::cout << gc::format_model(load(input, opt));
  return kOk;
}

int cmd_verify(const std::string& grid_name, const Options& opt) {
  const auto grid = gt::parse_grid(grid_name);
  if (!grid) throw gc::ParseError("unknown grid \"" + grid_name + "\" (quick, default, full)");
  const auto rows = gt::run_verification(*grid, opt.limits());
  std::size_t passed = 0;
  for (const auto& row : rows) passed += row.pass() ? 1 : 0;

  gt::Json list = gt::Json::array();
  std::string text;
  for (const auto& row : rows) {
    list.push_back(gt::to_json(row));
    text += gt::to_text(row) + "\n";
  }
  text += std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows pass\n";
  const gt::Json json{{"command", "verify-paper"},
                      {"grid", grid_name},
                      {"rows", list},
                      {"passed", passed},
                      {"total", rows.size()},
                      {"pass", passed == rows.size()}};
  emit(opt, json, text);
  return passed == rows.size() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster invariants, chains and primitivity of extension models (G, H)."};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit one JSON object instead of text");
  app.add_option("--element-cap", opt.element_cap, "Largest group enumerated element by element")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", opt.lattice_cap, "Largest group searched for normal subgroups")
      ->check(CLI::PositiveNumber);

  const char* input_help = "Model file, or a family such as: semidirect r=2 s=3";
  std::vector<std::string> tokens;
  auto* report = app.add_subcommand("report", "Invariants, primitivity, witnesses and chains of a model");
  report->add_option("input", tokens, input_help)->required();
  auto* chains = app.add_subcommand("chains", "Descending and ascending chains of a model");
  chains->add_option("input", tokens, input_help)->required();
  auto* decompose = app.add_subcommand("decompose", "Direct-product decompositions of the model's group");
  decompose->add_option("input", tokens, input_help)->required();
  auto* exporter = app.add_subcommand("export", "Print the model file of a model or family");
  exporter->add_option("input", tokens, input_help)->required();

  std::string first;
  std::string second;
  auto* product = app.add_subcommand("product", "Report on the product model of two models");
  product->add_option("left", first, "First model (file or quoted family)")->required();
  product->add_option("right", second, "Second model (file or quoted family)")->required();
  auto* weak = app.add_subcommand("weak", "Weak magnification tuple of M over a submodel L");
  weak->add_option("m", first, "The larger model M (file or quoted family)")->required();
  weak->add_option("l", second, "The submodel L (file or quoted family)")->required();

  std::string grid = "default";
  auto* verify = app.add_subcommand("verify-paper", "Run the verification grid; exit 1 if any row fails");
  verify->add_option("--grid", grid, "quick, default or full")->check(CLI::IsMember({"quick", "default", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*report) return cmd_report(join(tokens), opt);
    if (*chains) return cmd_chains(join(tokens), opt);
    if (*decompose) return cmd_decompose(join(tokens), opt);
    if (*exporter) return cmd_export(join(tokens), opt);
    if (*product) return cmd_product(first, second, opt);
    if (*weak) return cmd_weak(first, second, opt);
    if (*verify) return cmd_verify(grid, opt);
  } catch (const gc::CapExceeded& e) {
    std::cerr << "galcluster: resource cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const gc::ParseError& e) {
    std::cerr << "galcluster: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const gc::DomainError& e) {
    std::cerr << "galcluster: invalid input: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
