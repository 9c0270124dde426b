#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "galcluster/errors.hpp"
#include "galcluster/group_ops.hpp"

namespace galcluster::tools {

namespace {

using Task = std::function<VerificationRow()>;

constexpr const char* kPublished = "published";
constexpr const char* kBruteForce = "brute-force";
constexpr const char* kDefinition = "definition";

constexpr std::uint64_t kMaxProductOrder = 50'000;
constexpr unsigned kMultiplicativitySeed = 20'240'601;
constexpr unsigned kChainSeed = 20'240'602;

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string tuple_str(const ClusterInvariants& i) {
  std::ostringstream out;
  out << "(" << i.n << "," << i.r << "," << i.s << "," << i.t << "," << i.u << ")";
  return out.str();
}

std::string tuple_str(const std::optional<MagnificationTuple>& t) {
  if (!t) return "absent";
  std::ostringstream out;
  out << "(" << t->r << "," << t->s << "," << t->t << "," << t->u << ")";
  return out.str();
}

void add(VerificationRow& row, std::string field, std::string expected, std::string computed,
         const char* provenance) {
  row.checks.push_back({std::move(field), std::move(expected), std::move(computed), provenance});
}
void add(VerificationRow& row, std::string field, std::uint64_t expected, std::uint64_t computed,
         const char* provenance) {
  add(row, std::move(field), str(expected), str(computed), provenance);
}
void add(VerificationRow& row, std::string field, bool expected, bool computed, const char* provenance) {
  add(row, std::move(field), str(expected), str(computed), provenance);
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }
std::uint64_t falling(std::uint64_t n, std::uint64_t k) { return factorial(n) / factorial(n - k); }

std::string pair_id(std::size_t i) {
  std::string s = std::to_string(i);
  return "pair" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

// A row that builds one family model and runs `body` on it.
template <class Body>
Task family_task(int criterion, std::string id, FamilySpec spec, Limits limits, Body body) {
  return [=]() {
    VerificationRow row{criterion, id, format_family(spec), {}, {}};
    const ExtensionModel m = build(spec, limits);
    body(m, row);
    return row;
  };
}

struct Planner {
  Grid grid;
  Limits limits;
  std::vector<Task> tasks;
  std::vector<FamilySpec> models;  // every family model used, for the oracle rows

  bool quick() const { return grid == Grid::kQuick; }
  bool full() const { return grid == Grid::kFull; }

  template <class Body>
  void family_row(int criterion, const std::string& id, const FamilySpec& spec, Body body) {
    models.push_back(spec);
    tasks.push_back(family_task(criterion, id, spec, limits, body));
  }

  void semidirect() {
    std::vector<std::pair<unsigned, unsigned>> grid_rs;
    if (quick()) {
      grid_rs = {{2, 3}, {3, 2}};
    } else {
      for (unsigned r : {2U, 3U, 4U}) {
        for (unsigned s : {2U, 3U}) {
          std::uint64_t size = s;
          for (unsigned i = 0; i < s; ++i) size *= r;
          if (size <= 2000) grid_rs.emplace_back(r, s);
        }
      }
      if (full()) grid_rs.insert(grid_rs.end(), {{5, 2}, {2, 4}, {3, 4}, {5, 3}});
    }
    for (auto [r, s] : grid_rs) {
      const std::string id = "C1.semidirect.r" + str(std::uint64_t{r}) + ".s" + str(std::uint64_t{s});
      family_row(1, id, family::Semidirect{r, s}, [r = std::uint64_t{r}, s = std::uint64_t{s}](const ExtensionModel& m, VerificationRow& row) {
        const auto inv = invariants(m);
        add(row, "n", r * s, inv.n, kPublished);
        add(row, "r", r, inv.r, kPublished);
        add(row, "s", s, inv.s, kBruteForce);
        add(row, "t", s, inv.t, kPublished);
        add(row, "u", r, inv.u, kBruteForce);
        add(row, "transitive", true, is_transitive(m.group()), kPublished);
        add(row, "stabilizer fixed points", r, std::uint64_t{fixed_points(point_stabilizer(m.group(), 0)).size()}, kPublished);
        add(row, "chains coincide", true, chains_coincide(m).has_value(), kPublished);
        add(row, "primitive", true, is_primitive(m), kPublished);
      });
    }
  }

  void sn_tuple() {
    std::vector<std::pair<unsigned, unsigned>> grid_nk;
    if (quick()) {
      grid_nk = {{4, 2}, {5, 3}};
    } else {
      for (unsigned n = 4; n <= 7; ++n) {
        for (unsigned k = 1; k <= n - 2; ++k) grid_nk.emplace_back(n, k);
      }
    }
    for (auto [n, k] : grid_nk) {
      const std::string id = "C2.sn_tuple.n" + str(std::uint64_t{n}) + ".k" + str(std::uint64_t{k});
      family_row(2, id, family::SnTuple{n, k}, [n, k](const ExtensionModel& m, VerificationRow& row) {
        const auto inv = invariants(m);
        add(row, "n", falling(n, k), inv.n, kPublished);
        add(row, "r", factorial(k), inv.r, kPublished);
        add(row, "s", binomial(n, k), inv.s, kPublished);
        add(row, "t", std::uint64_t{1}, inv.t, kPublished);
        add(row, "u", falling(n, k), inv.u, kPublished);
        add(row, "general primitive", true, is_general_primitive(m), kPublished);
        if (n == 4) {
          add(row, "quick general primitive", verdict_name(QuickVerdict::kNormalsIntersect),
              verdict_name(quick_general_primitive_check(m)), kPublished);
        }
      });
    }
  }

  void alt_product() {
    std::vector<std::pair<unsigned, unsigned>> grid_nk;
    if (quick()) {
      grid_nk = {{4, 1}, {5, 2}};
    } else {
      for (unsigned n = 4; n <= 6; ++n) {
        for (unsigned k = 1; k <= n - 1; ++k) grid_nk.emplace_back(n, k);
      }
    }
    for (auto [n, k] : grid_nk) {
      const std::string id = "C3.alt_product.n" + str(std::uint64_t{n}) + ".k" + str(std::uint64_t{k});
      family_row(3, id, family::AltProduct{n, k}, [n, k](const ExtensionModel& m, VerificationRow& row) {
        const auto inv = invariants(m);
        const bool edge = k == 1 || k == n - 1;
        add(row, "n", edge ? 2 * std::uint64_t{n} : 4 * binomial(n, k), inv.n, kPublished);
        add(row, "r", edge ? std::uint64_t{2} : std::uint64_t{4}, inv.r, kPublished);
        add(row, "general primitive", true, is_general_primitive(m), kPublished);
      });
    }
    family_row(3, "C3.dihedral4", family::Dihedral4{}, [](const ExtensionModel& m, VerificationRow& row) {
      const auto inv = invariants(m);
      add(row, "n", std::uint64_t{4}, inv.n, kPublished);
      add(row, "r", std::uint64_t{2}, inv.r, kPublished);
      add(row, "general primitive", true, is_general_primitive(m), kPublished);
    });
  }

  void psl2() {
    std::vector<unsigned> primes = quick() ? std::vector<unsigned>{7} : std::vector<unsigned>{5, 7, 11, 13};
    if (full()) primes.push_back(17);
    auto simple_and_gp = [](const ExtensionModel& m, VerificationRow& row) {
      add(row, "simple", true, normal_subgroups(m.group()).size() == 2, kPublished);
      add(row, "general primitive", true, is_general_primitive(m), kPublished);
    };
    for (unsigned p : primes) {
      family_row(4, "C4.psl2_max.p" + str(std::uint64_t{p}), family::Psl2Max{p},
                 [p = std::uint64_t{p}, simple_and_gp](const ExtensionModel& m, VerificationRow& row) {
                   const auto inv = invariants(m);
                   add(row, "n", (p + 1) * (p - 1) / 2, inv.n, kPublished);
                   add(row, "r", (p - 1) / 2, inv.r, kPublished);
                   simple_and_gp(m, row);
                 });
    }
    std::vector<std::pair<unsigned, unsigned>> images = {{7, 3}};
    if (!quick()) images.emplace_back(13, 3);
    if (full()) images.emplace_back(19, 3);
    for (auto [p, r] : images) {
      family_row(4, "C4.psl2_borel_image.p" + str(std::uint64_t{p}) + ".r" + str(std::uint64_t{r}),
                 family::Psl2BorelImage{p, r},
                 [p = std::uint64_t{p}, r = std::uint64_t{r}, simple_and_gp](const ExtensionModel& m, VerificationRow& row) {
                   const auto inv = invariants(m);
                   add(row, "n", r * (p + 1), inv.n, kPublished);
                   add(row, "r", r, inv.r, kPublished);
                   simple_and_gp(m, row);
                 });
    }
  }

  void borel() {
    std::vector<std::pair<unsigned, unsigned>> positive;
    std::vector<std::pair<unsigned, unsigned>> negative;
    if (quick()) {
      positive = {{13, 3}};
      negative = {{7, 2}};
    } else {
      positive = {{13, 1}, {13, 2}, {13, 3}, {13, 4}, {7, 1}, {11, 1}, {19, 3}};
      negative = {{7, 2}, {11, 2}};
      if (full()) {
        positive.insert(positive.end(), {{17, 1}, {17, 2}, {17, 4}, {23, 1}});
        negative.emplace_back(23, 2);
      }
    }
    for (auto [p, r] : positive) {
      family_row(5, "C5.borel.p" + str(std::uint64_t{p}) + ".r" + str(std::uint64_t{r}), family::Borel{p, r},
                 [p = std::uint64_t{p}, r = std::uint64_t{r}](const ExtensionModel& m, VerificationRow& row) {
                   const auto inv = invariants(m);
                   add(row, "n", p * r, inv.n, kPublished);
                   add(row, "r", r, inv.r, kPublished);
                   add(row, "general primitive", true, is_general_primitive(m), kPublished);
                 });
    }
    for (auto [p, r] : negative) {
      family_row(5, "C5.borel.p" + str(std::uint64_t{p}) + ".r" + str(std::uint64_t{r}), family::Borel{p, r},
                 [p = std::uint64_t{p}, r = std::uint64_t{r}](const ExtensionModel& m, VerificationRow& row) {
                   const auto inv = invariants(m);
                   add(row, "n", p * r, inv.n, kPublished);
                   add(row, "r", r, inv.r, kPublished);
                   add(row, "general primitive", false, is_general_primitive(m), kPublished);
                   const auto w = scm_witness(m);
                   add(row, "primitive", false, !w.has_value(), kPublished);
                   add(row, "SCM witness verified", true, w.has_value() && verify_witness(m, *w), kPublished);
                 });
    }
  }

  void galois() {
    std::vector<std::pair<unsigned, bool>> cases;
    if (quick()) {
      cases = {{9, true}, {6, false}};
    } else {
      cases = {{9, true}, {8, true}, {25, true}, {6, false}, {10, false}, {15, false}};
      if (full()) cases.insert(cases.end(), {{27, true}, {12, false}, {21, false}});
    }
    for (auto [n, primitive] : cases) {
      family_row(6, "C6.cyclic_galois.n" + str(std::uint64_t{n}), family::CyclicGalois{n},
                 [primitive](const ExtensionModel& m, VerificationRow& row) {
                   add(row, "primitive", primitive, is_primitive(m), kPublished);
                 });
    }
  }

  void an_square() {
    family_row(7, "C7.an_square.n5", family::AnSquare{5}, [](const ExtensionModel& m, VerificationRow& row) {
      add(row, "primitive", true, is_primitive(m), kPublished);
      const auto w = sgm_witness(m);
      add(row, "general primitive", false, !w.has_value(), kPublished);
      // The factors A_5 x 1 and 1 x A_5 as subgroups of the product.
      const PermGroup a5(5, {parse_permutation("(1 2 3)", 5), parse_permutation("(1 2 3 4 5)", 5)}, m.group().limits());
      const PermGroup one = PermGroup::trivial(5, m.group().limits());
      const PermGroup left = direct_product(a5, one);
      const PermGroup right = direct_product(one, a5);
      const bool factor_pair = w && ((w->a == left && w->b == right) || (w->a == right && w->b == left));
      add(row, "SGM witness is the factor pair", true, factor_pair, kPublished);
      add(row, "SGM witness verified", true, w.has_value() && verify_witness(m, *w), kPublished);
    });
  }

  void multiplicativity() {
    const std::size_t count = quick() ? 3 : full() ? 30 : 20;
    const auto corpus = product_corpus();
    const auto pairs = sample_pairs(count, kMultiplicativitySeed, kMaxProductOrder, limits);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const FamilySpec l = corpus[pairs[i].first];
      const FamilySpec j = corpus[pairs[i].second];
      const Limits lim = limits;
      tasks.push_back([=]() {
        VerificationRow row{8, "C8." + pair_id(i), format_family(l) + " x " + format_family(j), {}, {}};
        const ExtensionModel ml = build(l, lim);
        const ExtensionModel mj = build(j, lim);
        add(row, "invariants", tuple_str(invariants(ml) * invariants(mj)),
            tuple_str(invariants(product_model(ml, mj))), kPublished);
        return row;
      });
    }
  }

  void chain_structure() {
    const std::size_t count = quick() ? 2 : full() ? 15 : 10;
    const auto corpus = product_corpus();
    auto pairs = sample_pairs(count, kChainSeed, kMaxProductOrder, limits);
    const std::size_t structured = pairs.size();
    // The coincidence disjunction is checked on every sampled product model,
    // including those of the multiplicativity rows.
    const auto more = sample_pairs(quick() ? 3 : full() ? 30 : 20, kMultiplicativitySeed, kMaxProductOrder, limits);
    pairs.insert(pairs.end(), more.begin(), more.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const FamilySpec l = corpus[pairs[i].first];
      const FamilySpec j = corpus[pairs[i].second];
      const bool check_structure = i < structured;
      const Limits lim = limits;
      const std::string id = check_structure ? "C9." + pair_id(i) : "C9.disjunction." + pair_id(i - structured);
      tasks.push_back([=]() {
        VerificationRow row{9, id, format_family(l) + " x " + format_family(j), {}, {}};
        const ExtensionModel ml = build(l, lim);
        const ExtensionModel mj = build(j, lim);
        if (check_structure) add(row, "chain structure", true, product_chain_structure_check(ml, mj), kPublished);
        const bool coincide = chains_coincide(product_model(ml, mj)).has_value();
        const bool holds = !coincide || coincidence_clauses(ml, mj).any();
        add(row, coincide ? "disjunction (chains coincide)" : "disjunction (no coincidence)", true, holds, kPublished);
        return row;
      });
    }
  }

  void oracles() {
    std::set<std::string> seen;
    std::vector<FamilySpec> specs = models;
    const auto corpus = product_corpus();
    specs.insert(specs.end(), corpus.begin(), corpus.end());
    for (const auto& spec : specs) {
      const std::string name = format_family(spec);
      if (!seen.insert(name).second) continue;
      std::string id = "C10.fixed_points." + name;
      std::replace(id.begin(), id.end(), ' ', '.');
      tasks.push_back(family_task(10, id, spec, limits, [](const ExtensionModel& m, VerificationRow& row) {
        add(row, "fixed-point cluster size", invariants(m).r, cluster_size_fixed_point_oracle(m), kDefinition);
      }));
    }

    const Limits lim = limits;
    tasks.push_back([lim]() {
      VerificationRow row{10, "C10.weak.sn4.k2_over_k1", "sn_tuple n=4 k=2 over sn_tuple n=4 k=1", {}, {}};
      const auto m = invariants(build_sn_tuple(4, 2, lim));
      const auto l = invariants(build_sn_tuple(4, 1, lim));
      add(row, "magnification tuple", "absent", tuple_str(magnification_tuple(m, l)), kPublished);
      const auto factor = weak_cluster_factor(m, l);
      add(row, "weak cluster factor", "2", factor ? str(*factor) : "absent", kPublished);
      return row;
    });
    tasks.push_back([lim]() {
      VerificationRow row{10, "C10.weak.sn5.k3_over_k2", "sn_tuple n=5 k=3 over sn_tuple n=5 k=2", {}, {}};
      const auto m = invariants(build_sn_tuple(5, 3, lim));
      const auto l = invariants(build_sn_tuple(5, 2, lim));
      add(row, "M invariants", "(60,6,10,1,60)", tuple_str(m), kBruteForce);
      add(row, "L invariants", "(20,2,10,1,20)", tuple_str(l), kBruteForce);
      add(row, "magnification tuple", "(3,1,1,3)", tuple_str(magnification_tuple(m, l)), kPublished);
      return row;
    });
  }
};

std::vector<VerificationRow> run_parallel(std::vector<Task>& tasks) {
  std::vector<VerificationRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = tasks[i]();
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 8U));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

}  // namespace

bool VerificationRow::pass() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::optional<Grid> parse_grid(std::string_view name) {
  if (name == "quick") return Grid::kQuick;
  if (name == "default") return Grid::kDefault;
  if (name == "full") return Grid::kFull;
  return std::nullopt;
}

std::vector<FamilySpec> product_corpus() {
  return {family::Semidirect{2, 2}, family::Semidirect{3, 2}, family::Semidirect{2, 3},
          family::Semidirect{4, 2}, family::Semidirect{3, 3}, family::SnTuple{4, 1},
          family::SnTuple{4, 2},    family::SnTuple{5, 1},    family::SnTuple{5, 2},
          family::AltProduct{4, 1}, family::AltProduct{5, 2}, family::Dihedral4{},
          family::Psl2Max{5},       family::Psl2Max{7},       family::Psl2BorelImage{7, 3},
          family::Borel{7, 1},      family::Borel{7, 2},      family::Borel{11, 2},
          family::Borel{13, 3},     family::CyclicGalois{2},  family::CyclicGalois{3},
          family::CyclicGalois{6},  family::CyclicGalois{8},  family::CyclicGalois{9}};
}

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t count, unsigned seed,
                                                               std::uint64_t max_order,
                                                               const Limits& limits) {
  const auto corpus = product_corpus();
  std::vector<std::uint64_t> orders;
  for (const auto& spec : corpus) orders.push_back(build(spec, limits).group().order());

  std::vector<std::pair<std::size_t, std::size_t>> admissible;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (orders[i] * orders[j] <= max_order) admissible.emplace_back(i, j);
    }
  }
  std::mt19937 rng(seed);
  std::shuffle(admissible.begin(), admissible.end(), rng);
  admissible.resize(std::min(count, admissible.size()));
  return admissible;
}

std::vector<VerificationRow> run_verification(Grid grid, Limits limits) {
  Planner plan{grid, limits, {}, {}};
  plan.semidirect();
  plan.sn_tuple();
  plan.alt_product();
  plan.psl2();
  plan.borel();
  plan.galois();
  plan.an_square();
  plan.multiplicativity();
  plan.chain_structure();
  plan.oracles();
  return run_parallel(plan.tasks);
}

Json to_json(const VerificationRow& row) {
  Json checks = Json::array();
  for (const auto& c : row.checks) {
    checks.push_back(Json{{"field", c.field},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"provenance", c.provenance},
                          {"pass", c.pass()}});
  }
  Json out{{"criterion", row.criterion}, {"case", row.case_id}, {"subject", row.subject}, {"checks", checks}};
  if (!row.error.empty()) out["error"] = row.error;
  out["pass"] = row.pass();
  return out;
}

std::string to_text(const VerificationRow& row) {
  std::ostringstream out;
  out << (row.pass() ? "PASS " : "FAIL ") << row.case_id << "  [" << row.subject << "]";
  if (!row.error.empty()) out << "  error: " << row.error;
  for (const auto& c : row.checks) {
    if (!c.pass()) {
      out << "\n       " << c.field << ": expected " << c.expected << " (" << c.provenance << "), computed "
          << c.computed;
    }
  }
  return out.str();
}

}  // namespace galcluster::tools
