#include "report.hpp"

#include <sstream>

namespace galcluster::tools {

namespace {

std::vector<ChainTerm> terms(const std::vector<PermGroup>& subgroups, std::uint64_t group_order) {
  std::vector<ChainTerm> out;
  for (const auto& s : subgroups) {
    out.push_back({s.order(), group_order / s.order(), generator_strings(s)});
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string orders(const std::vector<ChainTerm>& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    s += (i ? ", " : "") + std::to_string(chain[i].order);
  }
  return s + "]";
}

std::string witness_text(const DecompositionWitness& w) {
  std::ostringstream out;
  out << (w.kind == DecompositionWitness::Kind::kScm ? "SCM" : "SGM") << " |A|=" << w.a.order()
      << " |B|=" << w.b.order() << " indices=(" << w.indices.first << ", " << w.indices.second << ")";
  return out.str();
}

}  // namespace

std::vector<std::string> generator_strings(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators()) out.push_back(format_cycles(p));
  return out;
}

std::string verdict_name(QuickVerdict v) {
  switch (v) {
    case QuickVerdict::kSilent:
      return "silent";
    case QuickVerdict::kNoProperNormalContainsH:
      return "fires: no proper normal subgroup contains H";
    case QuickVerdict::kFewNormalSubgroups:
      return "fires: fewer than two proper nontrivial normal subgroups";
    case QuickVerdict::kNormalsIntersect:
      return "fires: nontrivial normal subgroups pairwise intersect";
  }
  return "silent";
}

ChainReport make_chain_report(const ExtensionModel& m) {
  const std::uint64_t order = m.group().order();
  return {terms(descending_chain(m).subgroups, order), terms(ascending_chain(m).subgroups, order),
          chains_coincide(m)};
}

ModelReport make_report(const ExtensionModel& m) {
  ModelReport r;
  r.group_order = m.group().order();
  r.subgroup_order = m.subgroup().order();
  r.degree = m.group().degree();
  r.invariants = invariants(m);
  r.oracle_r = cluster_size_fixed_point_oracle(m);
  r.scm = scm_witness(m);
  r.sgm = sgm_witness(m);
  r.primitive = !r.scm.has_value();
  r.general_primitive = !r.sgm.has_value();
  r.quick_primitive = quick_primitive_check(m);
  r.quick_general_primitive = quick_general_primitive_check(m);
  r.chains = make_chain_report(m);
  return r;
}

Json to_json(const ClusterInvariants& inv) {
  return Json{{"n", inv.n}, {"r", inv.r}, {"s", inv.s}, {"t", inv.t}, {"u", inv.u}};
}

Json to_json(const MagnificationTuple& t) {
  return Json{{"r", t.r}, {"s", t.s}, {"t", t.t}, {"u", t.u}};
}

Json to_json(const DecompositionWitness& w) {
  return Json{{"kind", w.kind == DecompositionWitness::Kind::kScm ? "SCM" : "SGM"},
              {"order_a", w.a.order()},
              {"order_b", w.b.order()},
              {"generators_a", generator_strings(w.a)},
              {"generators_b", generator_strings(w.b)},
              {"indices", Json::array({w.indices.first, w.indices.second})}};
}

Json to_json(const ChainReport& c) {
  auto chain = [](const std::vector<ChainTerm>& terms) {
    Json list = Json::array();
    for (const auto& t : terms) {
      list.push_back(Json{{"order", t.order}, {"index_in_group", t.index_in_group}, {"generators", t.generators}});
    }
    return list;
  };
  Json coincidence = nullptr;
  if (c.coincidence) {
    coincidence = Json{{"order", c.coincidence->subgroup.order()},
                       {"descending_index", c.coincidence->descending_index},
                       {"ascending_index", c.coincidence->ascending_index},
                       {"generators", generator_strings(c.coincidence->subgroup)}};
  }
  return Json{{"descending", chain(c.descending)},
              {"ascending", chain(c.ascending)},
              {"coincidence", coincidence},
              {"certifies_primitive", c.coincidence.has_value()}};
}

Json to_json(const ModelReport& r) {
  return Json{{"degree", r.degree},
              {"group_order", r.group_order},
              {"subgroup_order", r.subgroup_order},
              {"invariants", to_json(r.invariants)},
              {"oracle_r", r.oracle_r},
              {"primitive", r.primitive},
              {"general_primitive", r.general_primitive},
              {"quick_primitive", verdict_name(r.quick_primitive)},
              {"quick_general_primitive", verdict_name(r.quick_general_primitive)},
              {"scm_witness", r.scm ? to_json(*r.scm) : Json(nullptr)},
              {"sgm_witness", r.sgm ? to_json(*r.sgm) : Json(nullptr)},
              {"chains", to_json(r.chains)}};
}

std::string to_text(const ClusterInvariants& inv) {
  std::ostringstream out;
  out << "(n, r, s, t, u) = (" << inv.n << ", " << inv.r << ", " << inv.s << ", " << inv.t << ", " << inv.u
      << ")";
  return out.str();
}

std::string to_text(const ChainReport& c) {
  std::ostringstream out;
  out << "descending chain orders  " << orders(c.descending) << "\n";
  out << "ascending chain orders   " << orders(c.ascending) << "\n";
  if (c.coincidence) {
    out << "chains coincide          order " << c.coincidence->subgroup.order() << " at (i, j) = ("
        << c.coincidence->descending_index << ", " << c.coincidence->ascending_index << ")\n";
  } else {
    out << "chains coincide          no\n";
  }
  return out.str();
}

std::string to_text(const ModelReport& r) {
  std::ostringstream out;
  out << "points                   " << r.degree << "\n";
  out << "|G|, |H|                 " << r.group_order << ", " << r.subgroup_order << "\n";
  out << "invariants               " << to_text(r.invariants) << "\n";
  out << "fixed-point cluster size " << r.oracle_r << "\n";
  out << "primitive                " << yes_no(r.primitive) << "\n";
  out << "general primitive        " << yes_no(r.general_primitive) << "\n";
  out << "quick primitive          " << verdict_name(r.quick_primitive) << "\n";
  out << "quick general primitive  " << verdict_name(r.quick_general_primitive) << "\n";
  if (r.scm) out << "SCM witness              " << witness_text(*r.scm) << "\n";
  if (r.sgm) out << "SGM witness              " << witness_text(*r.sgm) << "\n";
  out << to_text(r.chains);
  return out.str();
}

}  // namespace galcluster::tools
