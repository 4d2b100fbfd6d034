#include "oplus/json_io.hpp"

namespace oplus {

using nlohmann::json;

json semigroup_to_json(const FiniteSemigroup& s) {
  json t = json::array();
  for (int a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < s.order(); ++b) row.push_back(s.op(a, b));
    t.push_back(std::move(row));
  }
  json out{{"n", s.order()}, {"table", std::move(t)}};
  if (!s.label().empty()) out["label"] = s.label();
  return out;
}

FiniteSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw Error("semigroup JSON needs fields n and table");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  if (static_cast<int>(table.size()) != n)
    throw InvalidTable("field n disagrees with the table size");
  std::string label;
  if (j.contains("label")) label = j.at("label").get<std::string>();
  return FiniteSemigroup::from_table(table, label);
}

json window_to_json(const WindowSet& w) {
  return json{{"horizon", w.horizon()}, {"members", w.members()}};
}

WindowSet window_from_json(const json& j) {
  if (!j.is_object() || !j.contains("horizon"))
    throw Error("window JSON needs a horizon field");
  const std::int64_t horizon = j.at("horizon").get<std::int64_t>();
  if (j.contains("fs_of")) {
    FSGenerator gen(j.at("fs_of").get<std::vector<std::int64_t>>());
    return fs_set(gen, horizon);
  }
  if (j.contains("members"))
    return WindowSet(horizon, j.at("members").get<std::vector<std::int64_t>>());
  throw Error("window JSON needs members or fs_of");
}

json witness_to_json(const FSWitness& w) {
  return json{{"elements", w.elements()}, {"sums_checked", w.sums_checked()}};
}

json trace_to_json(const std::vector<ExtensionStep>& steps) {
  json out = json::array();
  for (const auto& st : steps)
    out.push_back(json{{"step", st.step},
                       {"support", st.support},
                       {"chosen_v", st.chosen},
                       {"rule", step_rule_name(st.rule)}});
  return out;
}

json coloring_to_json(const Coloring& c) {
  return json{{"n", c.n}, {"r", c.r}, {"colors", c.colors}};
}

json certificate_to_json(const FolkmanCertificate& cert) {
  json out{{"kind", certificate_kind_name(cert.kind)},
           {"N", cert.interval},
           {"n", cert.set_size},
           {"r", cert.colors},
           {"nodes", cert.nodes}};
  if (cert.counter) out["counter_coloring"] = coloring_to_json(*cert.counter);
  if (cert.kind == FolkmanCertificate::Kind::BoundHolds) {
    json branches = json::array();
    for (const auto& b : cert.branches)
      branches.push_back(json{{"prefix", b.prefix},
                              {"witness", json{{"color", b.witness.color},
                                               {"elements", b.witness.elements}}}});
    out["branches"] = std::move(branches);
  }
  return out;
}

json triple_scan_to_json(const TripleScan& scan) {
  json out{{"no_triple", scan.no_triple},
           {"pairs_checked", scan.pairs_checked},
           {"pairs_beyond_horizon", scan.pairs_beyond_horizon}};
  if (scan.counterexample)
    out["counterexample"] = {(*scan.counterexample)[0], (*scan.counterexample)[1],
                             (*scan.counterexample)[2]};
  return out;
}

json shift_witness_to_json(const ShiftWitnessReport& report) {
  return json{{"shift", report.shift},
              {"codes_checked", report.codes_checked},
              {"holds", report.holds}};
}

json probe_to_json(const ProbeReport& report) {
  json out{{"trials", report.trials},
           {"violations", report.violations},
           {"seed", report.seed},
           {"interval_backed", report.interval_backed}};
  if (report.first_violation) out["first_violation"] = *report.first_violation;
  return out;
}

}  // namespace oplus
