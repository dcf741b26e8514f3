#include "orbitwidth/json_io.hpp"

#include <cmath>

namespace orbitwidth {

using nlohmann::json;

json matrix_to_json(const SkewMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"size", m.size()}, {"rows", std::move(rows)}};
}

SkewMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("rows"))
    throw InvalidInput("matrix JSON needs \"size\" and \"rows\"");
  const int m = j.at("size").get<int>();
  const json& rows = j.at("rows");
  if (m < 1 || !rows.is_array() || static_cast<int>(rows.size()) != m)
    throw InvalidInput("matrix JSON rows must match the declared size");
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw InvalidInput("matrix JSON rows must match the declared size");
    for (int k = 0; k < m; ++k) {
      const double v = row.at(k).get<double>();
      if (!std::isfinite(v))
        throw InvalidInput("matrix entries must be finite");
      a(i, k) = v;
    }
  }
  return SkewMatrix(a);  // ctor rejects non-skew input
}

json pattern_to_json(const GTPattern& p) {
  json rows = json::object();
  for (const auto& [level, row] : p.rows)
    rows[std::to_string(level)] = row;
  return json{{"family", std::string(1, family_letter(p.group.family))},
              {"lambda", p.lambda},
              {"rows", std::move(rows)}};
}

GTPattern pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("lambda") ||
      !j.contains("rows"))
    throw InvalidInput("pattern JSON needs \"family\", \"lambda\", \"rows\"");
  const std::string fam = j.at("family").get<std::string>();
  if (fam != "B" && fam != "D")
    throw InvalidInput("pattern family must be \"B\" or \"D\"");
  const auto lambda = j.at("lambda").get<std::vector<double>>();
  const GroupSpec group(fam == "B" ? Family::B : Family::D,
                        static_cast<int>(lambda.size()));
  GTPattern p{group, lambda, {}};
  for (const auto& [key, row] : j.at("rows").items()) {
    int level = 0;
    try {
      level = std::stoi(key);
    } catch (const std::exception&) {
      throw InvalidInput("pattern row keys must be integer levels");
    }
    p.rows[level] = row.get<std::vector<double>>();
  }
  for (double v : p.lambda)
    if (!std::isfinite(v)) throw InvalidInput("lambda must be finite");
  for (const auto& [level, row] : p.rows)
    for (double v : row)
      if (!std::isfinite(v))
        throw InvalidInput("pattern entries must be finite");
  p.check_shape();
  return p;
}

json edge_to_json(const EdgeDescriptor& e) {
  return json{{"name", e.name()},
              {"kind", e.kind == EdgeDescriptor::Kind::E ? "E" : "F"},
              {"level", e.level},
              {"j", e.j},
              {"lattice_length", e.lattice_length},
              {"endpoint_low", e.endpoint_low},
              {"endpoint_high", e.endpoint_high},
              {"weight", e.weight},
              {"subset_of_edge", e.subset_of_edge}};
}

json bound_report_to_json(const BoundReport& r) {
  json out{{"family", std::string(1, family_letter(r.group.family))},
           {"rank", r.group.rank},
           {"lambda", r.lambda},
           {"bound", r.bound},
           {"witness_coroot", r.witness_coroot.name()},
           {"witness_edge", nullptr},
           {"mode", r.mode == BoundMode::regular
                        ? "regular"
                        : (r.mode == BoundMode::nonregular_B
                               ? "nonregular_B"
                               : "nonregular_D")},
           {"center_vertex", pattern_to_json(r.center_vertex)},
           {"capacity", r.capacity},
           {"ball_dimension", r.ball_dimension}};
  if (r.witness_edge) out["witness_edge"] = edge_to_json(*r.witness_edge);
  if (!r.eta_edge_lengths.empty())
    out["eta_edge_lengths"] = r.eta_edge_lengths;
  return out;
}

json verify_report_to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"seed", f.seed},
                            {"kind", f.kind},
                            {"residual", f.residual},
                            {"payload", f.payload}});
  return json{{"trials", r.trials},
              {"failures", std::move(failures)},
              {"max_residual", r.max_residual},
              {"tolerance_used", r.tolerance_used}};
}

json comparison_to_json(const CenteredComparison& c) {
  return json{{"p", c.p},
              {"alpha", c.alpha.name()},
              {"beta", c.beta.name()},
              {"t_cut", c.t_cut},
              {"coroot_bound", c.coroot_bound},
              {"conclusion", c.conclusion == ComparisonConclusion::standard_weaker
                                 ? "standard_weaker"
                                 : "no_intersection"}};
}

json violations_to_json(const std::vector<PatternViolation>& v) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(json{{"level", x.level},
                       {"position", x.position},
                       {"amount", x.amount},
                       {"description", x.description}});
  return out;
}

json reconstruction_report_to_json(const ReconstructionReport& r,
                                   const GTPattern& pattern) {
  return json{{"pattern", pattern_to_json(pattern)},
              {"matrix", matrix_to_json(r.matrix)},
              {"charpoly_residual", r.charpoly_residual},
              {"per_level_residuals", r.per_level_residuals}};
}

}  // namespace orbitwidth
