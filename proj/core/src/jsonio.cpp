#include "dbcell/jsonio.hpp"

#include <json.hpp>

namespace dbcell {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string seed_to_json(const Seed& seed) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const VertexId& v : seed.vertices()) {
    ordered_json vertex;
    vertex["id"] = v.str();
    vertex["frozen"] = seed.frozen(v);
    vertex["d"] = seed.d(v);
    j["vertices"].push_back(vertex);
  }
  j["epsilon"] = ordered_json::array();
  for (const VertexId& a : seed.vertices()) {
    ordered_json row = ordered_json::array();
    for (const VertexId& b : seed.vertices()) row.push_back(rat_str(seed.epsilon(a, b)));
    j["epsilon"].push_back(row);
  }
  return j.dump(2);
}

Seed seed_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad seed JSON: ") + e.what());
  }
  std::vector<VertexId> verts;
  std::vector<bool> frozen;
  std::vector<long> d;
  for (const auto& vertex : j.at("vertices")) {
    verts.push_back(VertexId::parse(vertex.at("id").get<std::string>()));
    frozen.push_back(vertex.at("frozen").get<bool>());
    d.push_back(vertex.at("d").get<long>());
  }
  std::vector<std::vector<Rat>> eps;
  for (const auto& row : j.at("epsilon")) {
    std::vector<Rat> r;
    for (const auto& entry : row) r.push_back(parse_rat(entry.get<std::string>()));
    eps.push_back(std::move(r));
  }
  return Seed(std::move(verts), std::move(frozen), std::move(eps), std::move(d));
}

std::string steps_to_json(const std::vector<TransformStep>& steps) {
  ordered_json j = ordered_json::array();
  for (const auto& s : steps) {
    ordered_json step;
    if (s.kind == TransformStep::Kind::Mutation) {
      step["mutate"] = s.vertex.str();
    } else {
      ordered_json iso;
      for (const auto& [from, to] : s.sigma) iso[from.str()] = to.str();
      step["iso"] = iso;
    }
    j.push_back(step);
  }
  return j.dump(2);
}

std::vector<TransformStep> steps_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad transformation JSON: ") + e.what());
  }
  std::vector<TransformStep> steps;
  for (const auto& step : j) {
    if (step.contains("mutate")) {
      steps.push_back(
          TransformStep::mutation(VertexId::parse(step.at("mutate").get<std::string>())));
    } else if (step.contains("iso")) {
      std::map<VertexId, VertexId> sigma;
      for (const auto& [from, to] : step.at("iso").items())
        sigma.emplace(VertexId::parse(from), VertexId::parse(to.get<std::string>()));
      steps.push_back(TransformStep::isomorphism(std::move(sigma)));
    } else {
      throw ParseError("transformation step needs 'mutate' or 'iso'");
    }
  }
  return steps;
}

std::string matrix_to_json(const MatQ& m) {
  ordered_json j = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(rat_str(m(i, k)));
    j.push_back(row);
  }
  return j.dump();
}

MatQ matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
  int n = static_cast<int>(j.size());
  MatQ m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(j[i].size()) != n) throw ParseError("matrix is not square");
    for (int k = 0; k < n; ++k) {
      if (j[i][k].is_number_integer())
        m(i, k) = Rat(j[i][k].get<long>());
      else
        m(i, k) = parse_rat(j[i][k].get<std::string>());
    }
  }
  return m;
}

CartanMatrix cartan_from_spec(const std::string& label_or_json) {
  if (!label_or_json.empty() && label_or_json[0] == '[') {
    json j;
    try {
      j = json::parse(label_or_json);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad Cartan JSON: ") + e.what());
    }
    std::vector<std::vector<long>> entries;
    for (const auto& row : j) {
      std::vector<long> r;
      for (const auto& v : row) r.push_back(v.get<long>());
      entries.push_back(std::move(r));
    }
    return CartanMatrix::validate(entries);
  }
  return CartanMatrix::from_label(label_or_json);
}

std::string identity_suite_to_json(const IdentitySuiteReport& report) {
  ordered_json j = ordered_json::array();
  for (const auto& item : report.items) {
    ordered_json entry;
    entry["identity"] = item.identity;
    entry["trials"] = item.trials;
    entry["verdict"] = item.pass ? "PASS" : "FAIL";
    if (!item.counterexample.empty()) entry["counterexample"] = item.counterexample;
    j.push_back(entry);
  }
  return j.dump(2);
}

std::string dt_report_to_json(const DtCheckReport& report) {
  ordered_json j;
  j["entries"] = report.degree_matrix;
  j["verdict"] = report.verdict ? "PASS" : "FAIL";
  j["lamination_route"] = report.lamination_route_agrees;
  if (!report.offending.empty()) j["offending"] = report.offending;
  return j.dump(2);
}

}  // namespace dbcell
