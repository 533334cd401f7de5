#include "specfile.hpp"

#include <json.hpp>

namespace hp0 {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed spec file: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("spec file: " + what);
}

}  // namespace

SurfaceSpec parse_surface_json(const std::string& text) {
  ordered_json j = parse_text(text);
  if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].size() != 3)
    bad("expected \"weights\": [a, b, c]");
  std::vector<int64_t> w;
  for (const auto& x : j["weights"]) {
    if (!x.is_number_integer()) bad("weights must be integers");
    w.push_back(x.get<int64_t>());
  }
  if (!j.contains("Q") || !j["Q"].is_array()) bad("expected \"Q\": [{\"c\":..,\"e\":[i,j,k]},..]");
  std::vector<std::pair<Monomial, int64_t>> terms;
  for (const auto& t : j["Q"]) {
    if (!t.contains("c") || !t.contains("e") || !t["e"].is_array() || t["e"].size() != 3)
      bad("each Q term needs \"c\" and a three-entry \"e\"");
    Monomial m;
    for (const auto& e : t["e"]) m.push_back(e.get<int32_t>());
    terms.emplace_back(std::move(m), t["c"].get<int64_t>());
  }
  std::string name = j.value("name", std::string{});
  SurfaceSpec spec = make_surface(WeightSystem(w), std::move(terms), name);
  if (j.contains("d") && j["d"].get<int64_t>() != spec.d)
    bad("declared d does not match the weighted degree of Q");
  return spec;
}

std::string dump_surface_json(const SurfaceSpec& spec) {
  ordered_json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["weights"] = {spec.weights[0], spec.weights[1], spec.weights[2]};
  ordered_json q = ordered_json::array();
  for (const auto& [m, c] : spec.q_terms) {
    if (c == 0) continue;
    ordered_json t;
    t["c"] = c;
    t["e"] = {m[0], m[1], m[2]};
    q.push_back(std::move(t));
  }
  j["Q"] = std::move(q);
  j["d"] = spec.d;
  return j.dump(2) + "\n";
}

GroupActionSpec parse_group_json(const std::string& text) {
  ordered_json j = parse_text(text);
  GroupActionSpec spec;
  if (!j.contains("dim") || !j.contains("zeta_order")) bad("expected \"dim\" and \"zeta_order\"");
  spec.dim = j["dim"].get<int>();
  spec.zeta_order = j["zeta_order"].get<int64_t>();
  spec.name = j.value("name", std::string{});
  if (j.contains("order_cap")) spec.order_cap = j["order_cap"].get<int64_t>();
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) bad("\"generators\" must be an array of matrices");
    for (const auto& gm : j["generators"]) {
      std::vector<std::vector<std::vector<int64_t>>> mat;
      for (const auto& row : gm) {
        std::vector<std::vector<int64_t>> r;
        for (const auto& entry : row) {
          std::vector<int64_t> coeffs;
          for (const auto& c : entry) coeffs.push_back(c.get<int64_t>());
          r.push_back(std::move(coeffs));
        }
        mat.push_back(std::move(r));
      }
      spec.generators.push_back(std::move(mat));
    }
  }
  validate_group_spec(spec);
  return spec;
}

std::string dump_group_json(const GroupActionSpec& spec) {
  ordered_json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["dim"] = spec.dim;
  j["zeta_order"] = spec.zeta_order;
  j["generators"] = spec.generators;
  if (spec.order_cap != 1024) j["order_cap"] = spec.order_cap;
  return j.dump(2) + "\n";
}

StratumData parse_strata_json(const std::string& text) {
  ordered_json j = parse_text(text);
  StratumData data;
  data.name = j.value("name", std::string{});
  if (!j.contains("strata") || !j["strata"].is_array()) bad("expected \"strata\" array");
  for (const auto& sj : j["strata"]) {
    Stratum st;
    if (!sj.contains("dimVK")) bad("stratum needs \"dimVK\"");
    st.dim_vk = sj["dimVK"].get<int64_t>();
    if (!sj.contains("pairs") || !sj["pairs"].is_array()) bad("stratum needs \"pairs\"");
    for (const auto& pj : sj["pairs"]) {
      StratumPair pair;
      if (!pj.contains("psi") || !pj["psi"].is_array()) bad("pair needs \"psi\" coefficients");
      for (const auto& c : pj["psi"]) pair.psi.push_back(c.get<int64_t>());
      if (!pj.contains("eta")) bad("pair needs \"eta\"");
      const auto& ej = pj["eta"];
      pair.eta.shift = ej.value("shift", int64_t(0));
      pair.eta.num.clear();
      if (!ej.contains("num") || !ej["num"].is_array()) bad("eta needs \"num\" coefficients");
      for (const auto& c : ej["num"]) pair.eta.num.push_back(c.get<int64_t>());
      if (ej.contains("denoms"))
        for (const auto& e : ej["denoms"]) pair.eta.denom_exps.push_back(e.get<int64_t>());
      st.pairs.push_back(std::move(pair));
    }
    data.strata.push_back(std::move(st));
  }
  return data;
}

std::string dump_strata_json(const StratumData& data) {
  ordered_json j;
  if (!data.name.empty()) j["name"] = data.name;
  ordered_json strata = ordered_json::array();
  for (const auto& st : data.strata) {
    ordered_json sj;
    sj["dimVK"] = st.dim_vk;
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : st.pairs) {
      ordered_json pj;
      pj["psi"] = pair.psi;
      ordered_json ej;
      if (pair.eta.shift != 0) ej["shift"] = pair.eta.shift;
      ej["num"] = pair.eta.num;
      if (!pair.eta.denom_exps.empty()) ej["denoms"] = pair.eta.denom_exps;
      pj["eta"] = std::move(ej);
      pairs.push_back(std::move(pj));
    }
    sj["pairs"] = std::move(pairs);
    strata.push_back(std::move(sj));
  }
  j["strata"] = std::move(strata);
  return j.dump(2) + "\n";
}

}  // namespace hp0
