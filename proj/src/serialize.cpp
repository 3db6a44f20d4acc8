#include "nefcert/serialize.hpp"

#include <fstream>

#include "nefcert/errors.hpp"

namespace nefcert {

namespace {

Json block_to_json(const ProperPartition& p) {
  Json arr = Json::array();
  for (int v : mask_to_vertices(p.block)) arr.push_back(v);
  return arr;
}

ProperPartition block_from_json(const Json& arr, int n) {
  std::vector<int> vs;
  for (const auto& v : arr) vs.push_back(v.get<int>());
  return ProperPartition(vertices_to_mask(vs, n), n);
}

Json coeff_map_to_json(const std::map<ProperPartition, Rat>& coeffs) {
  Json arr = Json::array();
  for (const auto& [p, c] : coeffs)
    arr.push_back({{"block", block_to_json(p)}, {"coeff", rat_to_string(c)}});
  return arr;
}

// Missing keys, wrong JSON types, and bad rational literals all surface as
// ParseError at the deserialization boundary.
template <typename F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  }
}

}  // namespace

Json divisor_class_to_json(const DivisorClass& a) {
  Json psi = Json::array();
  for (int v = 1; v <= a.ambient(); ++v) psi.push_back(rat_to_string(a.psi(v)));
  return {{"n", a.ambient()},
          {"psi", psi},
          {"boundary", coeff_map_to_json(a.boundary_coeffs())}};
}

DivisorClass divisor_class_from_json(const Json& j) {
  return parsing([&] {
  int n = j.at("n").get<int>();
  DivisorClass out(n);
  const auto& psi = j.at("psi");
  if (static_cast<int>(psi.size()) != n)
    throw ParseError("psi list has wrong length");
  for (int v = 1; v <= n; ++v)
    out.set_psi(v, rat_from_string(psi[v - 1].get<std::string>()));
  for (const auto& e : j.at("boundary"))
    out.set_boundary(block_from_json(e.at("block"), n),
                     rat_from_string(e.at("coeff").get<std::string>()));
  return out;
  });
}

Json weighting_to_json(const Weighting& w) {
  Json edges = Json::array();
  for (int i = 1; i <= w.ambient(); ++i)
    for (int j = i + 1; j <= w.ambient(); ++j)
      if (w.at(i, j) != 0)
        edges.push_back(
            {{"edge", {i, j}}, {"value", rat_to_string(w.at(i, j))}});
  return {{"n", w.ambient()}, {"edges", edges}};
}

Weighting weighting_from_json(const Json& j) {
  return parsing([&] {
    int n = j.at("n").get<int>();
    Weighting out(n);
    for (const auto& e : j.at("edges")) {
      const auto& ends = e.at("edge");
      int a = ends.at(0).get<int>(), b = ends.at(1).get<int>();
      out.set(a, b, rat_from_string(e.at("value").get<std::string>()));
    }
    return out;
  });
}

Json stable_tree_to_json(const StableTree& t) {
  Json nodes = Json::array();
  for (const auto& p : t.nodes) nodes.push_back(block_to_json(p));
  return {{"n", t.n}, {"nodes", nodes}};
}

StableTree stable_tree_from_json(const Json& j) {
  return parsing([&] {
    StableTree t;
    t.n = j.at("n").get<int>();
    for (const auto& node : j.at("nodes"))
      t.nodes.push_back(block_from_json(node, t.n));
    return t;
  });
}

Json certificate_to_json(const EffectivityCertificate& cert) {
  Json j;
  j["version"] = 1;
  j["n"] = cert.problem.n;
  j["m"] = cert.problem.m;
  j["degrees"] = cert.problem.degrees;
  j["family"] = cert.family == DivisorFamily::D ? "D" : "E";
  if (cert.sigma) j["sigma"] = *cert.sigma;
  j["weights"] = weighting_to_json(cert.weighting).at("edges");
  j["coefficients"] = coeff_map_to_json(cert.boundary_coefficients);
  Json options = Json::object();
  if (cert.options.avoid_tree)
    options["avoid_tree"] = stable_tree_to_json(*cert.options.avoid_tree);
  if (cert.options.positive_on)
    options["positive_on"] = block_to_json(*cert.options.positive_on);
  j["options"] = options;
  Json claims = Json::array();
  for (Claim c : cert.claims) claims.push_back(claim_name(c));
  j["claims"] = claims;
  return j;
}

EffectivityCertificate certificate_from_json(const Json& j) {
  return parsing([&] {
  if (j.at("version").get<int>() != 1)
    throw ParseError("unsupported certificate version");
  EffectivityCertificate cert;
  int n = j.at("n").get<int>();
  cert.problem =
      DegreeProblem(j.at("degrees").get<std::vector<int>>(), j.at("m").get<int>());
  if (cert.problem.n != n) throw ParseError("n does not match degree count");
  std::string fam = j.at("family").get<std::string>();
  if (fam != "D" && fam != "E") throw ParseError("unknown family: " + fam);
  cert.family = fam == "D" ? DivisorFamily::D : DivisorFamily::E;
  if (j.contains("sigma")) cert.sigma = j.at("sigma").get<std::vector<int>>();
  Json wj = {{"n", n}, {"edges", j.at("weights")}};
  cert.weighting = weighting_from_json(wj);
  for (const auto& e : j.at("coefficients"))
    cert.boundary_coefficients[block_from_json(e.at("block"), n)] =
        rat_from_string(e.at("coeff").get<std::string>());
  const Json& options = j.at("options");
  if (options.contains("avoid_tree"))
    cert.options.avoid_tree = stable_tree_from_json(options.at("avoid_tree"));
  if (options.contains("positive_on"))
    cert.options.positive_on = block_from_json(options.at("positive_on"), n);
  for (const auto& c : j.at("claims"))
    cert.claims.push_back(claim_from_name(c.get<std::string>()));
  return cert;
  });
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace nefcert
