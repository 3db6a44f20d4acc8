#include "nefcert/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nefcert/certify.hpp"
#include "nefcert/errors.hpp"
#include "nefcert/fcurves.hpp"
#include "nefcert/inductive.hpp"
#include "nefcert/keel.hpp"
#include "nefcert/serialize.hpp"

namespace nefcert {

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMathFailure = 3;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw ParseError("empty integer list: '" + s + "'");
  return out;
}

DivisorFamily parse_family(const std::string& s) {
  if (s == "D") return DivisorFamily::D;
  if (s == "E") return DivisorFamily::E;
  throw ParseError("family must be D or E");
}

struct ProblemArgs {
  std::string degrees;
  int m = 0;
  std::string family = "D";

  DegreeProblem problem() const { return DegreeProblem(parse_int_list(degrees), m); }
};

void add_problem_flags(CLI::App* cmd, ProblemArgs& args) {
  cmd->add_option("--degrees", args.degrees, "comma-separated degrees d1,...,dn")
      ->required();
  cmd->add_option("--m", args.m, "modulus")->required();
  cmd->add_option("--family", args.family, "divisor family: D or E")
      ->check(CLI::IsMember({"D", "E"}));
}

std::string block_string(Mask block) {
  std::string out;
  for (int v : mask_to_vertices(block)) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string fcurve_string(const FCurve& f) {
  std::string out;
  for (Mask part : f.parts) out += "{" + block_string(part) + "}";
  return out;
}

int cmd_build(const ProblemArgs& args, bool want_normal_form) {
  DivisorClass cls = family_class(args.problem(), parse_family(args.family));
  if (want_normal_form) cls = normal_form(cls);
  std::cout << divisor_class_to_json(cls).dump(2) << "\n";
  return kExitAccept;
}

int cmd_certify(const ProblemArgs& args, const std::string& avoid_tree_file,
                const std::string& positive_on, const std::string& out_file) {
  DegreeProblem problem = args.problem();
  // Report the reduction the certifier applies.
  {
    ReducedProblem red = reduce_degrees(problem);
    if (!red.dropped.empty()) {
      std::cout << "note: degrees reduced mod " << problem.m
                << "; dropped indices:";
      for (int v : red.dropped) std::cout << " " << v;
      std::cout << "\n";
    } else if (!problem.is_reduced()) {
      std::cout << "note: degrees reduced mod " << problem.m << "\n";
    }
  }
  CertifyOptions options;
  if (!avoid_tree_file.empty())
    options.avoid_tree = stable_tree_from_json(load_json_file(avoid_tree_file));
  if (!positive_on.empty())
    options.positive_on = ProperPartition(
        vertices_to_mask(parse_int_list(positive_on), problem.n), problem.n);
  EffectivityCertificate cert =
      certify_effective(problem, parse_family(args.family), options);
  save_json_file(out_file, certificate_to_json(cert));
  std::cout << "certificate written to " << out_file << "\n";
  return kExitAccept;
}

int cmd_verify(const std::string& file) {
  EffectivityCertificate cert = certificate_from_json(load_json_file(file));
  Verdict v = verify_certificate(cert);
  if (v.accepted) {
    std::cout << "accept\n";
    return kExitAccept;
  }
  std::cout << "reject\n";
  for (const auto& issue : v.issues)
    std::cout << "  " << issue.code << ": " << issue.detail << "\n";
  return kExitReject;
}

int cmd_fnef(const ProblemArgs& args) {
  DivisorClass cls = family_class(args.problem(), parse_family(args.family));
  auto [min_deg, witness] = min_fcurve_degree(cls);
  std::cout << "minimum F-degree: " << rat_to_string(min_deg) << "\n";
  std::cout << "witness: " << fcurve_string(witness) << "\n";
  return kExitAccept;
}

int cmd_equiv(const std::string& file1, const std::string& file2) {
  DivisorClass a = divisor_class_from_json(load_json_file(file1));
  DivisorClass b = divisor_class_from_json(load_json_file(file2));
  EquivalenceResult res = are_linearly_equivalent(a, b);
  std::cout << (res.equivalent ? "equivalent" : "not equivalent") << "\n";
  return res.equivalent ? kExitAccept : kExitReject;
}

int cmd_normal_form(const std::string& file) {
  DivisorClass a = divisor_class_from_json(load_json_file(file));
  std::cout << divisor_class_to_json(normal_form(a)).dump(2) << "\n";
  return kExitAccept;
}

// Reduced degree vectors up to S_n symmetry: nondecreasing entries in
// [1, m-1] with m | sum.
void reduced_grid(int n, int m, std::vector<std::vector<int>>& out) {
  std::vector<int> d(n, 1);
  auto rec = [&](auto&& self, int pos, int lo, long sum) -> void {
    if (pos == n) {
      if (sum % m == 0) out.push_back(d);
      return;
    }
    for (int v = lo; v <= m - 1; ++v) {
      d[pos] = v;
      self(self, pos + 1, v, sum + v);
    }
  };
  rec(rec, 0, 1, 0);
}

int cmd_grid(int n_max, const std::string& m_list, const std::string& family_str,
             bool as_json) {
  DivisorFamily family = parse_family(family_str);
  Json rows = Json::array();
  if (!as_json)
    std::cout << "n  m  degrees            min-coeff  min-mpart-flow  ms\n";
  for (int m : parse_int_list(m_list)) {
    if (family == DivisorFamily::E && m < 3)
      throw ModulusTooSmall("family E needs m >= 3");
    for (int n = 4; n <= n_max; ++n) {
      std::vector<std::vector<int>> grid;
      reduced_grid(n, m, grid);
      for (const auto& degrees : grid) {
        DegreeProblem problem(degrees, m);
        auto start = std::chrono::steady_clock::now();
        EffectivityCertificate cert = certify_effective(problem, family);
        Verdict verdict = verify_certificate(cert);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (!verdict.accepted)
          throw CertificateSearchFailed("grid cell failed verification");
        Rat min_coeff;
        bool first = true;
        for (const auto& [p, c] : cert.boundary_coefficients) {
          if (first || c < min_coeff) min_coeff = c;
          first = false;
        }
        Rat min_mflow;
        bool any_mpart = false;
        for (const auto& p : m_partitions(problem)) {
          Rat flow = partition_flow(cert.weighting, p);
          if (!any_mpart || flow < min_mflow) min_mflow = flow;
          any_mpart = true;
        }
        std::string deg_str;
        for (size_t i = 0; i < degrees.size(); ++i)
          deg_str += (i ? "," : "") + std::to_string(degrees[i]);
        if (as_json) {
          Json row = {{"n", n},
                      {"m", m},
                      {"degrees", degrees},
                      {"verified", true},
                      {"min_coeff", rat_to_string(min_coeff)},
                      {"ms", elapsed}};
          if (any_mpart) row["min_mpartition_flow"] = rat_to_string(min_mflow);
          rows.push_back(row);
        } else {
          std::cout << n << "  " << m << "  " << deg_str;
          for (size_t pad = deg_str.size(); pad < 19; ++pad) std::cout << ' ';
          std::cout << rat_to_string(min_coeff) << "          "
                    << (any_mpart ? rat_to_string(min_mflow) : "-") << "         "
                    << elapsed << "\n";
        }
      }
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return kExitAccept;
}

}  // namespace

std::optional<SymmetricProfile> symmetrize_report(const DivisorClass& a) {
  SymmetricProfile profile;
  profile.psi_coeff = a.psi(1);
  for (int v = 2; v <= a.ambient(); ++v)
    if (a.psi(v) != profile.psi_coeff) return std::nullopt;
  for (int k = 2; k <= a.ambient() / 2; ++k) profile.delta[k] = Rat(0);
  bool first_of_size[17] = {};
  for (int k = 0; k < 17; ++k) first_of_size[k] = true;
  for (const auto& p : enumerate_proper_partitions(a.ambient())) {
    int k = p.min_side();
    Rat coeff = -a.boundary(p);
    if (first_of_size[k]) {
      profile.delta[k] = coeff;
      first_of_size[k] = false;
    } else if (profile.delta[k] != coeff) {
      return std::nullopt;
    }
  }
  return profile;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"effectivity certificates for boundary divisor classes"};
  app.require_subcommand(1);

  ProblemArgs build_args;
  bool build_normal_form = false;
  CLI::App* build = app.add_subcommand("build", "construct a divisor class");
  add_problem_flags(build, build_args);
  build->add_flag("--normal-form", build_normal_form,
                  "emit the size>=3 boundary normal form");

  ProblemArgs certify_args;
  std::string avoid_tree_file, positive_on, out_file;
  CLI::App* certify = app.add_subcommand("certify", "generate a certificate");
  add_problem_flags(certify, certify_args);
  certify->add_option("--avoid-tree", avoid_tree_file,
                      "stable tree JSON file whose stratum the support avoids");
  certify->add_option("--positive-on", positive_on,
                      "comma-separated block forced to positive coefficient");
  certify->add_option("--out", out_file, "output certificate file")->required();

  std::string verify_file;
  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("file", verify_file, "certificate JSON file")->required();

  ProblemArgs fnef_args;
  CLI::App* fnef = app.add_subcommand("fnef", "minimum F-curve degree");
  add_problem_flags(fnef, fnef_args);

  std::string equiv_file1, equiv_file2;
  CLI::App* equiv = app.add_subcommand("equiv", "test linear equivalence");
  equiv->add_option("file1", equiv_file1)->required();
  equiv->add_option("file2", equiv_file2)->required();

  std::string nf_file;
  CLI::App* nf = app.add_subcommand("normal-form", "boundary normal form");
  nf->add_option("file", nf_file, "divisor class JSON file")->required();

  int grid_n_max = 6;
  std::string grid_m_list = "3", grid_family = "E";
  bool grid_json = false;
  CLI::App* grid = app.add_subcommand("grid", "desk-scale certificate sweep");
  grid->add_option("--n-max", grid_n_max, "largest n to sweep")->required();
  grid->add_option("--m-list", grid_m_list, "comma-separated moduli")->required();
  grid->add_option("--family", grid_family)->check(CLI::IsMember({"D", "E"}));
  grid->add_flag("--json", grid_json, "emit rows as JSON");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(build_args, build_normal_form);
    if (certify->parsed())
      return cmd_certify(certify_args, avoid_tree_file, positive_on, out_file);
    if (verify->parsed()) return cmd_verify(verify_file);
    if (fnef->parsed()) return cmd_fnef(fnef_args);
    if (equiv->parsed()) return cmd_equiv(equiv_file1, equiv_file2);
    if (nf->parsed()) return cmd_normal_form(nf_file);
    if (grid->parsed())
      return cmd_grid(grid_n_max, grid_m_list, grid_family, grid_json);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CertificateSearchFailed& e) {
    std::cerr << "certificate search failed: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const UnbalanceNotFound& e) {
    std::cerr << "unbalancing failed: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nefcert
