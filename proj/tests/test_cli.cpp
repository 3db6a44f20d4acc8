#include <doctest.h>

#include <cstdio>
#include <initializer_list>
#include <vector>

#include "nefcert/cli.hpp"
#include "nefcert/divisors.hpp"
#include "nefcert/serialize.hpp"

using namespace nefcert;

namespace {

int run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"nefcert"};
  argv.insert(argv.end(), args.begin(), args.end());
  return nefcert::run(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: build succeeds") {
  CHECK(run_cli({"build", "--degrees", "1,1,1,1", "--m", "2"}) == 0);
  CHECK(run_cli({"build", "--degrees", "1,1,1,1,1,1", "--m", "3", "--family",
                 "E", "--normal-form"}) == 0);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli({"build", "--degrees", "1,1,1,1"}) == 2);   // missing --m
  CHECK(run_cli({"build", "--m", "2"}) == 2);               // missing degrees
  CHECK(run_cli({"nonsense"}) == 2);
  CHECK(run_cli({"build", "--degrees", "1,1,1", "--m", "2"}) == 2);  // 3 | sum
  CHECK(run_cli({"verify", "no_such_cert.json"}) == 2);
}

TEST_CASE("cli: certify then verify round trip") {
  TempFile cert("cli_test_cert.json");
  CHECK(run_cli({"certify", "--degrees", "1,1,1,2,2,2", "--m", "3", "--out",
                 cert.path.c_str()}) == 0);
  CHECK(run_cli({"verify", cert.path.c_str()}) == 0);

  // tamper with a weight: verification must reject with exit 1
  Json j = load_json_file(cert.path);
  j["weights"][0]["value"] = "99";
  save_json_file(cert.path, j);
  CHECK(run_cli({"verify", cert.path.c_str()}) == 1);
}

TEST_CASE("cli: certify family E with reduction notice") {
  TempFile cert("cli_test_cert_e.json");
  CHECK(run_cli({"certify", "--degrees", "3,1,1,1,2,1", "--m", "3", "--family",
                 "E", "--out", cert.path.c_str()}) == 0);
  CHECK(run_cli({"verify", cert.path.c_str()}) == 0);
}

TEST_CASE("cli: certify with positive-on and avoid-tree") {
  TempFile tree("cli_test_tree.json");
  StableTree t;
  t.n = 6;
  t.nodes = {ProperPartition(vertices_to_mask({1, 2}, 6), 6)};
  save_json_file(tree.path, stable_tree_to_json(t));

  TempFile cert("cli_test_cert_opts.json");
  CHECK(run_cli({"certify", "--degrees", "1,1,1,1,1,1", "--m", "3",
                 "--avoid-tree", tree.path.c_str(), "--positive-on", "1,2,3",
                 "--out", cert.path.c_str()}) == 0);
  CHECK(run_cli({"verify", cert.path.c_str()}) == 0);
}

TEST_CASE("cli: equiv distinguishes classes") {
  TempFile f1("cli_test_class1.json");
  TempFile f2("cli_test_class2.json");
  TempFile f3("cli_test_class3.json");
  DivisorClass a = combine(psi_class(1, 5), psi_class(2, 5), Rat(1), Rat(1));
  DivisorClass b(5);
  for (auto block : {std::vector<int>{1, 3}, {1, 4}, {1, 5}, {1, 3, 4},
                     {1, 3, 5}, {1, 4, 5}})
    b.set_boundary(ProperPartition(vertices_to_mask(block, 5), 5), Rat(-1));
  save_json_file(f1.path, divisor_class_to_json(a));
  save_json_file(f2.path, divisor_class_to_json(b));
  save_json_file(f3.path, divisor_class_to_json(psi_class(1, 5)));
  CHECK(run_cli({"equiv", f1.path.c_str(), f2.path.c_str()}) == 0);
  CHECK(run_cli({"equiv", f1.path.c_str(), f3.path.c_str()}) == 1);
}

TEST_CASE("cli: normal-form and fnef") {
  TempFile f("cli_test_nf.json");
  save_json_file(f.path, divisor_class_to_json(psi_class(1, 5)));
  CHECK(run_cli({"normal-form", f.path.c_str()}) == 0);
  CHECK(run_cli({"fnef", "--degrees", "1,1,1,1,1,1", "--m", "3"}) == 0);
}

TEST_CASE("cli: grid sweep") {
  CHECK(run_cli({"grid", "--n-max", "5", "--m-list", "2,3", "--family", "D"}) ==
        0);
  CHECK(run_cli({"grid", "--n-max", "5", "--m-list", "3", "--family", "E",
                 "--json"}) == 0);
  CHECK(run_cli({"grid", "--n-max", "5", "--m-list", "2", "--family", "E"}) ==
        2);  // family E needs m >= 3
}

TEST_CASE("symmetrize_report") {
  DivisorClass d = divisor_D(DegreeProblem({1, 1, 1, 1, 1, 1}, 3));
  auto profile = symmetrize_report(d);
  REQUIRE(profile.has_value());
  CHECK(profile->psi_coeff == 2);
  CHECK(profile->delta.at(2) == -2);
  CHECK(profile->delta.at(3) == 0);

  DivisorClass lopsided = psi_class(1, 6);
  CHECK_FALSE(symmetrize_report(lopsided).has_value());
}
