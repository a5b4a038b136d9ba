// End-to-end checks of the command line binary: exit codes, JSON shape,
// deterministic output. The binary path arrives as argv[1].
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "equicat/fincat.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string path = "cli_test_out.txt";
  int rc = std::system((cmd + " > " + path + " 2>&1").c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <equicat binary>\n";
    return 2;
  }
  std::string exe = argv[1];

  auto r = run(exe + " h1 --G C2 --Pi C3 --action inversion");
  expect(r.exit_code == 0, "h1 exit code");
  expect(r.out.find("classes: 1") != std::string::npos, "h1 reports one class");

  auto j = run(exe + " h1 --G C2 --Pi C3 --action inversion --json");
  expect(j.exit_code == 0, "h1 json exit code");
  auto parsed = nlohmann::json::parse(j.out, nullptr, false);
  expect(!parsed.is_discarded(), "h1 json parses");
  expect(parsed["schema"] == "equicat-report/1", "schema is versioned");
  expect(parsed["h1"]["class_count"] == 1, "json class count");

  auto j2 = run(exe + " h1 --G C2 --Pi C3 --action inversion --json");
  expect(j.out == j2.out, "identical configs produce byte-identical output");

  auto gl = run(exe + " h1 --G C2 --Pi GL1F4 --action frobenius --json");
  expect(gl.exit_code == 0, "GL coefficient h1");
  auto glj = nlohmann::json::parse(gl.out, nullptr, false);
  expect(glj["h1"]["class_count"] == 1, "Galois GL1F4 has trivial H1");

  auto h90 = run(exe + " hilbert90 --p 2 --k 2 --n 1 --json");
  expect(h90.exit_code == 0, "hilbert90 exit code");
  auto h90j = nlohmann::json::parse(h90.out, nullptr, false);
  expect(h90j["result"]["crossed_hom_count"] == 3, "hilbert90 crossed count");

  auto orb = run(exe + " verify orbit-nerve --G S3 --q 2");
  expect(orb.exit_code == 0, "orbit-nerve exit code");
  expect(orb.out.find("= 4") != std::string::npos && orb.out.find("= 11") != std::string::npos,
         "orbit-nerve reports 4 vs 11");
  expect(orb.out.find("inequality flagged") != std::string::npos, "inequality flagged");

  auto triv = run(exe + " verify silly --G C1");
  expect(triv.exit_code == 0, "verify silly trivial pass");

  auto ms = run(exe + " model-sigma --G C1 --n 3 --json");
  expect(ms.exit_code == 0, "model-sigma trivial pass");

  auto mg = run(exe + " model-gl --p 2 --k 2 --n 1 --json");
  expect(mg.exit_code == 0, "model-gl pass");

  auto bad = run(exe + " h1 --G C2 --Pi nonsense");
  expect(bad.exit_code != 0, "unknown group spec fails with nonzero exit");

  // nerve subcommand reads the documented text format
  {
    std::ofstream cat("cli_test_cat.txt");
    equicat::chaotic(2)->to_text(cat);
  }
  auto nv = run(exe + " nerve --cat cli_test_cat.txt --q 2 --json");
  expect(nv.exit_code == 0, "nerve subcommand exit code");
  auto nvj = nlohmann::json::parse(nv.out, nullptr, false);
  expect(!nvj.is_discarded() && nvj["levels"][2] == 8, "nerve levels of the chaotic pair");
  expect(nvj["pi0"] == 1, "nerve pi0");

  auto nf = run(exe + " notformal --X 2 --Pi C3 --json");
  expect(nf.exit_code == 0, "notformal exit code");

  std::remove("cli_test_out.txt");
  std::remove("cli_test_cat.txt");
  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << failures << " cli test failures\n";
  return 1;
}
