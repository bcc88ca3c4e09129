// Copyright 2026 The gpue-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "gpue/cli/run.hpp"
#include "gpue/error.hpp"

namespace fs = std::filesystem;
using gpue::cli::run;
using Json = nlohmann::json;

namespace {

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("gpue-cli-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome lab(std::vector<std::string> args, const fs::path& out_dir = {}) {
  if (!out_dir.empty()) {
    args.push_back("--out");
    args.push_back(out_dir.string());
  }
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const fs::path& p) { return Json::parse(slurp(p)); }

}  // namespace

TEST_CASE("shape prints alpha_0 = 4/sqrt(pi)") {
  ScratchDir dir("shape");
  const auto r = lab({"shape", "--gamma", "0"}, dir.path());
  REQUIRE(r.code == 0);
  const auto doc = read_json(dir / "shape.json");
  CHECK(std::abs(doc[0]["alpha"].get<double>() - 2.256758334191025) < 1e-12);
  CHECK(r.out.find("alpha 2.256758") != std::string::npos);
}

TEST_CASE("pdf writes a versioned CSV with one column per gamma") {
  ScratchDir dir("pdf");
  REQUIRE(lab({"pdf", "--gamma", "0,1", "--grid-points", "11", "--grid-max", "2"}, dir.path()).code == 0);
  std::istringstream csv(slurp(dir / "pdf.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "# gpue-lab v1");
  std::getline(csv, line);
  CHECK(line == "x,gue,goe,p_gamma_0,p_gamma_1");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 11);
}

TEST_CASE("json format replaces tabular CSV output") {
  ScratchDir dir("json");
  REQUIRE(lab({"pdf", "--format", "json", "--grid-points", "5"}, dir.path()).code == 0);
  CHECK_FALSE(fs::exists(dir / "pdf.csv"));
  const auto doc = read_json(dir / "pdf.json");
  CHECK(doc["schema"] == "gpue-lab v1");
  CHECK(doc["columns"]["x"].size() == 5);
}

TEST_CASE("sample is deterministic for a fixed seed, independent of threads") {
  ScratchDir a("sample-a"), b("sample-b"), c("sample-c");
  const std::vector<std::string> args{"sample", "--gamma", "0.5", "--samples", "20000", "--seed", "7"};
  REQUIRE(lab(args, a.path()).code == 0);
  REQUIRE(lab(args, b.path()).code == 0);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  REQUIRE(lab(threaded, c.path()).code == 0);
  for (const char* f : {"sample_hist.csv", "sample_summary.json"}) {
    CHECK(slurp(a / f) == slurp(b / f));
    CHECK(slurp(a / f) == slurp(c / f));
  }
  const auto s = read_json(a / "sample_summary.json")[0];
  for (const char* key : {"gamma", "sigma", "n_samples", "mean_spacing", "alpha_gamma", "ks_statistic", "ks_threshold",
                          "pass"})
    CHECK(s.contains(key));
  CHECK(s["pass"].get<bool>());

  ScratchDir d("sample-d");
  auto reseeded = args;
  reseeded[6] = "8";
  REQUIRE(lab(reseeded, d.path()).code == 0);
  CHECK(slurp(a / "sample_hist.csv") != slurp(d / "sample_hist.csv"));
}

TEST_CASE("algebra suite passes") {
  ScratchDir dir("algebra");
  REQUIRE(lab({"algebra", "--samples", "2000"}, dir.path()).code == 0);
  const auto doc = read_json(dir / "algebra.json");
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["complex_pair_example"]["max_abs_pseudo_norm"].get<double>() < 1e-13);
}

TEST_CASE("oracle agrees with the closed form") {
  ScratchDir dir("oracle");
  REQUIRE(lab({"oracle", "--gamma", "0.5", "--grid-points", "4"}, dir.path()).code == 0);
  CHECK(read_json(dir / "oracle_summary.json")[0]["pass"].get<bool>());
}

TEST_CASE("diag reports non-convergence for H_BK and Re = 1/2 for H_PT") {
  ScratchDir dir("diag");
  REQUIRE(lab({"diag", "hbk", "--basis-sizes", "16,32,64", "--k-track", "6"}, dir.path()).code == 0);
  const auto hbk = read_json(dir / "diag_hbk.json");
  CHECK_FALSE(hbk["converged"].get<bool>());
  CHECK(hbk["drift"].size() == 2);
  CHECK(slurp(dir / "diag_hbk_tracked.csv").find("size,index,re,im") != std::string::npos);

  REQUIRE(lab({"diag", "hpt", "--basis-sizes", "16,32", "--k-track", "4"}, dir.path()).code == 0);
  CHECK(read_json(dir / "diag_hpt.json")["max_abs_re_minus_half"].get<double>() < 1e-12);

  REQUIRE(lab({"diag", "okubo", "--basis-sizes", "16,25", "--k-track", "4", "--beta", "0.3"}, dir.path()).code == 0);
  CHECK(read_json(dir / "diag_okubo.json")["beta"].get<double>() == 0.3);
}

TEST_CASE("fig1 reports monotone sup-norm growth") {
  ScratchDir dir("fig1");
  REQUIRE(lab({"fig1", "--gamma", "0,0.5,1,2"}, dir.path()).code == 0);
  const auto doc = read_json(dir / "fig1_summary.json");
  CHECK(doc["monotone_in_abs_gamma"].get<bool>());
  CHECK(std::abs(doc["distances"][1]["sup_norm_vs_gue"].get<double>() - 0.012316522485592834) < 1e-9);
}

TEST_CASE("zeros subcommand on the bundled table") {
  ScratchDir dir("zeros");
  const auto r = lab({"zeros"}, dir.path());
  REQUIRE(r.code == 0);
  const auto doc = read_json(dir / "zeros_summary.json");
  CHECK(doc["gue_closer_than_goe"].get<bool>());
  CHECK(doc["two_point_closer_than_poisson"].get<bool>());
  CHECK(slurp(dir / "zeros_two_point.csv").find("lag,r2,reference") != std::string::npos);
  CHECK(fs::exists(dir / "zeros_hist.csv"));
}

TEST_CASE("plot script references only emitted CSV files") {
  ScratchDir dir("plot");
  REQUIRE(lab({"fig1", "--emit-plot-script"}, dir.path()).code == 0);
  const auto script = slurp(dir / "plot_fig1.py");
  const std::regex load_call(R"(load\('([^']+)'\))");
  std::set<std::string> files;
  for (auto it = std::sregex_iterator(script.begin(), script.end(), load_call); it != std::sregex_iterator(); ++it)
    files.insert((*it)[1]);
  REQUIRE_FALSE(files.empty());
  for (const auto& f : files) {
    CHECK(f.ends_with(".csv"));
    CHECK(fs::exists(dir / f));
  }
}

TEST_CASE("validation errors exit with status 2") {
  ScratchDir dir("errors");
  const std::vector<std::vector<std::string>> bad{
      {"sample", "--sigma", "0"},
      {"sample", "--samples", "0"},
      {"diag", "okubo", "--beta", "1"},
      {"diag", "hbk", "--basis-sizes", "64,32"},
      {"diag", "hbk", "--k-track", "0"},
      {"diag", "kitten"},
      {"pdf", "--grid-points", "1"},
      {"pdf", "--format", "xml"},
      {"pdf", "--no-such-flag"},
      {"pdf", "--emit-plot-script", "--format", "json"},
      {"sample", "--truncated-product"},
      {"zeros", "--zeros-file", "/nonexistent/zeros.txt"},
      {},
  };
  for (const auto& args : bad) {
    const auto r = lab(args, dir.path());
    CAPTURE(args.empty() ? std::string("<none>") : args[0] + " " + (args.size() > 1 ? args[1] : ""));
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("numerical failures exit with status 3") {
  ScratchDir dir("numerical");
  const auto r = lab({"diag", "okubo", "--quad-nodes-factor", "1", "--basis-sizes", "16,25", "--k-track", "2"},
                     dir.path());
  CHECK(r.code == 3);
  CHECK(r.err.find("numerical") != std::string::npos);
}

TEST_CASE("the installed executable returns the same exit codes") {
  ScratchDir dir("exe");
  const std::string exe = GPUE_LAB_EXE;
  const std::string out = " --out " + dir.path().string() + " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system((exe + " shape" + out).c_str())) == 0);
  CHECK(WEXITSTATUS(std::system((exe + " sample --sigma -1" + out).c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((exe + " --help > /dev/null").c_str())) == 0);
}
