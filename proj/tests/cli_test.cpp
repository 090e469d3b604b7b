#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lieframe/errors.hpp"
#include "lieframe/json_io.hpp"
#include "support.hpp"

using namespace lieframe;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lieframe_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"oracle", "--nope"}).code == cli::kUsage);
    Result r = run({"verify-tables", "--theorem", "thm-0.0"});
    CHECK(r.code == cli::kUsage);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
    CHECK(run({"scan", "--family", "g9", "--epsilon", "1"}).code == cli::kUsage);
    CHECK(run({"scan", "--family", "g5", "--epsilon", "3"}).code == cli::kUsage);
    CHECK(run({"catalog", "--epsilon-n", "2"}).code == cli::kUsage);
    CHECK(run({"solution"}).code == cli::kUsage);
    CHECK(run({"solution", "--config", "/nonexistent/file.json"}).code == cli::kUsage);
    CHECK(run({"oracle", "--tol", "-1"}).code == cli::kUsage);
    CHECK(run({"oracle", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"cauchy", "--example", "wave"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kPass);
  }

  TEST_CASE("verify a single table") {
    Result r = run({"verify-tables", "--theorem", "thm-1.2", "--tol", "1e-9"});
    CHECK(r.code == cli::kPass);
    Json j = r.json();
    CHECK(j["command"] == "verify-tables");
    CHECK(j["pass"] == true);
    REQUIRE(j["items"].size() == 1);
    CHECK(j["items"][0]["rows"].size() == 5);
    for (const auto& row : j["items"][0]["rows"]) CHECK(row["pass"] == true);
  }

  TEST_CASE("a failing table row gives exit code 1") {
    Result r = run({"verify-tables", "--theorem", "prop-3.8"});
    CHECK(r.code == cli::kCheckFailed);
    CHECK(r.json()["pass"] == false);
  }

  TEST_CASE("solution preset") {
    Result r = run({"solution", "--preset", "ads3xs3"});
    CHECK(r.code == cli::kPass);
    Json res = r.json()["items"][0]["residuals"];
    for (const char* k : {"ricci_H", "dH", "dstarH", "normH"}) CHECK(std::abs(res[k].get<double>()) < 1e-12);
  }

  TEST_CASE("solution from a configuration file") {
    auto path = temp_file("config.json");
    {
      std::ofstream f(path);
      f << R"({"n": {"family": "g3", "params": {"a": 1, "b": 1, "c": 1}, "alpha": [1, 1, 0], "orientation": 1},
               "x": {"family": "riemannian_unimodular", "params": {"mu1": 1, "mu2": 1, "mu3": 1},
                     "alpha": [1, 0, 0], "orientation": -1},
               "lambda": 1, "l": 0})";
    }
    CHECK(run({"solution", "--config", path.string()}).code == cli::kPass);
    {
      std::ofstream f(path);
      f << R"({"n": {"family": "g3", "params": {"a": 1, "b": 1, "c": 1}, "alpha": [1, 1, 0], "orientation": 1},
               "x": {"family": "riemannian_unimodular", "params": {"mu1": 1, "mu2": 1, "mu3": 1},
                     "alpha": [1, 0, 0], "orientation": -1},
               "lambda": 0.5, "l": 0})";
    }
    Result bad = run({"solution", "--config", path.string()});
    CHECK(bad.code == cli::kCheckFailed);
    CHECK(bad.json()["items"][0].contains("failure"));
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"solution", "--config", path.string()}).code == cli::kUsage);
    std::filesystem::remove(path);
  }

  TEST_CASE("scan without hits") {
    Result r = run({"scan", "--family", "g5", "--epsilon", "1", "--grid", "21", "--expect-none", "--parallelism", "4"});
    CHECK(r.code == cli::kPass);
    CHECK(r.json()["summary"]["hits"] == 0);
  }

  TEST_CASE("scan with expected hits") {
    Result r = run({"scan", "--family", "g3", "--epsilon", "0", "--grid", "5", "--lo", "-2", "--hi", "2"});
    CHECK(r.code == cli::kPass);
    CHECK(r.json()["summary"]["hits"].get<int>() > 0);
    CHECK(run({"scan", "--family", "g3", "--epsilon", "0", "--grid", "5", "--lo", "-2", "--hi", "2", "--expect-none"})
              .code == cli::kCheckFailed);
  }

  TEST_CASE("catalog") {
    Result r = run({"catalog", "--epsilon-n", "0", "--l-samples", "0,0.5,1,1.5,2"});
    CHECK(r.code == cli::kPass);
    CHECK(r.json()["items"].size() >= 5);
  }

  TEST_CASE("cauchy demos") {
    for (const char* ex : {"flat-para", "null-isothermal"}) {
      Result r = run({"cauchy", "--example", ex, "--nx", "32", "--ny", "32", "--dt", "0.05"});
      CAPTURE(ex);
      CHECK(r.code == cli::kPass);
      CHECK(r.json()["items"].size() == 2);
    }
  }

  TEST_CASE("oracle") {
    Result r = run({"oracle", "--samples", "300", "--seed", "5"});
    CHECK(r.code == cli::kPass);
    CHECK(r.json()["items"][0]["samples"] == 300);
  }

  TEST_CASE("determinism") {
    std::vector<std::vector<std::string>> commands = {
        {"oracle", "--samples", "200", "--seed", "17"},
        {"oracle", "--samples", "200", "--seed", "17", "--parallelism", "4"},
        {"verify-tables", "--theorem", "null", "--parallelism", "3"},
        {"catalog", "--epsilon-n", "-1", "--format", "csv"},
    };
    std::string first_oracle;
    for (const auto& c : commands) {
      Result a = run(c), b = run(c);
      CHECK(a.out == b.out);
      if (c[0] == "oracle") {
        if (first_oracle.empty())
          first_oracle = a.out;
        else
          CHECK(a.out == first_oracle);
      }
    }
    CHECK(run({"oracle", "--samples", "200", "--seed", "18"}).out != first_oracle);
  }

  TEST_CASE("csv output and report files") {
    Result r = run({"verify-tables", "--theorem", "thm-1.2", "--format", "csv"});
    CHECK(r.code == cli::kPass);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header.rfind("theorem,row,", 0) == 0);
    CHECK(first.rfind("thm-1.2,", 0) == 0);

    auto path = temp_file("report.json");
    Result f = run({"solution", "--preset", "ads3xs3", "--output", path.string()});
    CHECK(f.code == cli::kPass);
    CHECK(f.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in)["command"] == "solution");
    std::filesystem::remove(path);
  }
}

TEST_SUITE("json_io") {
  TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_row({"a", "b,c"}) == "a,\"b,c\"\n");
    CHECK(std::stod(format_number(0.1)) == 0.1);
  }

  TEST_CASE("surface data round trip") {
    SurfaceData d = perturb_theta(example_flat_paracontact(periodic_box(6, 5, 1, 2), {0, 0.1, 0.2}, 1, 2).slices[1], 0.1, 3);
    SurfaceData back = surface_from_json(Json::parse(to_json(d).dump()));
    CHECK(back.grid.nx == 6);
    CHECK(back.grid.ny == 5);
    CHECK(back.q.xx == d.q.xx);
    CHECK(back.theta.xy == d.theta.xy);
    CHECK(back.ay == d.ay);
    Json broken = to_json(d);
    broken["F"].erase(0);
    CHECK_THROWS_AS(surface_from_json(broken), UsageError);
  }

  TEST_CASE("factor parsing") {
    Json j = {{"family", "g3"}, {"params", {{"a", 1}, {"b", 1}, {"c", 1}}}, {"alpha", {1, 0, 0}}, {"orientation", 1}};
    FactorSpec f = factor_from_json(j);
    CHECK(f.spec.family == Family::g3);
    CHECK(f.alpha[0] == 1);
    j["alpha"] = {1, 0};
    CHECK_THROWS_AS(factor_from_json(j), UsageError);
    j["alpha"] = {1, 0, 0};
    j["orientation"] = 4;
    CHECK_THROWS_AS(factor_from_json(j), UsageError);
  }
}
