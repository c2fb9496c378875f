#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "sspkit/cli.hpp"
#include "sspkit/embedded_data.hpp"

using namespace ssp;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

fs::path scratch_dir() {
  auto p = fs::temp_directory_path() / ("sspkit_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli-report") {
  TEST_CASE("table lists exactly the superspecial types") {
    const auto r = cli({"table", "--max-rank", "30"});
    REQUIRE(r.code == 0);
    std::map<std::string, std::set<unsigned>> rows;
    std::set<std::string> exceptional;
    const auto ls = lines(r.out);
    REQUIRE_FALSE(ls.empty());
    CHECK(ls.front() == "family\trank\tsuperspecial\tk");
    for (std::size_t i = 1; i < ls.size(); ++i) {
      const auto tab = ls[i].find('\t');
      const std::string fam = ls[i].substr(0, tab);
      const auto rest = ls[i].substr(tab + 1);
      if (fam == "A" || fam == "B" || fam == "D") rows[fam].insert(static_cast<unsigned>(std::stoul(rest)));
      else exceptional.insert(fam);
    }
    // A(n-1) for n in {1, 3, 6, 10, 15, 21, 28}, by subscript
    CHECK(rows["A"] == std::set<unsigned>{0, 2, 5, 9, 14, 20, 27});
    CHECK(rows["B"] == std::set<unsigned>{2, 6, 12, 20, 30});
    CHECK(rows["D"] == std::set<unsigned>{4, 9, 16, 25});
    CHECK(exceptional == std::set<std::string>{"E6", "E7", "E8", "F4", "G2"});
    CHECK(std::find(ls.begin(), ls.end(), "B\t6\ttrue\t2") != ls.end());
  }

  TEST_CASE("table up to 100") {
    const auto r = cli({"table", "--max-rank", "100"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    // 13 A rows (k <= 13 gives n - 1 <= 90), 9 B, 9 D, 5 exceptional, header
    CHECK(ls.size() == 1 + 13 + 9 + 9 + 5);
  }

  TEST_CASE("classify output is deterministic") {
    const auto a = cli({"classify", "--type", "G2"});
    const auto b = cli({"classify", "--type", "G2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["dim"] == "2");
    CHECK(j["a"] == 1);
    CHECK(j["c"] == "6");
    CHECK(j["gamma"] == 2);
  }

  TEST_CASE("H4 constant in sqrt5 coordinates") {
    const auto r = cli({"classify", "--type", "H4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["c"] == nlohmann::json::array({"1080", "480"}));
    bool found = false;
    for (const auto& c : j["checks"])
      if (c["name"] == "c_times_13_minus_8lambda") {
        found = true;
        CHECK(c["pass"] == true);
      }
    CHECK(found);
  }

  TEST_CASE("non-superspecial classify") {
    const auto r = cli({"classify", "--type", "A", "--rank", "4"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["superspecial"] == false);
    CHECK(j["c"].is_null());
  }

  TEST_CASE("exit codes") {
    CHECK(cli({"verify", "--suite", "cells"}).code == 0);
    CHECK(cli({"verify", "--suite", "cells", "--bogus"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"classify", "--type", "B", "--rank", "1"}).code == 2);
    CHECK(cli({"classify", "--type", "Q7"}).code == 2);
    CHECK(cli({"cell", "--type", "A", "--rank", "4"}).code == 2);
    CHECK(cli({"registry"}).code == 0);
    CHECK(cli({"symbols", "--type", "B", "--rank", "2"}).code == 0);
    CHECK(cli({"degree", "--partition", "2,1"}).code == 0);
  }

  TEST_CASE("corrupted datum flips the exit code") {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.suite = "cells";
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);
    cfg.corrupt_embedded = true;
    std::ostringstream out2, err2;
    CHECK(run(cfg, out2, err2) == 1);
    CHECK_FALSE(embedded_corruption());
    cfg.suite = "all";
    std::ostringstream out3, err3;
    CHECK(run(cfg, out3, err3) == 1);
  }

  TEST_CASE("symbols TSV") {
    const auto r = cli({"symbols", "--type", "B", "--rank", "2"});
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "X\tY\tn\talpha");
  }

  TEST_CASE("report JSON round trip") {
    const auto r = cli({"verify", "--suite", "cells", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto rep = report_from_json(j);
    CHECK(to_json(rep) == j);
    CHECK(rep.failed() == 0);
    CHECK(rep.passed() > 0);
  }

  TEST_CASE("tsv writer") {
    std::ostringstream os;
    write_tsv(VerificationReport("empty"), os);
    CHECK(os.str() == "id\texpected\tactual\tpass\tprovenance\tadvisory\n");
    VerificationReport rep("x");
    rep.check("b/2", "1", "1");
    rep.check("a/1", "1", "2");
    rep.advise("c/3", "2", "1");
    rep.sort();
    CHECK(rep.cases().front().id == "a/1");
    CHECK(rep.failed() == 1);
    CHECK(rep.advisories() == 1);
    CHECK_FALSE(rep.ok());
    CHECK(pad(7) == "007");
    CHECK(pad(31, 2) == "31");
  }

  TEST_CASE("string literals are compared, not treated as true") {
    VerificationReport rep("x");
    rep.check("lit", "1", std::string("5/6"));
    CHECK(rep.failed() == 1);
  }

  TEST_CASE("output file is written atomically") {
    const auto dir = scratch_dir();
    const auto path = dir / "report.json";
    const auto direct = cli({"classify", "--type", "E8"});
    const auto to_file = cli({"classify", "--type", "E8", "--output", path.string()});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(path) == direct.out);
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    atomic_write(path.string(), "replaced\n");
    CHECK(slurp(path) == "replaced\n");
    CHECK(cli({"classify", "--type", "E8", "--output", (dir / "missing" / "x.json").string()}).code == 2);
    fs::remove_all(dir);
  }

  TEST_CASE("E7 and E8 conj reports") {
    const auto e7 = cli({"conj", "--type", "E7"});
    REQUIRE(e7.code == 0);
    const auto j = nlohmann::json::parse(e7.out);
    CHECK(j["M_expected"] == 7);
    CHECK(j["checks"].size() >= 4);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    const auto e8 = cli({"conj", "--type", "E8"});
    CHECK(e8.code == 0);
    CHECK(nlohmann::json::parse(e8.out)["M_expected"] == 40);
  }

  TEST_CASE("budget from the environment") {
    ::setenv("SSPKIT_BUDGET", "100", 1);
    CHECK(cli({"conj", "--type", "B", "--rank", "6"}).code == 2);
    CHECK(cli({"conj", "--type", "B", "--rank", "6", "--budget", "100000"}).code == 0);
    ::setenv("SSPKIT_BUDGET", "lots", 1);
    CHECK(cli({"conj", "--type", "G2"}).code == 2);
    ::unsetenv("SSPKIT_BUDGET");
    const auto r = cli({"conj", "--type", "G2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["M_found"] == 4);
  }
}
