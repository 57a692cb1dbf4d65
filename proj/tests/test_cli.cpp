#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "xmodkit/commands.hpp"
#include "xmodkit/error.hpp"
#include "xmodkit/manifest.hpp"

using namespace xmodkit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path const kSource = XMODKIT_SOURCE_DIR;
fs::path const kManifest = kSource / "manifests" / "fixtures.json";

std::vector<std::string> const kReduceFixtures{"XM-ID", "XM-ZERO", "XM-CYC4", "XM-CYC4-TAU"};
std::vector<std::string> const kClassifyFixtures{"K-ID", "K-ZERO", "K-CYC4", "K-CYC4-TAU"};

CommandResult run(std::string cmd, std::string name, fs::path manifest = kManifest, unsigned threads = 1) {
  CommandOptions o;
  o.command = std::move(cmd);
  o.manifest = manifest.string();
  o.name = std::move(name);
  o.threads = threads;
  return run_command(o);
}

std::string without_timing(nlohmann::ordered_json report) {
  report.erase("timing");
  return render_report(report);
}

std::string slurp(fs::path const& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path temp_file(std::string const& name, std::string const& text) {
  fs::path const p = fs::temp_directory_path() / ("xmodkit-test-" + name);
  std::ofstream(p) << text;
  return p;
}

int shell(std::string const& cmd) {
  int const status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("manifest parsing") {
    Manifest const m = Manifest::load(kManifest);
    CHECK(m.version() == "1");
    CHECK(m.kind_of("XM-CYC4-TAU") == ObjectKind::CrossedModule);
    CHECK(m.kind_of("K-ZERO") == ObjectKind::Kernel);
    CHECK_FALSE(m.kind_of("nothing"));
    CHECK(m.group("D4").order() == 8);
    CHECK(m.crossed_module("XM-CYC4-TAU").theta[1].map() == std::vector<Elem>{0, 3, 2, 1});
    CHECK_THROWS_AS(m.crossed_module("XM-CYC4-BROKEN-C1"), Error);
    CHECK_THROWS_AS(m.crossed_module("K-ZERO"), ParseError);

    CHECK_THROWS_AS(Manifest::parse(""), ParseError);
    CHECK_THROWS_AS(Manifest::parse("{}"), ParseError);
    CHECK_THROWS_AS(Manifest::parse(R"({"version":"2","groups":{"G":{"cyclic":2}}})"), ParseError);
    CHECK_THROWS_AS(Manifest::parse(R"({"version":"1","groups":{"G":{"cyclic":2}},"homs":{"G":{}}})"),
                    ParseError);
    Manifest const dangling =
        Manifest::parse(R"({"version":"1","homs":{"h":{"source":"X","target":"Y","map":[0]}}})");
    CHECK_THROWS_AS(dangling.hom("h"), ParseError);
    Manifest const inline_group = Manifest::parse(
        R"({"version":"1","groups":{"P":{"product":["A","B"]},"A":{"cyclic":2},"B":{"table":[[0,1],[1,0]]}}})");
    CHECK(inline_group.group("P").order() == 4);
  }

  TEST_CASE("cochain serialization is sparse and round-trips") {
    ModulePtr const m = GModule::trivial(cyclic_group(2), cyclic_group(2));
    Cochain const c = Cochain::from_values(m, 2, {0, 0, 0, 1});
    auto const j = cochain_to_json(c);
    CHECK(j["entries"].size() == 1);
    CHECK(j["entries"][0][0] == json::array({1, 1}));
    CHECK(cochain_from_json(json::parse(j.dump()), m) == c);
    CHECK(cochain_to_json(Cochain::zero(m, 3))["entries"].empty());
    CHECK(group_from_json(json::parse(group_to_json(dihedral_group(4)).dump())) == dihedral_group(4));
  }

  TEST_CASE("exit codes through run_command") {
    CHECK(run("check", "XM-CYC4-TAU").exit_code == kOk);
    CommandResult const broken = run("check", "XM-ZERO4-BROKEN-ACTION");
    CHECK(broken.exit_code == kSemanticFailure);
    CHECK(broken.report["status"] == "fail");
    CHECK(broken.report["payload"]["error"] == "NotAnAction");
    CHECK(broken.report["payload"]["witness"] == json::array({1, 1}));
    CommandResult const c1 = run("check", "XM-CYC4-BROKEN-C1");
    CHECK(c1.report["payload"]["error"] == "AxiomC1Failed");
    CHECK(c1.report["payload"]["witness"] == json::array({1}));
    CHECK(run("check", "missing").exit_code == kParseError);
    CHECK(run("reduce", "K-ZERO").exit_code == kParseError);
    CHECK(run("check", "XM-ID", temp_file("empty.json", "")).exit_code == kParseError);
    CHECK(run("check", "XM-ID", kSource / "no-such-file.json").exit_code == kParseError);

    CommandOptions o;
    o.command = "classify";
    o.manifest = kManifest.string();
    o.name = "K-CYC4";
    o.budget = 0.0;
    CHECK(run_command(o).exit_code == kBudgetExceeded);
    o.command = "reduce";
    o.name = "XM-CYC4-TAU";
    o.budget.reset();
    o.stick = "seed:x";
    CHECK(run_command(o).exit_code == kParseError);
  }

  TEST_CASE("report payloads") {
    auto const red = run("reduce", "XM-CYC4-TAU").report;
    CHECK(red["payload"]["k"]["entries"] == json::parse("[[[1,1,1],1]]"));
    CHECK(red["payload"]["is_cocycle"] == true);
    CHECK(red["payload"]["k_is_coboundary"] == false);
    CHECK(run("reduce", "XM-ZERO").report["payload"]["k"]["entries"].empty());

    CommandOptions o;
    o.command = "reduce";
    o.manifest = kManifest.string();
    o.name = "XM-CYC4-TAU";
    for (int seed = 0; seed < 6; ++seed) {
      o.stick = "seed:" + std::to_string(seed);
      auto const r = run_command(o);
      REQUIRE(r.exit_code == kOk);
      CHECK(r.report["payload"]["canonical_comparison"]["cohomologous"] == true);
      CHECK_NOTHROW(revalidate_report(json::parse(render_report(r.report))));
    }

    CHECK(run("classify", "K-ZERO").report["payload"]["representatives"].size() == 2);
    auto const tau = run("classify", "K-CYC4-TAU").report;
    CHECK(tau["status"] == "ok");
    CHECK(tau["payload"]["obstruction"]["vanished"] == false);
    CHECK(tau["payload"]["representatives"].empty());
    CHECK(run("classify", "K-ID").report["payload"]["representatives"].size() == 1);
    CHECK(run("prolong", "PRE-POS").report["payload"]["covering_classes"] == 2);
    CHECK(run("prolong", "PRE-NEG").report["payload"]["covering_classes"] == 0);
    CHECK(run("prolong", "PRE-TRIVIAL").report["payload"]["covering_classes"] == 1);
    CHECK(run("obstruction", "K-CYC4-TAU").report["payload"]["h3_classes"] == 2);
    CommandOptions c;
    c.command = "cohomology";
    c.manifest = kManifest.string();
    c.name = "Z3-Z3";
    c.degree = 3;
    CHECK(run_command(c).report["payload"]["classes"] == 3);
  }

  TEST_CASE("every report re-parses and re-validates") {
    std::vector<std::pair<std::string, std::string>> jobs;
    for (auto const& n : kReduceFixtures) jobs.emplace_back("reduce", n);
    for (auto const& n : kClassifyFixtures) {
      jobs.emplace_back("classify", n);
      jobs.emplace_back("obstruction", n);
    }
    for (auto const& n : {"PRE-POS", "PRE-NEG", "PRE-TRIVIAL"}) jobs.emplace_back("prolong", n);
    for (auto const& n : {"Z2-Z2", "Z4-Z2", "Z2-Z4-SIGN"}) jobs.emplace_back("cohomology", n);
    for (auto const& n : {"XM-CYC4", "K-CYC4", "PRE-POS", "Z2-Z2", "D4", "double", "XM-CYC4-BROKEN-C1"})
      jobs.emplace_back("check", n);
    for (auto const& [cmd, name] : jobs) {
      CAPTURE(cmd);
      CAPTURE(name);
      auto const r = run(cmd, name);
      CHECK_NOTHROW(revalidate_report(json::parse(render_report(r.report))));
    }
    // a tampered report is caught
    auto r = run("classify", "K-ZERO").report;
    r["payload"]["representatives"][0]["j"] = json::array({0, 0});
    CHECK_THROWS(revalidate_report(json::parse(r.dump())));
  }

  TEST_CASE("golden reports across runs and thread counts") {
    auto check = [](std::string const& cmd, std::string const& name) {
      CAPTURE(name);
      fs::path const golden = kSource / "tests" / "golden" / (cmd + "-" + name + ".json");
      REQUIRE(fs::exists(golden));
      std::string const expected = slurp(golden);
      CHECK(without_timing(run(cmd, name, kManifest, 1).report) == expected);
      CHECK(without_timing(run(cmd, name, kManifest, 1).report) == expected);
      CHECK(without_timing(run(cmd, name, kManifest, 4).report) == expected);
    };
    for (auto const& n : kReduceFixtures) check("reduce", n);
    for (auto const& n : kClassifyFixtures) check("classify", n);
  }

  TEST_CASE("command-line binary") {
    std::string const cli = XMODKIT_CLI;
    std::string const m = kManifest.string();
    CHECK(shell(cli + " check " + m + " --name XM-CYC4-TAU > /dev/null") == 0);
    CHECK(shell(cli + " check " + m + " --name XM-ZERO4-BROKEN-ACTION > /dev/null") == 1);
    CHECK(shell(cli + " check " + temp_file("empty2.json", "").string() + " --name X > /dev/null") == 2);
    CHECK(shell(cli + " classify " + m + " --name K-CYC4 --budget 0 > /dev/null") == 3);
    CHECK(shell(cli + " frobnicate > /dev/null 2>&1") == 2);
    CHECK(shell(cli + " reduce " + m + " > /dev/null 2>&1") == 2);
    fs::path const out = fs::temp_directory_path() / "xmodkit-test-out.json";
    fs::remove(out);
    CHECK(shell(cli + " reduce " + m + " --name XM-CYC4-TAU --threads 3 --out " + out.string()) == 0);
    REQUIRE(fs::exists(out));
    auto report = nlohmann::ordered_json::parse(slurp(out));
    CHECK(without_timing(report) == slurp(kSource / "tests" / "golden" / "reduce-XM-CYC4-TAU.json"));
  }
}
