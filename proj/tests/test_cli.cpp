// End-to-end checks of the installed command-line surface: output
// determinism, exit codes, and a few reference values.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cospec/families.hpp"
#include "cospec/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(COSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("spectrum command") {
  auto r = run_cli("spectrum --family g4 --a 1 --b 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["eigenvalues"].size() == 20);
  CHECK(j["eigenvalues"].front().get<double>() == doctest::Approx(-3.0));
  CHECK(j["eigenvalues"].back().get<double>() == doctest::Approx(3.0));

  // cospectral mates produce equal spectra
  auto q4 = run_cli("spectrum --example Q4");
  auto hoff = run_cli("spectrum --example HOFFMAN");
  json jq = json::parse(q4.out), jh = json::parse(hoff.out);
  for (size_t i = 0; i < 16; ++i)
    CHECK(std::abs(jq["eigenvalues"][i].get<double>() -
                   jh["eigenvalues"][i].get<double>()) < 1e-8);
}

TEST_CASE("identical invocations emit identical bytes") {
  for (const char* cmd :
       {"spectrum --example G1", "quotient --example H2",
        "entropy --example Q4 --partA strata:0-1 --g 0.1",
        "walk --example M1 --origin 0 --grid 0:2:0.5 --format csv"}) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("quotient command prints the reference matrix") {
  auto r = run_cli("quotient --example G1");
  json j = json::parse(r.out);
  CHECK(j["matrix"][1][1].get<double>() == doctest::Approx(2.0));
  CHECK(j["matrix"][0][1].get<double>() == doctest::Approx(std::sqrt(3.0)));
  CHECK(j["closed"].get<bool>());
}

TEST_CASE("walk csv layout") {
  auto r = run_cli("walk --example M1 --origin 0 --grid 0:1:0.5 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,stratum_0,stratum_1,stratum_2,stratum_3,stratum_4");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("entropy report fields") {
  auto r = run_cli("entropy --example Q4 --partA strata:0-1 --g 0.1");
  json j = json::parse(r.out);
  for (const char* field : {"graph", "partA", "g", "log_base", "d", "nu",
                            "mode_entropies", "total"})
    CHECK(j.contains(field));
  CHECK(j["partA"].size() == 5);
}

TEST_CASE("distinguish exit codes") {
  // quotient-only on the section-5 pair: undecided (2)
  auto undecided = run_cli("distinguish --example Q4 --example HOFFMAN --strategies quotient");
  CHECK(undecided.exit_code == 2);
  json ju = json::parse(undecided.out);
  CHECK(ju["conclusion"] == "undecided");
  CHECK(ju["cospectral"].get<bool>());
  CHECK(ju["walk"]["verdict"] == "walk-inconclusive");

  // adding the entropy strategy decides it (0)
  auto decided = run_cli(
      "distinguish --example Q4 --example HOFFMAN --strategies quotient,entropy");
  CHECK(decided.exit_code == 0);
  json jd = json::parse(decided.out);
  CHECK(jd["conclusion"] == "non-isomorphic");
  CHECK(jd["entropy"]["delta"].get<double>() > 1e-6);

  // fermionic strategy on the scalable family
  auto ferm = run_cli(
      "distinguish --family g4 --family g5 --a 1 --b 3 --strategies fermionic");
  CHECK(ferm.exit_code == 0);
  json jf = json::parse(ferm.out);
  CHECK(jf["walk"]["verdict"] == "walk-distinguished");
  CHECK(jf["walk"]["witness"]["kind"] == "fermionic-entry");

  // parse failure: exit 1
  auto err = run_cli("distinguish --example NOPE --example Q4");
  CHECK(err.exit_code == 1);
}

TEST_CASE("families listing and emission round trip") {
  auto listing = run_cli("families");
  json jl = json::parse(listing.out);
  CHECK(jl["examples"].size() == 12);
  CHECK(jl["pairs"].size() == 6);

  auto emitted = run_cli("families --example F6A --emit");
  cospec::Graph back = cospec::parse_graph_json(emitted.out);
  CHECK(back.order() == 10);
  CHECK(back.edge_count() == 20);
  CHECK(back.same_edge_set(cospec::example("F6A").graph));

  auto fam = run_cli("families --family t4 --a 1 --b 3 --emit");
  CHECK(fam.exit_code == 0);
  cospec::Graph t4 = cospec::parse_graph_json(fam.out);
  CHECK(t4.order() == 20);
}

TEST_CASE("file inputs in both formats") {
  const std::string dir = "/tmp/cospec_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  {
    std::FILE* f = std::fopen((dir + "/k2.json").c_str(), "w");
    std::fputs(R"({"name":"K2","n":2,"edges":[[0,1]]})", f);
    std::fclose(f);
    std::FILE* t = std::fopen((dir + "/p3.txt").c_str(), "w");
    std::fputs("3\n0 1\n1 2\n", t);
    std::fclose(t);
  }
  auto r = run_cli("spectrum --file " + dir + "/k2.json");
  json j = json::parse(r.out);
  CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(-1.0));
  CHECK(j["eigenvalues"][1].get<double>() == doctest::Approx(1.0));

  auto t = run_cli("spectrum --file " + dir + "/p3.txt");
  json jt = json::parse(t.out);
  CHECK(jt["eigenvalues"].size() == 3);
  CHECK(jt["eigenvalues"][1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("natural-log entropy") {
  auto bits = run_cli("entropy --example Q4 --partA strata:0-1 --g 0.1");
  auto nats = run_cli("entropy --example Q4 --partA strata:0-1 --g 0.1 --log-base e");
  const double sb = json::parse(bits.out)["total"].get<double>();
  const double sn = json::parse(nats.out)["total"].get<double>();
  CHECK(sn == doctest::Approx(sb * std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("batch pair verdicts") {
  const std::string dir = "/tmp/cospec_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  {
    std::FILE* f = std::fopen((dir + "/pairs.json").c_str(), "w");
    std::fputs(R"([["example:G1","example:G2"],["example:Q4","example:HOFFMAN"]])", f);
    std::fclose(f);
  }
  auto r = run_cli("distinguish --pairs " + dir + "/pairs.json --parallel "
                   "--strategies quotient,entropy");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["conclusion"] == "non-isomorphic");
  CHECK(j[1]["conclusion"] == "non-isomorphic");
  CHECK(j[0]["walk"]["verdict"] == "walk-distinguished");
  CHECK(j[1]["walk"]["verdict"] == "walk-inconclusive");
}

TEST_CASE("fermi-quotient against the reference matrix") {
  auto r = run_cli("fermi-quotient --family t5 --a 1 --b 3");
  json j = json::parse(r.out);
  CHECK(j["residual"].get<double>() < 1e-10);
  CHECK(j["max_dev_from_reference"].get<double>() < 1e-10);
  CHECK(j["matrix"][2][2].get<double>() == doctest::Approx(2.0));
}
