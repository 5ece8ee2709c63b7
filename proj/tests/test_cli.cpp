#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "ranklab/io.hpp"

using namespace ranklab;
using testutil::q;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RANKLAB_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (size_t n = fread(buffer, 1, sizeof(buffer), pipe)) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ranklab_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate then rank round-trips bit for bit") {
  TempDir dir;
  const std::string csv = dir.file("x.csv");
  auto gen = run("generate --kind witness --n 5 --k 2 --output " + csv);
  CHECK(gen.exit_code == 0);
  CHECK(load_tournament_file(csv) == theorem_witness(5, 2));

  auto ranked = run("rank --method massey --input " + csv + " --format json");
  REQUIRE(ranked.exit_code == 0);
  const nlohmann::json got = nlohmann::json::parse(ranked.out);
  const nlohmann::json expected = rating_to_json(massey(theorem_witness(5, 2)));
  CHECK(got == expected);

  // json tournament files work the same
  const std::string jsonf = dir.file("x.json");
  CHECK(run("generate --kind witness --n 5 --k 2 --output " + jsonf).exit_code == 0);
  CHECK(load_tournament_file(jsonf) == theorem_witness(5, 2));
}

TEST_CASE("rank text output shows fractions and the ranking line") {
  TempDir dir;
  const std::string csv = dir.file("b.csv");
  save_tournament_file(testutil::b_example(), csv);

  auto borda_run = run("rank --method borda --input " + csv);
  CHECK(borda_run.exit_code == 0);
  CHECK(contains(borda_run.out, "ranking: P1 > P4 > P3 > P2"));

  auto massey_run = run("rank --method massey --input " + csv);
  CHECK(contains(massey_run.out, "325/2844"));
  CHECK(contains(massey_run.out, "ranking: P1 > P3 > P4 > P2"));

  auto markov_run = run("rank --method markov --alpha 17/20 --input " + csv);
  CHECK(contains(markov_run.out, "ranking: P4 > P1 > P3 > P2"));
}

TEST_CASE("text and json renderings agree on the ranking") {
  TempDir dir;
  const std::string csv = dir.file("x.csv");
  save_tournament_file(theorem_witness(5, 2), csv);

  auto text = run("rank --method markov --alpha 17/20 --input " + csv);
  CHECK(contains(text.out, "ranking: P2 > P1 > P3 > P4 > P5"));

  auto json_run = run("rank --method markov --alpha 17/20 --input " + csv + " --format json");
  const nlohmann::json j = nlohmann::json::parse(json_run.out);
  CHECK(j["ranking"] ==
        nlohmann::json({{"P2"}, {"P1"}, {"P3"}, {"P4"}, {"P5"}}));
  CHECK(j["alpha"] == "17/20");
}

TEST_CASE("paradox subcommand renders the verdicts") {
  TempDir dir;
  const std::string x = dir.file("x.csv");
  save_tournament_file(theorem_witness(5, 2), x);
  auto colley_run = run("paradox --method colley --input " + x);
  CHECK(colley_run.exit_code == 0);
  CHECK(contains(colley_run.out, "verdict: Inversion"));
  CHECK(contains(colley_run.out, "before:  P1 > P2 > P3 > P4 > P5"));
  CHECK(contains(colley_run.out, "after:   P4 > P3 > P2 > P1"));
  CHECK(contains(colley_run.out, "deleted: P5"));

  const std::string z = dir.file("z521.csv");
  save_tournament_file(z_tournament(5, 2, 1), z);
  auto markov_run = run("paradox --method markov --alpha 17/20 --input " + z);
  CHECK(contains(markov_run.out, "verdict: Perturbed"));

  const std::string x1 = dir.file("x_k1.csv");
  save_tournament_file(theorem_witness(5, 1), x1);
  auto borda_run = run("paradox --method borda --input " + x1);
  CHECK(contains(borda_run.out, "verdict: NotApplicable"));
}

TEST_CASE("generate kinds and parameter validation") {
  TempDir dir;
  auto z = run("generate --kind z --n 5 --k 2 --l 1 --output " + dir.file("z.csv"));
  CHECK(z.exit_code == 0);
  CHECK(load_tournament_file(dir.file("z.csv")).match_count() == 14);

  auto p = run("generate --kind perfect --order 3,1,2");
  CHECK(p.exit_code == 0);
  CHECK(contains(p.out, "P3,P1,1,0"));
  CHECK(contains(p.out, "P3,P2,1,0"));
  CHECK(contains(p.out, "P1,P2,1,0"));

  CHECK(run("generate --kind ring --n 2").exit_code == 2);
  CHECK(run("generate --kind z --n 5 --k 0 --l 0").exit_code == 2);
  CHECK(run("generate --kind nothing --n 5").exit_code == 2);
  CHECK(run("generate --kind perfect --order 1,1,2").exit_code == 2);
}

TEST_CASE("exit codes: 2 for input problems, 3 for method errors") {
  TempDir dir;
  CHECK(run("rank --method borda --input " + dir.file("missing.csv")).exit_code == 2);

  const std::string draw = dir.file("draw.csv");
  {
    std::ofstream out(draw);
    out << "P1,P2,1,1\n";
  }
  CHECK(run("rank --method massey --input " + draw).exit_code == 3);

  const std::string x = dir.file("x.csv");
  save_tournament_file(theorem_witness(5, 2), x);
  CHECK(run("rank --method markov --alpha 3/2 --input " + x).exit_code == 2);
  CHECK(run("rank --method elo --input " + x).exit_code == 2);
  CHECK(run("rank --input " + x).exit_code == 2);  // --method is required

  const std::string disconnected = dir.file("disc.csv");
  {
    std::ofstream out(disconnected);
    out << "P1,P2,1,0\nP3,P4,1,0\n";
  }
  CHECK(run("rank --method massey --input " + disconnected).exit_code == 3);
  CHECK(run("rank --method colley --input " + disconnected).exit_code == 0);
}

TEST_CASE("properties subcommand") {
  auto massey_all = run("properties --method massey --axiom all --n 5");
  CHECK(massey_all.exit_code == 0);
  CHECK(contains(massey_all.out, "natural: PASS"));
  CHECK(contains(massey_all.out, "condorcet-reducible: PASS"));
  CHECK(contains(massey_all.out, "long-tournament: PASS"));

  auto markov_condorcet = run("properties --method markov --axiom condorcet --n 5 --alpha 17/20");
  CHECK(markov_condorcet.exit_code == 0);
  CHECK(contains(markov_condorcet.out, "condorcet-reducible: FAIL"));

  auto borda_natural = run("properties --method borda --axiom natural --n 4");
  CHECK(borda_natural.exit_code == 0);
  CHECK(contains(borda_natural.out, "natural: PASS (24 cases)"));
}

TEST_CASE("scan-alpha marks the single change point of the witness") {
  TempDir dir;
  const std::string x = dir.file("x.csv");
  save_tournament_file(theorem_witness(5, 2), x);
  auto scan = run("scan-alpha --input " + x + " --grid 0.05:1:0.05");
  CHECK(scan.exit_code == 0);

  int changes = 0;
  std::istringstream lines(scan.out);
  std::string line;
  std::string changed_at;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    if (contains(line, "* ")) {
      ++changes;
      changed_at = line;
    }
  }
  CHECK(rows == 20);  // 0.05 ... 1.00, all accepted
  CHECK(changes == 1);
  CHECK(contains(changed_at, "1/4"));  // the flip sits between 1/5 and 1/4

  CHECK(run("scan-alpha --input " + x + " --grid 0.5:0.1:0.1").exit_code == 2);
  CHECK(run("scan-alpha --input " + x + " --grid nope").exit_code == 2);
}

TEST_CASE("scan-alpha brackets the post-deletion threshold near 0.59") {
  TempDir dir;
  const std::string xp = dir.file("xp.csv");
  save_tournament_file(delete_player(theorem_witness(5, 2), 5), xp);
  auto scan = run("scan-alpha --input " + xp + " --grid 0.05:1:0.05");
  CHECK(scan.exit_code == 0);
  int changes = 0;
  std::string changed_at;
  std::istringstream lines(scan.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (contains(line, "* ")) {
      ++changes;
      changed_at = line;
    }
  }
  CHECK(changes == 1);
  CHECK(contains(changed_at, "3/5"));  // the flip sits between 11/20 and 3/5
}

TEST_CASE("rank writes to --output and properties render as json") {
  TempDir dir;
  const std::string x = dir.file("x.csv");
  save_tournament_file(theorem_witness(5, 2), x);
  const std::string outfile = dir.file("rating.json");
  auto ranked =
      run("rank --method massey --input " + x + " --format json --output " + outfile);
  CHECK(ranked.exit_code == 0);
  std::ifstream in(outfile);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["ratings"]["P1"] == "4/55");

  auto props = run("properties --method borda --axiom all --n 5 --format json");
  REQUIRE(props.exit_code == 0);
  const nlohmann::json pj = nlohmann::json::parse(props.out);
  REQUIRE(pj.size() == 3);
  for (const auto& entry : pj) CHECK(entry["pass"] == true);

  auto paradox_json = run("paradox --method borda --input " + x + " --format json");
  const nlohmann::json dj = nlohmann::json::parse(paradox_json.out);
  CHECK(dj["verdict"] == "Inversion");
  CHECK(dj["ratings_before"]["P1"] == "24");
}

TEST_CASE("scan-alpha json lists exact alphas") {
  TempDir dir;
  const std::string z = dir.file("z.csv");
  save_tournament_file(z_tournament(5, 2, 1), z);
  auto scan = run("scan-alpha --input " + z + " --grid 0.25:0.75:0.25 --format json");
  REQUIRE(scan.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(scan.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["alpha"] == "1/4");
  CHECK(j[1]["alpha"] == "1/2");
  CHECK(j[2]["alpha"] == "3/4");
  for (const auto& row : j) CHECK(row["change"] == false);
}
