#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitvol/rational.hpp"

using json = nlohmann::json;

namespace {

struct RunOutput {
  int exit_code = -1;
  std::string out;
};

RunOutput run_cli(const std::string& args) {
  const std::string cmd = std::string(ORBITVOL_BIN) + " " + args + " 2>/dev/null";
  RunOutput r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string line;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("volume command, json output") {
  const RunOutput r = run_cli(
      "volume --group A1 --n 3 --weights \"1;1;1\" --basis simple-root --method factored "
      "--calibrated --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"] == "-2");
  CHECK(j["decimal"] == -2.0);
  CHECK(j["method"] == "factored");
  CHECK(j["group"] == "A1");
  CHECK(j["n"] == 3);
  CHECK(j["a"] == 0);
  CHECK(j["terms"] == 4);
  CHECK(j["calibration"] == "-1/2");

  // Round-trip: rebuild the invocation from the emitted object.
  const std::string again = "volume --group " + j["group"].get<std::string>() + " --n " +
                            std::to_string(j["n"].get<int>()) +
                            " --weights \"1;1;1\" --basis simple-root --method " +
                            j["method"].get<std::string>() + " --calibrated --format json";
  CHECK(run_cli(again).out == r.out);
}

TEST_CASE("volume: methods agree and output is deterministic") {
  const std::string base =
      "volume --group A2 --n 3 --weights \"2,1;2,1;2,1\" --basis su3-lm --format json --method ";
  const RunOutput jj = run_cli(base + "su3-jj");
  const RunOutput fac = run_cli(base + "factored");
  const RunOutput naive = run_cli(base + "naive");
  REQUIRE(jj.exit_code == 0);
  REQUIRE(fac.exit_code == 0);
  REQUIRE(naive.exit_code == 0);
  CHECK(json::parse(jj.out)["value"] == json::parse(fac.out)["value"]);
  CHECK(json::parse(naive.out)["value"] == json::parse(fac.out)["value"]);
  CHECK(json::parse(fac.out)["value"] == "-6");
  CHECK(run_cli(base + "factored").out == fac.out);  // byte-identical rerun
}

TEST_CASE("volume: wall input yields 0 with a regularity warning") {
  const RunOutput r = run_cli(
      "volume --group A2 --n 3 --weights \"3,3;2,1;2,1\" --basis su3-lm --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"] == "0");
  REQUIRE(j["warnings"].size() > 0);
  const std::string w = j["warnings"][0].get<std::string>();
  CHECK(w.find("IrregularWeight") != std::string::npos);
}

TEST_CASE("validation failures exit 2 with a machine-readable error") {
  // ST divisibility violation.
  const RunOutput st = run_cli(
      "volume --group A2 --n 3 --weights \"2,1;2,1;1,1\" --basis su3-lm --method su3-st "
      "--format json");
  CHECK(st.exit_code == 2);
  const json err = json::parse(st.out);
  CHECK(err["error"]["type"] == "DivisibilityViolation");

  // su3-lm basis outside A2/N=3.
  CHECK(run_cli("volume --group B2 --n 3 --weights \"2,1;2,1;2,1\" --basis su3-lm "
                "--format json").exit_code == 2);
  // Wrong weight count.
  CHECK(run_cli("volume --group A1 --n 3 --weights \"1;1\" --basis simple-root "
                "--format json").exit_code == 2);
  // Unknown group.
  CHECK(run_cli("volume --group E8 --n 3 --weights \"1;1;1\" --basis simple-root "
                "--format json").exit_code == 2);
  // Term cap.
  CHECK(run_cli("volume --group A2 --n 3 --weights \"2,1;2,1;2,1\" --basis su3-lm "
                "--method naive --cap-terms 10 --format json").exit_code == 2);
}

TEST_CASE("dh command") {
  const RunOutput a = run_cli("dh --group A2 --multiplicity 1 --weight \"1,1\" "
                              "--basis simple-root");
  REQUIRE(a.exit_code == 0);
  CHECK(lines_of(a.out)[0] == "1");
  const RunOutput b = run_cli("dh --group A2 --multiplicity 1 --weight \"-1,-1\" "
                              "--basis simple-root");
  CHECK(lines_of(b.out)[0] == "0");
  const RunOutput c = run_cli("dh --group A1 --multiplicity 1 --weight \"1\" "
                              "--basis simple-root --format json");
  CHECK(json::parse(c.out)["value"] == "1");
  const RunOutput lm = run_cli("dh --group A2 --multiplicity 1 --weight \"2,1\" "
                               "--basis su3-lm --format json");
  CHECK(json::parse(lm.out)["value"] == "1");
}

TEST_CASE("sweep produces a deterministic CSV grid") {
  const std::string cmd =
      "sweep --group A2 --n 3 --weights \"2,1;2,1;2,1\" --basis su3-lm --method su3-jj "
      "--vary 1:1:2:4:1/2";
  const RunOutput r = run_cli(cmd);
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);  // comment + header + 5 rows
  CHECK(lines[1] == "w1c1,value,decimal,warnings");
  CHECK(lines[2].substr(0, 2) == "2,");
  CHECK(lines[6].substr(0, 2) == "4,");
  CHECK(run_cli(cmd).out == r.out);

  // Frozen from the independent enumeration: piecewise linear in l1 with a
  // wall at l1 = 7/2 (collinear triples within each chamber).
  std::vector<orbitvol::Rat> values;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    values.push_back(orbitvol::parse_rat(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  CHECK(values == std::vector<orbitvol::Rat>{orbitvol::Rat(-6), orbitvol::Rat(-4),
                                             orbitvol::Rat(-2), orbitvol::Rat(0),
                                             orbitvol::Rat(0)});
  CHECK(values[0] - 2 * values[1] + values[2] == 0);  // linear inside the chamber
}

TEST_CASE("sweep edge cases") {
  // Empty range: header only, exit 0.
  const RunOutput empty = run_cli(
      "sweep --group A1 --n 3 --weights \"1;1;1\" --basis simple-root --vary 1:1:2:1:1");
  CHECK(empty.exit_code == 0);
  CHECK(lines_of(empty.out).size() == 2);
  // Malformed axis: exit 2.
  CHECK(run_cli("sweep --group A1 --n 3 --weights \"1;1;1\" --basis simple-root "
                "--vary 1:1:1:2:0").exit_code == 2);
  CHECK(run_cli("sweep --group A1 --n 3 --weights \"1;1;1\" --basis simple-root "
                "--vary nonsense").exit_code == 2);
  // Two-axis grid, deterministic row count.
  const RunOutput grid = run_cli(
      "sweep --group A1 --n 4 --weights \"1;1;1;1\" --basis simple-root "
      "--vary 1:1:1:2:1/2 --vary 2:1:1:3:1");
  CHECK(grid.exit_code == 0);
  CHECK(lines_of(grid.out).size() == 2 + 3 * 3);
}

TEST_CASE("a1 polygon sweep crosses walls continuously") {
  const RunOutput r = run_cli(
      "sweep --group A1 --n 4 --weights \"1;1;1;1\" --basis simple-root "
      "--vary 1:1:1/2:7/2:1/4");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  std::vector<orbitvol::Rat> values;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    values.push_back(orbitvol::parse_rat(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  REQUIRE(values.size() == 13);
  // Frozen from the independent enumeration; continuous across the walls at
  // c1 = 1 and c1 = 3 (adjacent differences bounded by 4x the step).
  const std::vector<orbitvol::Rat> expected = {
      orbitvol::Rat(-2), orbitvol::Rat(-3), orbitvol::Rat(-4),  orbitvol::Rat(-7, 2),
      orbitvol::Rat(-3), orbitvol::Rat(-5, 2), orbitvol::Rat(-2), orbitvol::Rat(-3, 2),
      orbitvol::Rat(-1), orbitvol::Rat(-1, 2), orbitvol::Rat(0), orbitvol::Rat(0),
      orbitvol::Rat(0)};
  CHECK(values == expected);
  for (std::size_t i = 1; i < values.size(); ++i) {
    CHECK(abs(values[i] - values[i - 1]) <= orbitvol::Rat(1));
  }
}

TEST_CASE("selftest hook") {
  // The corrupted-sign hook must make the suite fail; the suite itself runs
  // in the acceptance binary, not here (it is slow).
  const RunOutput bad =
      run_cli("selftest --mc-samples 2000 --corrupt-weyl-sign --format json");
  CHECK(bad.exit_code == 1);
  const json arr = json::parse(bad.out);
  bool weyl_failed = false;
  for (const auto& item : arr) {
    if (item["id"] == "8") weyl_failed = !item["pass"].get<bool>();
  }
  CHECK(weyl_failed);
}

TEST_CASE("selftest reports are byte-identical for the same seed") {
  const std::string cmd = "selftest --mc-samples 2000 --seed 99";
  const RunOutput a = run_cli(cmd);
  const RunOutput b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("weight basis must be declared") {
  CHECK(run_cli("dh --group A2 --multiplicity 1 --weight \"1,1\"").exit_code == 2);
  CHECK(run_cli("volume --group A1 --n 3 --weights \"1;1;1\"").exit_code == 2);
}
