#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "meshwork/laws.hpp"

using namespace meshwork;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MESHWORK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
    out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/meshwork_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

// strips timing before comparing report streams
std::string normalize_reports(const std::string& jsonl) {
  std::string out;
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string::npos) end = jsonl.size();
    std::string line = jsonl.substr(start, end - start);
    if (!line.empty()) {
      ordered_json j = parse_json(line, "<report>");
      j["wall_ms"] = 0;
      out += j.dump() + "\n";
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("gen emits a loadable table") {
  RunResult r = run_cli("gen chain 2");
  CHECK(r.exit_code == 0);
  Semigroup sg = semigroup_from_json(parse_json(r.out, "<gen>"));
  CHECK(sg.size() == 2);
  CHECK(sg.mul(0, 1) == 0);
}

TEST_CASE("analyze computes the chain kernel example") {
  std::string path = temp_path("chain.json");
  write_file(path, run_cli("gen chain 2").out);
  RunResult r = run_cli("analyze " + path + " --filter [[0]] --op kernel");
  CHECK(r.exit_code == 0);
  ordered_json j = parse_json(r.out, "<analyze>");
  CHECK(j["results"]["K(F,G)"].dump() == "[0]");
}

TEST_CASE("analyze meshes an inline collection") {
  std::string path = temp_path("z2.json");
  write_file(path, run_cli("gen cyclic 2").out);
  RunResult r = run_cli("analyze " + path + " --collection [[1]] --op mesh");
  CHECK(r.exit_code == 0);
  ordered_json j = parse_json(r.out, "<analyze>");
  // every set containing 1 meets {1}
  CHECK(j["results"]["mesh"]["sets"].dump() == "[[1],[0,1]]");
}

TEST_CASE("analyze rejects a non-associative table with the witness") {
  std::string path = temp_path("bad.json");
  write_file(path, "{\"table\": [[1,0],[0,0]]}\n");
  RunResult r = run_cli("analyze " + path + " --op mesh --collection [[0]]");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("(0,0,1)") != std::string::npos);
}

TEST_CASE("check exits cleanly on a small passing suite") {
  RunResult r = run_cli(
      "check --roster cyclic:2,left_zero:2 --law prop-mesh-galois,prop-stack-d");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS prop-mesh-galois") != std::string::npos);
}

TEST_CASE("check is deterministic for a fixed seed") {
  std::string out1 = temp_path("rep1.jsonl"), out2 = temp_path("rep2.jsonl");
  std::string law = "cor-derived-set-a-iii";
  std::string base = "check --roster cyclic:5 --seed 42 --sample 200 --law " +
                     law + " --out ";
  CHECK(run_cli(base + out1).exit_code == 0);
  CHECK(run_cli(base + out2).exit_code == 0);
  CHECK(normalize_reports(read_file(out1)) ==
        normalize_reports(read_file(out2)));
}

TEST_CASE("hunt exits zero and reports whatever it finds") {
  std::string out = temp_path("hunt.jsonl");
  RunResult r = run_cli(
      "hunt prop-derived-set-a-i-equality --weaken filter-F "
      "--roster cyclic:2 --out " + out);
  CHECK(r.exit_code == 0);
  LawReport rep = report_from_json(parse_json(read_file(out), "<hunt>"));
  CHECK(rep.violations_total > 0);
}

TEST_CASE("hunting an unknown law is a usage error") {
  RunResult r = run_cli("hunt nosuchlaw");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("nosuchlaw") != std::string::npos);
}
