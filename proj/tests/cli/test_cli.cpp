#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int exit_code = -1;
  Json doc;
};

const fs::path& workdir() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / ("torelli_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string file(const std::string& name) { return (workdir() / name).string(); }

Run run(const std::string& args) {
  std::string cmd = std::string(TORELLI_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  Run r;
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.doc = Json::parse(out);
  return r;
}

void write(const std::string& name, const Json& j) { std::ofstream(file(name)) << j.dump(); }

Json read(const std::string& name) {
  std::ifstream in(file(name));
  return Json::parse(in);
}

// Writes g3.json and the separating census curves s0.json, s1.json, ...
const Json& setup() {
  static Json curves = [] {
    REQUIRE(run("gen-surface --genus 3 --out " + file("g3.json")).exit_code == 0);
    Run r = run("census --surface " + file("g3.json") + " --max-weight 24 --check list-separating");
    REQUIRE(r.exit_code == 0);
    Json cs = r.doc["payload"]["curves"];
    for (size_t i = 0; i < cs.size(); ++i) write("s" + std::to_string(i) + ".json", cs[i]);
    return cs;
  }();
  return curves;
}

std::string g3() { return " --surface " + file("g3.json"); }

}  // namespace

TEST_CASE("envelope and exit status") {
  Run r = run("gen-surface --genus 3");
  CHECK(r.exit_code == 0);
  CHECK(r.doc["status"] == "ok");
  CHECK(r.doc["payload"]["genus"] == 3);
  CHECK(r.doc["payload"]["triangles"].size() == 10);
  CHECK(r.doc.contains("timing_ms"));

  Run bad = run("classify --surface /nonexistent.json --from x.json");
  CHECK(bad.exit_code != 0);
  CHECK(bad.doc["status"] == "precondition-failure");
  CHECK(bad.doc["error"].get<std::string>().find("--surface") != std::string::npos);
}

TEST_CASE("malformed curve file names the field") {
  setup();
  Json c = read("s0.json");
  c.erase("coords");
  write("broken.json", c);
  Run r = run("classify" + g3() + " --from " + file("broken.json"));
  CHECK(r.doc["status"] == "precondition-failure");
  CHECK(r.doc["error"].get<std::string>().find("coords") != std::string::npos);

  Json v = read("s0.json");
  v["format_version"] = 7;
  write("version.json", v);
  CHECK(run("classify" + g3() + " --from " + file("version.json")).doc["status"] == "precondition-failure");
}

TEST_CASE("sep-path on disjoint curves gives a two-vertex certificate") {
  const Json& cs = setup();
  int other = -1;
  for (size_t k = 1; k < cs.size() && other < 0; ++k) {
    Run r = run("intersect" + g3() + " --from " + file("s0.json") + " --to " + file("s" + std::to_string(k) + ".json"));
    if (r.doc["payload"]["geometric"] == 0) other = static_cast<int>(k);
  }
  REQUIRE(other > 0);
  Run r = run("sep-path" + g3() + " --from " + file("s0.json") + " --to " + file("s" + std::to_string(other) + ".json"));
  CHECK(r.exit_code == 0);
  CHECK(r.doc["payload"]["kind"] == "sep_path");
  CHECK(r.doc["payload"]["vertices"].size() == 2);
}

TEST_CASE("verify detects a tampered certificate") {
  const Json& cs = setup();
  int far = -1;
  for (size_t k = 1; k < cs.size() && far < 0; ++k) {
    Run r = run("intersect" + g3() + " --from " + file("s0.json") + " --to " + file("s" + std::to_string(k) + ".json"));
    if (r.doc["payload"]["geometric"] == 4) far = static_cast<int>(k);
  }
  REQUIRE(far > 0);
  Run r = run("sep-path" + g3() + " --from " + file("s0.json") + " --to " + file("s" + std::to_string(far) + ".json") +
              " --out " + file("path.json"));
  REQUIRE(r.exit_code == 0);
  Json cert = read("path.json");
  REQUIRE(cert["vertices"].size() >= 3);
  CHECK(run("verify --cert " + file("path.json")).exit_code == 0);

  Json surface = read("g3.json");
  Json alpha = {{"format_version", 1}, {"surface", surface["hash"]}, {"coords", surface["basis"][0]["coords"]}};
  cert["vertices"][1] = alpha;
  write("tampered.json", cert);
  Run v = run("verify --cert " + file("tampered.json"));
  CHECK(v.exit_code != 0);
  CHECK(v.doc["status"] == "invariant-violation");
  CHECK(v.doc["error"] == "vertex 1 is not separating");
}

TEST_CASE("payload is deterministic") {
  setup();
  std::string args = "classify" + g3() + " --from " + file("s3.json");
  CHECK(run(args).doc["payload"] == run(args).doc["payload"]);
}

TEST_CASE("classify, enclose and twist-matrix") {
  setup();
  Json surface = read("g3.json");
  Json alpha = {{"format_version", 1}, {"surface", surface["hash"]}, {"coords", surface["basis"][0]["coords"]},
                {"direction", 1}};
  write("alpha1.json", alpha);
  Run c = run("classify" + g3() + " --from " + file("alpha1.json"));
  CHECK(c.doc["payload"]["separating"] == false);
  Run e = run("enclose" + g3() + " --from " + file("alpha1.json") + " --out " + file("e.json"));
  CHECK(e.exit_code == 0);
  write("e_curve.json", read("e.json")["curve"]);
  CHECK(run("classify" + g3() + " --from " + file("e_curve.json")).doc["payload"]["side_genera"] == Json{1, 2});
  Run t = run("twist-matrix" + g3() + " --from " + file("alpha1.json"));
  CHECK(t.doc["payload"]["torelli"] == false);
  CHECK(t.doc["payload"]["symplectic"] == true);
  Run ts = run("twist-matrix" + g3() + " --from " + file("e_curve.json"));
  CHECK(ts.doc["payload"]["torelli"] == true);
}

TEST_CASE("census parity") {
  setup();
  Run r = run("census" + g3() + " --max-weight 20 --check parity");
  CHECK(r.exit_code == 0);
  CHECK(r.doc["payload"]["odd"] == 0);
  for (auto& [k, n] : r.doc["payload"]["counts_by_k"].items()) CHECK(std::stoi(k) % 2 == 0);
  Run s = run("census" + g3() + " --max-weight 20 --check parity --sample 5 --seed 3");
  CHECK(s.doc["payload"]["joints"] == 5);
}
