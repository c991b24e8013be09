#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end tests against the built binary (path in PAW_BIN).

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunOutput {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("PAW_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PAW_BIN not set");
  return bin;
}

RunOutput run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutput result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "paw-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::string data_path(const std::string& rel) { return std::string(PAW_TEST_DATA) + "/" + rel; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parse command renders both modes and reports free variables") {
  fs::path f = write_scratch("simple.pa", "0=0");
  RunOutput r = run("parse " + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("primitive: 0 = 0") != std::string::npos);

  fs::path appendix = write_scratch("totality.pa", "(Ax1)(x1 = 0 | ~(Ay1)~(x1 = y1'))");
  r = run("--json parse " + appendix.string());
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["payload"]["sugared"] == "(Ax1)(x1 = 0 | (Ex2)(x1 = x2'))");
  CHECK(doc["payload"]["free_variables"].empty());

  fs::path bad = write_scratch("bad.pa", "0 = ");
  r = run("--json parse " + bad.string());
  CHECK(r.exit_code == 2);
  doc = json::parse(r.out);
  CHECK(doc["payload"]["detail"]["span"]["start"] == 4);
}

TEST_CASE("check command accepts the bundled proof and pins failures") {
  RunOutput r = run("check " + data_path("proofs/successor_totality.proof"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("accepted") == 0);

  // corrupt one justification index; rejection lands on that line
  std::string text = read_file(data_path("proofs/successor_totality.proof"));
  std::size_t pos = text.find("GEN:70,x1");
  REQUIRE(pos != std::string::npos);
  std::string corrupted = text.replace(pos, 9, "GEN:69,x1");
  fs::path f = write_scratch("corrupted.proof", corrupted);
  r = run("--json check " + f.string());
  CHECK(r.exit_code == 1);
  json doc = json::parse(r.out);
  CHECK(doc["payload"]["verdict"] == "rejected");
  CHECK(doc["payload"]["failing_line"] == 71);

  fs::path empty = write_scratch("empty.proof", "# nothing here\n");
  r = run("check " + empty.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("eval certifies axiom closures") {
  fs::path f = write_scratch("pa7.pa", "(Ax1)(x1 * 0 = 0)");
  RunOutput r = run("--json --bound 32 eval " + f.string());
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["payload"]["verdict"]["kind"] == "true-certified");
  CHECK(doc["config"]["bound"] == 32);
}

TEST_CASE("verify prints the instance table and rejects closed formulas") {
  fs::path f = write_scratch("pa3_open.pa", "~(0 = x1')");
  RunOutput r = run("--json --bound 5 verify " + f.string());
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["payload"]["table"]["polarity"] == "all-true");
  CHECK(doc["payload"]["table"]["evidence"]["instances"].size() == 5);

  fs::path closed = write_scratch("closed.pa", "0 = 0");
  r = run("verify " + closed.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("no free variables") != std::string::npos);
}

TEST_CASE("classify separates the bundled relations") {
  fs::path h = write_scratch("halts.pa", "@halts(x1)");
  for (const char* bound : {"8", "16", "32"}) {
    RunOutput r = run(std::string("--json --bound ") + bound + " classify " + h.string());
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["payload"]["result"]["classification"] == "verifiable-only-at-bound");
  }

  fs::path d = write_scratch("digits.pa", "@digit_alt(x1)");
  RunOutput r = run("--json classify " + d.string());
  json doc = json::parse(r.out);
  CHECK(doc["payload"]["result"]["classification"] == "computable");
}

TEST_CASE("scan reports the three corpus scenarios with exit codes") {
  RunOutput r = run("scan " + data_path("corpus_clean"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no witness patterns found") != std::string::npos);

  r = run("--json scan " + data_path("corpus_contradictory"));
  CHECK(r.exit_code == 1);
  json doc = json::parse(r.out);
  REQUIRE(doc["payload"]["simple_inconsistency"].size() == 1);
  CHECK(doc["payload"]["simple_inconsistency"][0]["formula"] == "(Ax1)(x1 = x1)");

  r = run("--json --coverage 10 scan " + data_path("corpus_omega"));
  CHECK(r.exit_code == 1);
  doc = json::parse(r.out);
  REQUIRE(doc["payload"]["omega_pattern"].size() == 1);
  CHECK(doc["payload"]["omega_pattern"][0]["coverage"] == 10);
  CHECK(doc["payload"]["omega_pattern"][0]["instances"].size() == 11);

  // a directory with an unparseable proof is an input error
  fs::path dir = scratch_dir() / "broken_corpus";
  fs::create_directories(dir);
  std::ofstream(dir / "bad.proof") << "1 | 0 = | AX:EQ\n";
  r = run("scan " + dir.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("environment variables mirror the flags") {
  fs::path f = write_scratch("env.pa", "~(0 = x1')");
  std::string cmd = "PAW_BOUND=3 " + binary() + " --json verify " + f.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  json doc = json::parse(out);
  CHECK(doc["config"]["bound"] == 3);
  CHECK(doc["payload"]["table"]["evidence"]["instances"].size() == 3);
}

TEST_CASE("json output is byte-identical across runs") {
  std::vector<std::string> commands = {
      "--json parse " + write_scratch("stable1.pa", "(Ax1)(x1 = 0 | ~(Ay1)~(x1 = y1'))").string(),
      "--json check " + data_path("proofs/successor_totality.proof"),
      "--json --bound 16 eval " + write_scratch("stable2.pa", "(Ax1)(x1 + 0 = x1)").string(),
      "--json --bound 6 verify " + write_scratch("stable3.pa", "@digit_alt(x1)").string(),
      "--json --bound 8 classify " + write_scratch("stable4.pa", "@halts(x1)").string(),
      "--json scan " + data_path("corpus_omega"),
  };
  for (const std::string& cmd : commands) {
    RunOutput a = run(cmd);
    RunOutput b = run(cmd);
    CAPTURE(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
