#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "radonlink/cli.hpp"
#include "radonlink/io.hpp"
#include "support.hpp"

using namespace radonlink;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("radonlink-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("find on the n=1 fixture") {
  Scratch tmp;
  const auto points = tmp.write("n1.txt", "1 4\n0\n1\n2\n3\n");
  const Run r = run({"find", points});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["subsets"] == json::parse("[[1,3],[2,4]]"));
  CHECK(doc["certificate"]["first"] == json::parse("[2,4]"));
  CHECK(doc["certificate"]["second"] == json::parse("[1,3]"));
  CHECK(doc["verification"]["verdict"] == "pass");

  // Byte-identical on re-run.
  CHECK(run({"find", points}).out == r.out);
}

TEST_CASE("check-gp on degenerate input") {
  Scratch tmp;
  const auto points = tmp.write("bad.txt", "2 5\n0 0\n1 1\n2 2\n3 -1\n-2 5\n");
  const Run r = run({"check-gp", points});
  CHECK(r.code == kExitInvalidInput);
  CHECK(json::parse(r.out)["violation"] == json::parse("[1,2,3]"));
  CHECK(r.err.find("{1, 2, 3}") != std::string::npos);

  const Run f = run({"find", points});
  CHECK(f.code == kExitInvalidInput);
  CHECK(f.err.find("{1, 2, 3}") != std::string::npos);

  const auto good = tmp.write("good.txt", "2 5\n0 0\n1 1\n2 4\n3 9\n4 16\n");
  CHECK(run({"check-gp", good}).code == kExitOk);
}

TEST_CASE("enumerate on the n=3 moment fixture") {
  Scratch tmp;
  const auto points = tmp.write("m3.txt", run({"gen", "--n", "3", "--seed", "0", "--moment", "1,2,3,4,5,6"}).out);
  const Run r = run({"enumerate", points, "--jobs", "2"});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["parity"] == "odd");
  CHECK(doc["count"].get<int>() % 2 == 1);
  bool found = false;
  for (const auto& p : doc["pairs"]) found = found || p == json::parse("[[1,3,5],[2,4,6]]");
  CHECK(found);

  CHECK(run({"enumerate", points, "--max-n", "2"}).code == kExitInvalidInput);
}

TEST_CASE("gen round-trips through files") {
  Scratch tmp;
  const auto out = tmp.path("gen.txt");
  CHECK(run({"gen", "--n", "3", "--seed", "7", "--bound", "50", "-o", out}).code == kExitOk);
  GenSpec spec;
  spec.n = 3;
  spec.seed = 7;
  spec.bound = 50;
  CHECK(read_point_file(out) == gen_random(spec));

  CHECK(run({"gen", "--n", "1", "--seed", "1", "--bound", "0"}).code == kExitInvalidInput);
  CHECK(run({"gen", "--n", "1", "--seed", "1", "--moment", "0,1,1,2"}).code == kExitInvalidInput);
  CHECK(run({"gen", "--n", "1", "--seed", "1", "--moment", "0,1,2"}).code == kExitInvalidInput);
  CHECK(run({"gen", "--n", "2", "--seed", "1", "--bound", "5", "--moment", "0,1,2,3,4"}).code == kExitInvalidInput);
}

TEST_CASE("find then verify, and tampering is caught") {
  Scratch tmp;
  for (int n = 1; n <= 5; ++n) {
    const auto points = tmp.write("p" + std::to_string(n) + ".txt",
                                  run({"gen", "--n", std::to_string(n), "--seed", std::to_string(n)}).out);
    const auto result = tmp.path("r" + std::to_string(n) + ".json");
    REQUIRE(run({"find", points, "-o", result}).code == kExitOk);
    CHECK(run({"verify", points, result}).code == kExitOk);

    json doc = json::parse(slurp(result));
    if (doc["case"] == "even") {
      doc["certificate"]["first"]["coefficients"][0] = "0";
    } else {
      doc["certificate"]["first_boundary"]["simplex"]["coefficients"][0] = "0";
    }
    const auto tampered = tmp.write("t" + std::to_string(n) + ".json", doc.dump());
    const Run bad = run({"verify", points, tampered});
    CHECK(bad.code == kExitVerificationFailed);
    CHECK(json::parse(bad.out)["verdict"] == "fail");
  }

  const auto points = tmp.write("a.txt", "1 4\n0\n1\n2\n3\n");
  const auto other = tmp.write("b.txt", "1 4\n0\n1\n2\n5\n");
  const auto result = tmp.path("a.json");
  REQUIRE(run({"find", points, "-o", result}).code == kExitOk);
  CHECK(run({"verify", other, result}).code == kExitVerificationFailed);

  const auto garbage = tmp.write("garbage.json", "{ not json");
  CHECK(run({"verify", points, garbage}).code == kExitInvalidInput);
}

TEST_CASE("usage errors and unreadable input") {
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  CHECK(run({"find", "/nonexistent/points.txt"}).code == kExitInvalidInput);
  CHECK(run({"--help"}).code == kExitOk);

  Scratch tmp;
  CHECK(run({"find", tmp.write("e.txt", "1 4\n0\n1\n2\nx\n")}).code == kExitInvalidInput);
}

TEST_CASE("the installed binary reports exit codes to the shell") {
  Scratch tmp;
  const auto bad = tmp.write("bad.txt", "2 5\n0 0\n1 1\n2 2\n3 -1\n-2 5\n");
  const auto good = tmp.write("good.txt", "1 4\n0\n1\n2\n3\n");
  const std::string cli = RADONLINK_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status(cli + " check-gp " + bad) == 2);
  CHECK(status(cli + " find " + good) == 0);
}
