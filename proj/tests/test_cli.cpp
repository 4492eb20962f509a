#include <catch_amalgamated.hpp>

#include "simal/error.hpp"
#include "simal/io.hpp"
#include "simal/report.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace simal;
using io::Json;
namespace fs = std::filesystem;

namespace {

  fs::path const& dir() {
    static fs::path const d = [] {
      auto p = fs::temp_directory_path() / "simal_cli";
      fs::remove_all(p);
      fs::create_directories(p);
      return p;
    }();
    return d;
  }

  int run(std::string const& args, std::string const& env = "") {
    std::string cmd = env + " " + SIMAL_BINARY + " " + args + " > " +
                      (dir() / "stdout.txt").string() + " 2> " + (dir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
  }

  std::string slurp(fs::path const& p) {
    std::ifstream     in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string path(std::string const& leaf) {
    return (dir() / leaf).string();
  }

}  // namespace

TEST_CASE("sha256 matches the standard test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("generate, validate and classify") {
  REQUIRE(run("--out " + path("pair.json") + " gen pair_groupoid 2 2") == 0);
  REQUIRE(run("--out " + path("quot.json") + " gen quotient_extension") == 0);
  auto x = io::read_json(path("pair.json"));
  CHECK(x["generator"]["kind"] == "pair_groupoid");

  CHECK(run("--json validate " + path("pair.json")) == 0);
  auto rep = Json::parse(slurp(dir() / "stdout.txt"));
  CHECK(rep["command"] == "validate");
  REQUIRE(rep["inputs"].size() == 1);
  CHECK(rep["inputs"][0]["sha256"] == sha256_hex(slurp(path("pair.json"))));

  CHECK(run("--out " + path("c1.json") + " classify " + path("quot.json")) == 0);
  CHECK(run("--out " + path("c2.json") + " classify " + path("quot.json")) == 0);
  auto a = io::read_json(path("c1.json"));
  auto b = io::read_json(path("c2.json"));
  CHECK(a["determinism_hash"] == b["determinism_hash"]);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("every analysis subcommand runs on a nerve") {
  REQUIRE(run("--out " + path("n.json") + " gen crossed_module_groupoid z3_by_z2 2") == 0);
  for (std::string cmd : {std::string("groupoid-check"), std::string("commutators"), std::string("kan"),
                          "--out " + path("r") + " reflect"}) {
    INFO(cmd);
    CHECK(run(cmd + " " + path("n.json")) == 0);
  }
  CHECK(fs::exists(dir() / "r" / "groupoid.json"));
  CHECK(run("--out " + path("c3.json") + " cosk --level 3 " + path("n.json")) == 0);
  CHECK(io::read_json(path("c3.json"))["truncation"] == 3);
  REQUIRE(run("--out " + path("q.json") + " gen quotient_extension 'N(pair Z2)'") == 0);
  CHECK(run("factorize --mode em " + path("q.json")) == 0);
  CHECK(run("factorize --mode ml " + path("q.json")) == 0);
}

TEST_CASE("exit codes by error class") {
  CHECK(run("validate " + path("does-not-exist.json")) == 1);
  CHECK(run("gen no_such_kind") == 1);
  CHECK(run("") == 1);
  std::ofstream(path("junk.json")) << "{ not json";
  CHECK(run("validate " + path("junk.json")) == 1);

  REQUIRE(run("--out " + path("big.json") + " gen pair_groupoid 3 3") == 0);
  CHECK(run("kan " + path("big.json"), "SIMAL_BUDGET=10") == 3);
}

TEST_CASE("a property violation maps to exit code 2") {
  RunReport r("test");
  CHECK(r.exit_code() == 0);
  r.violation("h1 triple", "candidates differ");
  CHECK(r.exit_code() == 2);
  CHECK(r.to_json()["violations"].size() == 1);

  RunReport e("test");
  e.set_error(Error(Errc::homotopy_mismatch, "x"));
  CHECK(e.exit_code() == 2);
  RunReport l("test");
  l.set_error(Error(Errc::level_too_large, "x"));
  CHECK(l.exit_code() == 3);
  RunReport p("test");
  p.set_error(Error(Errc::parse_error, "x"));
  CHECK(p.exit_code() == 1);
}
