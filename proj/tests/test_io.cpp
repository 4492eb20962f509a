#include <catch_amalgamated.hpp>

#include "simal/constructions.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/io.hpp"

#include <fstream>

using namespace simal;
using io::Json;
namespace fs = std::filesystem;

namespace {

  fs::path scratch(std::string const& leaf) {
    auto d = fs::temp_directory_path() / ("simal_io_" + leaf);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }

  Errc code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return Errc::property_violation;
  }

}  // namespace

TEST_CASE("algebras round trip") {
  for (auto const& a : {corpus::symmetric_group_3(), corpus::heyting_boolean(2),
                        corpus::zk_module(3, 2)}) {
    auto j = io::to_json(*a);
    auto b = io::algebra_from_json(j);
    CHECK(io::to_json(*b) == j);
    CHECK(io::detect(j) == io::DocKind::algebra);
  }
  // constants are one-element arrays, binary tables nest twice
  auto j = io::to_json(*corpus::cyclic_group(3));
  CHECK(j["operations"][2]["table"] == Json::array({0}));
  CHECK(j["operations"][0]["table"][1][2] == 0);
}

TEST_CASE("simplicial objects and morphisms round trip") {
  auto c = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& name : {"N(A3 in S3)", "cosk(V4 => Z2)", "const(H3)"}) {
    auto x = c.object(name).x;
    auto j = io::to_json(*x);
    CHECK(io::detect(j) == io::DocKind::simplicial);
    CHECK(io::to_json(*io::simplicial_from_json(j)) == j);
  }
  auto f = c.extensions.front().f;
  auto j = io::to_json(f);
  CHECK(io::detect(j) == io::DocKind::morphism);
  CHECK(io::to_json(io::morphism_from_json(j)) == j);
}

TEST_CASE("repeated algebra names are made unique") {
  // levels of a constant object share one algebra; distinct algebras with
  // one name get #2
  auto z2a = corpus::cyclic_group(2);
  auto z2b = corpus::cyclic_group(2);
  auto g   = make_graph("g", z2a, z2b, Homomorphism::create(z2b, z2a, {0, 1}),
                        Homomorphism::create(z2b, z2a, {0, 1}),
                        Homomorphism::create(z2a, z2b, {0, 1}));
  auto j   = io::to_json(*g);
  CHECK(j["levels"] == Json::array({"Z2", "Z2#2"}));
  CHECK(j["algebras"].size() == 2);
  CHECK(io::to_json(*io::simplicial_from_json(j)) == j);

  auto k = io::to_json(*constant_object(z2a, 2));
  CHECK(k["algebras"].size() == 1);
}

TEST_CASE("documents may refer to other files") {
  auto dir = scratch("refs");
  auto z2  = corpus::cyclic_group(2);
  io::write_json(dir / "z2.json", io::to_json(*z2));
  Json hom = {{"dom", "z2.json"}, {"cod", "z2.json"}, {"map", {0, 1}}};
  io::write_json(dir / "id.json", hom);
  CHECK(io::detect(hom) == io::DocKind::homomorphism);
  CHECK(io::homomorphism_from_json(hom, dir).is_bijective());

  Json x = {{"name", "pt"},
            {"truncation", 1},
            {"levels", {"z2.json", "z2.json"}},
            {"faces", Json::array({Json::array({"id.json", "id.json"})})},
            {"degeneracies", Json::array({Json::array({"id.json"})})}};
  io::take_files_read();
  auto s = io::simplicial_from_json(x, dir);
  CHECK(s->truncation() == 1);
  auto read = io::take_files_read();
  CHECK(std::find(read.begin(), read.end(), dir / "z2.json") != read.end());
  CHECK(std::find(read.begin(), read.end(), dir / "id.json") != read.end());
  CHECK(io::take_files_read().empty());
  fs::remove_all(dir);
}

TEST_CASE("malformed input is reported with its class") {
  auto dir = scratch("bad");
  CHECK(code_of([&] { io::read_json(dir / "missing.json"); }) == Errc::io_error);
  std::ofstream(dir / "broken.json") << "{\"name\": ";
  CHECK(code_of([&] { io::read_json(dir / "broken.json"); }) == Errc::parse_error);

  auto j = io::to_json(*corpus::cyclic_group(3));
  j.erase("operations");
  CHECK(code_of([&] { io::algebra_from_json(j); }) == Errc::parse_error);

  j = io::to_json(*corpus::cyclic_group(3));
  j["operations"][0]["table"][0][0] = -1;
  CHECK(code_of([&] { io::algebra_from_json(j); }) == Errc::malformed_table);

  j = io::to_json(*corpus::cyclic_group(3));
  j["operations"][2]["table"] = 0;
  CHECK(code_of([&] { io::algebra_from_json(j); }) == Errc::malformed_table);

  auto x = io::to_json(*corpus::congruence_nerve(
      corpus::coset_congruence(corpus::cyclic_group(4), 2), 2));
  std::swap(x["faces"][1][0], x["faces"][1][1]);
  CHECK(code_of([&] { io::simplicial_from_json(x); }) == Errc::identity_violated);

  CHECK(code_of([&] { io::detect(Json{{"what", 1}}); }) == Errc::parse_error);
  fs::remove_all(dir);
}

TEST_CASE("write_json creates parent directories") {
  auto dir = scratch("out");
  auto p   = dir / "a" / "b" / "c.json";
  io::write_json(p, Json{{"k", 1}});
  CHECK(io::read_json(p)["k"] == 1);
  fs::remove_all(dir);
}
