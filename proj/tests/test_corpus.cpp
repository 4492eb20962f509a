#include <catch_amalgamated.hpp>

#include "simal/constructions.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/io.hpp"

#include <limits>

using namespace simal;

namespace {

  std::vector<size_t> sizes(SimplicialPtr const& x) {
    std::vector<size_t> s;
    for (auto const& l : x->levels()) {
      s.push_back(l->size());
    }
    return s;
  }

  std::string dump(corpus::Artifact const& a) {
    return std::visit([](auto const& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SimplicialMorphism>) {
        return io::to_json(v).dump();
      } else {
        return io::to_json(*v).dump();
      }
    }, a);
  }

}  // namespace

TEST_CASE("Rng follows the raw mt19937_64 stream") {
  corpus::Rng r(7);
  // first words of mt19937_64 seeded with 7, reduced mod 1000
  CHECK(r.below(1000) == 15);
  CHECK(r.below(1000) == 250);
  CHECK(r.below(1000) == 878);

  // the standard's check value: the 10000th word for the default seed
  corpus::Rng d(5489);
  std::uint64_t const max = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < 9999; ++i) {
    d.below(max);
  }
  CHECK(d.below(max) == 9981545732273789042ull);
}

TEST_CASE("the default corpus is deterministic") {
  auto a = corpus::default_corpus(corpus::Profile::desk, 7);
  auto b = corpus::default_corpus(corpus::Profile::desk, 7);
  REQUIRE(a.objects.size() == b.objects.size());
  REQUIRE(a.extensions.size() == b.extensions.size());
  for (size_t i = 0; i < a.objects.size(); ++i) {
    CHECK(a.objects[i].name == b.objects[i].name);
    CHECK(io::to_json(*a.objects[i].x) == io::to_json(*b.objects[i].x));
  }
  for (size_t i = 0; i < a.extensions.size(); ++i) {
    CHECK(a.extensions[i].name == b.extensions[i].name);
    CHECK(io::to_json(a.extensions[i].f) == io::to_json(b.extensions[i].f));
  }
  CHECK(a.extensions.size() >= 30);
}

TEST_CASE("corpus sizes") {
  auto c = corpus::default_corpus(corpus::Profile::desk, 7);
  CHECK(c.algebras.size() == 17);
  CHECK(sizes(c.object("N(Z6 mod <3>)").x) == std::vector<size_t>{6, 12, 24, 48});
  CHECK(sizes(c.object("N(Z6 mod <2>)").x) == std::vector<size_t>{6, 18, 54, 162});
  CHECK(sizes(c.object("N(pair Z3)").x) == std::vector<size_t>{3, 9, 27, 81});
  CHECK(sizes(c.object("N(A3 in S3)").x) == std::vector<size_t>{6, 18, 54, 162});
  CHECK(sizes(c.object("N(one-object Z3)").x) == std::vector<size_t>{1, 3, 9, 27});
  CHECK(sizes(c.object("Dec N(pair Z2)").x) == std::vector<size_t>{4, 8, 16, 32});
  CHECK_THROWS_AS(c.object("nope"), Error);

  auto deep = corpus::default_corpus(corpus::Profile::deep, 7);
  CHECK(deep.objects.size() > c.objects.size());
  CHECK(deep.extensions.size() > c.extensions.size());
}

TEST_CASE("every generator kind produces a valid artifact") {
  for (auto const& kind : corpus::generator_kinds()) {
    INFO(kind);
    corpus::GeneratorSpec spec{kind, {}, 7};
    auto                  a = corpus::generate(spec);
    CHECK(dump(a) == dump(corpus::generate(spec)));
    if (auto const* x = std::get_if<SimplicialPtr>(&a)) {
      CHECK_FALSE((*x)->check_identities());
    }
    if (auto const* f = std::get_if<SimplicialMorphism>(&a)) {
      CHECK_FALSE(f->commutation_failure());
      CHECK(f->levelwise_surjective());
    }
    if (auto const* al = std::get_if<AlgebraPtr>(&a)) {
      CHECK_FALSE((*al)->maltsev_violation());
    }
  }
  CHECK(corpus::generator_kinds().size() == 13);
}

TEST_CASE("generator parameters") {
  auto z = std::get<AlgebraPtr>(corpus::generate({"cyclic_group", {"4"}, 0}));
  CHECK(z->size() == 4);
  CHECK(z->maltsev_term() == "add(add(x,neg(y)),z)");

  auto n = std::get<SimplicialPtr>(corpus::generate({"congruence_nerve", {"6", "3", "3"}, 0}));
  CHECK(sizes(n) == std::vector<size_t>{6, 12, 24, 48});

  auto h = std::get<AlgebraPtr>(corpus::generate({"heyting_from_poset", {"chain", "2"}, 0}));
  CHECK(h->size() == 2);
  CHECK(std::get<AlgebraPtr>(corpus::generate({"heyting_from_poset", {"boolean", "3"}, 0}))
            ->size() == 8);

  for (auto const& bad : std::vector<corpus::GeneratorSpec>{
           {"no_such_kind", {}, 0},
           {"cyclic_group", {"four"}, 0},
           {"heyting_from_poset", {"tree"}, 0},
           {"crossed_module_groupoid", {"a5"}, 0}}) {
    INFO(bad.kind);
    try {
      corpus::generate(bad);
      FAIL("expected InvalidParameters");
    } catch (Error const& e) {
      CHECK(e.code() == Errc::invalid_parameters);
    }
  }
}

TEST_CASE("crossed module axioms are enforced") {
  auto c = corpus::a3_in_s3();
  // the boundary is no longer a homomorphism
  c.boundary.assign(c.t->size(), 0);
  c.boundary[1] = 3;
  try {
    corpus::crossed_module_groupoid(c);
    FAIL("expected InvalidParameters");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::invalid_parameters);
  }
}

TEST_CASE("Heyting algebras need a lattice with implication") {
  // two incomparable elements only
  std::vector<std::vector<bool>> anti = {{true, false}, {false, true}};
  CHECK_THROWS_AS(corpus::heyting_from_poset("anti", anti), Error);
  std::vector<std::vector<bool>> chain = {{true, true, true}, {false, true, true},
                                          {false, false, true}};
  CHECK(corpus::heyting_from_poset("c3", chain)->size() == 3);
}

TEST_CASE("random quotients depend only on the seed") {
  auto x = nerve(corpus::pair_groupoid(corpus::cyclic_group(3)), 3);
  corpus::Rng a(9), b(9);
  auto        f = corpus::random_quotient_extension(x, a);
  auto        g = corpus::random_quotient_extension(x, b);
  CHECK(io::to_json(f) == io::to_json(g));
  CHECK(f.levelwise_surjective());
}
