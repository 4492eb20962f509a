#include <catch_amalgamated.hpp>

#include "simal/algebra.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/homomorphism.hpp"
#include "simal/reflection.hpp"
#include "simal/term.hpp"

using namespace simal;

namespace {

  Signature group_sig() {
    return Signature({{"add", 2}, {"neg", 1}, {"zero", 0}});
  }

  std::vector<std::vector<Elem>> zk_tables(unsigned k) {
    std::vector<Elem> add(k * k), neg(k);
    for (unsigned a = 0; a < k; ++a) {
      neg[a] = (k - a) % k;
      for (unsigned b = 0; b < k; ++b) {
        add[a * k + b] = (a + b) % k;
      }
    }
    return {add, neg, {0}};
  }

  Errc code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return Errc::parse_error;
  }

}  // namespace

TEST_CASE("Z4 with p = x - y + z is a valid Mal'tsev algebra") {
  auto z4 = FiniteAlgebra::make("Z4", group_sig(), 4, zk_tables(4), "add(add(x,neg(y)),z)");
  REQUIRE(z4->size() == 4);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      for (Elem z = 0; z < 4; ++z) {
        CHECK(z4->maltsev(x, y, z) == (x + 4 - y + z) % 4);
      }
    }
  }
  CHECK_FALSE(z4->maltsev_violation());
}

TEST_CASE("table entries out of range are rejected") {
  auto t = zk_tables(4);
  t[0][5] = 7;
  CHECK(code_of([&] { FiniteAlgebra::make("bad", group_sig(), 4, t, "add(add(x,neg(y)),z)"); })
        == Errc::malformed_table);
}

TEST_CASE("tables of the wrong length are rejected") {
  auto t = zk_tables(4);
  t[1].pop_back();
  CHECK(code_of([&] { FiniteAlgebra::make("bad", group_sig(), 4, t, "add(add(x,neg(y)),z)"); })
        == Errc::malformed_table);
}

TEST_CASE("a term that is not Mal'tsev is rejected") {
  CHECK(code_of([&] { FiniteAlgebra::make("Z4", group_sig(), 4, zk_tables(4), "add(x,z)"); })
        == Errc::not_maltsev);
  // a semilattice has no Mal'tsev term at all; x is tried here
  Signature         sl({{"meet", 2}});
  std::vector<Elem> meet = {0, 0, 0, 1};
  CHECK(code_of([&] { FiniteAlgebra::make("S", sl, 2, {meet}, "x"); }) == Errc::not_maltsev);
}

TEST_CASE("a term naming an unknown operation is rejected") {
  CHECK_THROWS_AS(
      FiniteAlgebra::make("Z4", group_sig(), 4, zk_tables(4), "sub(add(x,neg(y)),z)"), Error);
}

TEST_CASE("diamond Heyting algebra with the arithmetical term") {
  // subsets of {a, b} as bit masks
  Signature         sig({{"meet", 2}, {"join", 2}, {"imp", 2}, {"bot", 0}, {"top", 0}});
  std::vector<Elem> meet(16), join(16), imp(16);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      meet[x * 4 + y] = x & y;
      join[x * 4 + y] = x | y;
      imp[x * 4 + y]  = (~x | y) & 3u;
    }
  }
  auto d = FiniteAlgebra::make("diamond", sig, 4, {meet, join, imp, {0}, {3}},
                               "meet(join(x,z),imp(y,meet(x,z)))");
  size_t triples = 0;
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      CHECK(d->maltsev(x, y, y) == x);
      CHECK(d->maltsev(x, x, y) == y);
      triples += 4;
    }
  }
  CHECK(triples == 64);

  auto b4 = corpus::heyting_boolean(2);
  REQUIRE(b4->size() == 4);
  CHECK(same_signature(*b4, *d));
  // the generated one is isomorphic: some bijection carries every table
  CHECK(enumerate_homomorphisms(d, b4).size() >= 1);
  bool iso = false;
  for (auto const& h : enumerate_homomorphisms(d, b4)) {
    iso |= h.is_bijective();
  }
  CHECK(iso);
}

TEST_CASE("terms print back to their input") {
  for (std::string t : {"add(add(x,neg(y)),z)", "meet(join(x,z),imp(y,meet(x,z)))", "x"}) {
    CHECK(to_string(parse_term(t)) == t);
  }
  CHECK_THROWS(parse_term("add(x,"));
}

TEST_CASE("homomorphism checks") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  auto h  = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  CHECK(h.is_surjective());
  CHECK_FALSE(h.is_injective());
  CHECK(code_of([&] { Homomorphism::create(z4, z2, {0, 1, 1, 0}); }) == Errc::not_homomorphism);
  CHECK(code_of([&] { Homomorphism::create(z4, z2, {0, 1, 0}); }) == Errc::malformed_table);
  CHECK(code_of([&] { Homomorphism::create(z4, corpus::cyclic_group_mul(2), {0, 1, 0, 1}); })
        == Errc::signature_mismatch);

  // homomorphisms Z4 -> Z4 are x -> kx, k = 0..3
  CHECK(enumerate_homomorphisms(z4, z4).size() == 4);
  // S3 -> C2: trivial map and the sign
  CHECK(enumerate_homomorphisms(corpus::symmetric_group_3(), corpus::cyclic_group_mul(2)).size()
        == 2);
}
