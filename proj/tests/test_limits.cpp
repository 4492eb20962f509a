#include <catch_amalgamated.hpp>

#include <set>

#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/limits.hpp"

using namespace simal;

namespace {

  // Filter the full product; the oracle for compatible_tuples.
  std::vector<std::vector<Elem>> brute_tuples(
      std::vector<size_t> const& sizes, std::vector<std::vector<Elem>> const& maps,
      std::vector<std::array<size_t, 4>> const& links) {  // left, map, right, map
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              t(sizes.size(), 0);
    while (true) {
      bool ok = true;
      for (auto const& l : links) {
        Elem a = maps[l[1]][t[l[0]]], b = maps[l[3]][t[l[2]]];
        ok &= a == b;
      }
      if (ok) {
        out.push_back(t);
      }
      size_t i = sizes.size();
      while (i > 0 && ++t[i - 1] == sizes[i - 1]) {
        t[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

}  // namespace

TEST_CASE("compatible tuples match product filtering") {
  corpus::Rng rng(5);
  for (int round = 0; round < 60; ++round) {
    size_t              w = 2 + rng.below(3);
    std::vector<size_t> sizes;
    for (size_t i = 0; i < w; ++i) {
      sizes.push_back(1 + rng.below(5));
    }
    // maps into a common set of 3 labels
    std::vector<std::vector<Elem>> maps;
    std::vector<std::array<size_t, 4>> links;
    std::vector<Homomorphism>          homs;  // unused carriers; raw maps only
    size_t nlinks = 1 + rng.below(3);
    for (size_t k = 0; k < nlinks; ++k) {
      size_t l = rng.below(w), r = rng.below(w);
      if (l == r) {
        continue;
      }
      std::vector<Elem> ml(sizes[l]), mr(sizes[r]);
      for (auto& x : ml) {
        x = static_cast<Elem>(rng.below(3));
      }
      for (auto& x : mr) {
        x = static_cast<Elem>(rng.below(3));
      }
      maps.push_back(ml);
      maps.push_back(mr);
      links.push_back({l, maps.size() - 2, r, maps.size() - 1});
    }
    // library constraints need homomorphisms; trusted maps into a 3-element
    // carrier are enough since only the map tables are read
    auto                        three = corpus::cyclic_group(3);
    std::vector<AlgebraPtr>     carriers;
    for (size_t i = 0; i < w; ++i) {
      carriers.push_back(corpus::cyclic_group(static_cast<unsigned>(sizes[i])));
    }
    std::vector<Homomorphism> hs;
    hs.reserve(maps.size());
    for (size_t m = 0; m < maps.size(); ++m) {
      size_t owner = m % 2 == 0 ? links[m / 2][0] : links[m / 2][2];
      hs.push_back(Homomorphism::trusted(carriers[owner], three, maps[m]));
    }
    std::vector<LinkConstraint> cons;
    for (size_t k = 0; k < links.size(); ++k) {
      cons.push_back({links[k][0], &hs[2 * k], links[k][2], &hs[2 * k + 1]});
    }
    auto got  = compatible_tuples(sizes, cons);
    auto want = brute_tuples(sizes, maps, links);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      CHECK(std::vector<Elem>(got[i], got[i] + w) == want[i]);
    }
  }
}

TEST_CASE("compatible tuples respect the budget") {
  std::vector<size_t> sizes(4, 10);
  CHECK_THROWS_AS(compatible_tuples(sizes, {}, 1000), Error);
  CHECK(compatible_tuples(sizes, {}, 10000).size() == 10000);
}

TEST_CASE("products and pullbacks") {
  auto z2 = corpus::cyclic_group(2);
  auto z4 = corpus::cyclic_group(4);

  auto p = product(z2, z2);
  REQUIRE(p->algebra->size() == 4);
  auto add = *p->algebra->signature().find("add");
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      Elem args[] = {a, b};
      Elem c      = p->algebra->apply(add, args);
      CHECK(p->tuple(c)[0] == (p->tuple(a)[0] + p->tuple(b)[0]) % 2);
      CHECK(p->tuple(c)[1] == (p->tuple(a)[1] + p->tuple(b)[1]) % 2);
    }
  }

  auto id = Homomorphism::identity(z4);
  auto d  = pullback(id, id);
  CHECK(d->algebra->size() == 4);
  CHECK(d->projections[0].is_bijective());
  for (Elem x = 0; x < 4; ++x) {
    CHECK(d->tuple(x)[0] == d->tuple(x)[1]);
  }

  // x mod 2 and (x + x/2) mod 2 are distinct surjections Z4 -> Z2 ... only
  // one surjection exists, so use Z4 -> Z2 against Z2 x Z2 -> Z2
  auto f   = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  auto pb  = pullback(f, f);
  CHECK(pb->algebra->size() == 8);
  auto v4  = corpus::zk_module(2, 2);
  auto g   = Homomorphism::create(v4, z2, {0, 1, 0, 1});
  auto pb2 = pullback(f, g);
  CHECK(pb2->algebra->size() == 8);
  std::set<std::pair<Elem, Elem>> seen;
  for (Elem x = 0; x < 8; ++x) {
    CHECK(f(pb2->tuple(x)[0]) == g(pb2->tuple(x)[1]));
    seen.insert({pb2->tuple(x)[0], pb2->tuple(x)[1]});
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("subalgebras") {
  auto z6 = corpus::cyclic_group(6);
  CHECK(subalgebra_generated(z6, {2}).algebra->size() == 3);
  CHECK(subalgebra_generated(z6, {}).algebra->size() == 1);
  CHECK(subalgebra_generated(z6, {2, 3}).algebra->size() == 6);
  auto h3 = corpus::heyting_chain(3);
  CHECK(subalgebra_generated(h3, {}).algebra->size() == 2);  // bot and top
}

TEST_CASE("finite limits of a span") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  auto f  = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  FiniteDiagram d{{z4, z4, z2}, {{0, 2, f}, {1, 2, f}}};
  auto          l = finite_limit(d);
  CHECK(l->algebra->size() == 8);
}
