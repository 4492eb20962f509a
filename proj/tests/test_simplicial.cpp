#include <catch_amalgamated.hpp>

#include "simal/constructions.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/kan.hpp"
#include "simal/squares.hpp"

#include <set>

using namespace simal;

namespace {

  std::vector<size_t> sizes(SimplicialPtr const& x) {
    std::vector<size_t> s;
    for (auto const& l : x->levels()) {
      s.push_back(l->size());
    }
    return s;
  }

  // X_1 = Z2 x Z2 over X_0 = Z2 with d0 = d1 = first projection and
  // s0 x = (x, 0).
  SimplicialPtr fat_graph() {
    auto z2 = corpus::cyclic_group(2);
    auto p  = product(z2, z2);
    std::vector<Elem> s0(2);
    for (Elem x = 0; x < 2; ++x) {
      s0[x] = static_cast<Elem>(p->find(std::vector<Elem>{x, 0}));
    }
    auto pi = p->projections[0];
    return make_graph("fat", z2, p->algebra, pi, pi, Homomorphism::create(z2, p->algebra, s0));
  }

  SimplicialPtr trivial_graph(AlgebraPtr const& a) {
    auto id = Homomorphism::identity(a);
    return make_graph("trivial", a, a, id, id, id);
  }

}  // namespace

TEST_CASE("constant objects validate") {
  auto x = constant_object(corpus::symmetric_group_3(), 3);
  CHECK(sizes(x) == std::vector<size_t>{6, 6, 6, 6});
  CHECK_FALSE(x->check_identities());
}

TEST_CASE("swapping d0 and d1 breaks the identities") {
  auto z4 = corpus::cyclic_group(4);
  auto x  = corpus::congruence_nerve(corpus::coset_congruence(z4, 2), 2);
  auto faces        = x->faces();
  std::swap(faces[1][0], faces[1][1]);
  try {
    TruncatedSimplicialAlgebra::make("swapped", x->levels(), faces, x->degeneracies());
    FAIL("expected IdentityViolated");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::identity_violated);
  }
}

TEST_CASE("nerves re-validate") {
  auto g = corpus::crossed_module_groupoid(corpus::a3_in_s3());
  auto x = nerve(g, 3);
  CHECK_FALSE(x->check_identities());
  CHECK_NOTHROW(TruncatedSimplicialAlgebra::make("copy", x->levels(), x->faces(),
                                                 x->degeneracies()));
}

TEST_CASE("simplicial kernels") {
  auto a = corpus::cyclic_group(3);
  CHECK(simplicial_kernel(constant_object(a, 2), 2).limit->algebra->size() == 3);

  auto pair = nerve(corpus::pair_groupoid(corpus::cyclic_group(2)), 2);
  auto k2   = simplicial_kernel(pair, 2);
  CHECK(k2.limit->algebra->size() == 8);
  REQUIRE(k2.comparison);
  CHECK(k2.comparison->is_surjective());

  // brute force over X_1^3 for the fat graph
  auto   g     = fat_graph();
  size_t count = 0;
  size_t n1    = g->level(1)->size();
  for (Elem a0 = 0; a0 < n1; ++a0) {
    for (Elem a1 = 0; a1 < n1; ++a1) {
      for (Elem a2 = 0; a2 < n1; ++a2) {
        Elem x[] = {a0, a1, a2};
        bool ok  = true;
        for (unsigned i = 0; i < 3; ++i) {
          for (unsigned j = i + 1; j < 3; ++j) {
            ok &= g->d(1, i)(x[j]) == g->d(1, j - 1)(x[i]);
          }
        }
        count += ok;
      }
    }
  }
  CHECK(count == 16);
  CHECK(simplicial_kernel(g, 2).limit->algebra->size() == count);
  CHECK(coskeleton(g, 2)->level(2)->size() == count);
}

TEST_CASE("groupoid nerves are exact from level 2 on") {
  // kappa_2 onto forces D0 ^ D1 = H1 = Delta on X_1, so only the thin
  // groupoids (equivalence relations) are exact at X_1
  struct Case {
    InternalGroupoid g;
    bool             thin;
  };
  std::vector<Case> cases = {
      {corpus::pair_groupoid(corpus::cyclic_group(3)), true},
      {corpus::congruence_groupoid(corpus::coset_congruence(corpus::dihedral_group(4), 2)), true},
      {corpus::crossed_module_groupoid(corpus::a3_in_s3()), true},
      {corpus::crossed_module_groupoid(corpus::z3_by_z2()), false},
      {corpus::crossed_module_groupoid(corpus::one_object(4)), false},
  };
  for (auto const& c : cases) {
    auto x = nerve(c.g, 3);
    CHECK(exactness_check(x, 2) == c.thin);
    CHECK(exactness_check(x, 3));
  }
}

TEST_CASE("every corpus object is Kan and every surjection a Kan fibration") {
  auto c = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& o : c.objects) {
    if (o.x->max_level_size() > 1000) {
      continue;
    }
    INFO(o.name);
    CHECK(kan_check(o.x).holds());
  }
  for (auto const& e : c.extensions) {
    if (e.f.dom()->max_level_size() > 1000) {
      continue;
    }
    INFO(e.name);
    CHECK(kan_fibration_check(e.f).holds());
  }
  auto id = SimplicialMorphism::identity(c.object("N(pair Z3)").x);
  auto k  = kan_fibration_check(id);
  for (auto const& e : k.entries) {
    CHECK(e.bijective);
  }
}

TEST_CASE("face squares are double extensions") {
  auto c = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& name : {"N(S3 mod A3)", "cosk(V4 => Z2)", "Sk1(Z2xZ4 => Z2)"}) {
    auto x = c.object(name).x;
    for (unsigned n = 2; n <= x->truncation(); ++n) {
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          auto r = is_double_extension(x->d(n, j), x->d(n, i), x->d(n - 1, i), x->d(n - 1, j - 1));
          CHECK(r.holds());
          CHECK(r.image_criterion);
        }
      }
    }
  }
}

TEST_CASE("decalage") {
  auto a = corpus::cyclic_group(3);
  auto d = decalage(constant_object(a, 3));
  CHECK(sizes(d.object) == std::vector<size_t>{3, 3, 3});
  for (auto const& c : d.counit.components()) {
    CHECK(c.is_bijective());
  }

  auto x  = nerve(corpus::crossed_module_groupoid(corpus::one_object(4)), 4);
  auto dz = decalage(x);
  CHECK(sizes(dz.object) == std::vector<size_t>{4, 16, 64, 256});
  CHECK(dz.counit.levelwise_surjective());
  CHECK(kan_fibration_check(dz.counit).holds());
  CHECK(exactness_check(dz.object, 2));
  CHECK(exactness_check(dz.object, 3));
}

TEST_CASE("coskeleta") {
  // equivalence relations are 1-coskeletal
  auto theta = corpus::coset_congruence(corpus::cyclic_group(6), 3);
  auto n     = corpus::congruence_nerve(theta, 3);
  auto c     = coskeleton(truncate(n, 1), 3);
  CHECK(sizes(c) == sizes(n));
  CHECK(coskeleton_comparison(n, 1).levelwise_bijective());

  auto triv = coskeleton(trivial_graph(corpus::cyclic_group(4)), 3);
  CHECK(sizes(triv) == std::vector<size_t>{4, 4, 4, 4});

  auto cg = coskeleton(fat_graph(), 3);
  CHECK(exactness_check(cg, 2));
  CHECK(exactness_check(cg, 3));

  // groupoid nerves are 2-coskeletal; 1-coskeletal only when thin, as for
  // the injective boundary A3 -> S3
  auto cm = nerve(corpus::crossed_module_groupoid(corpus::a3_in_s3()), 3);
  CHECK(coskeleton_comparison(cm, 2).levelwise_bijective());
  CHECK(coskeleton_comparison(cm, 1).levelwise_bijective());
  auto zz = nerve(corpus::crossed_module_groupoid(corpus::z3_by_z2()), 3);
  CHECK(coskeleton_comparison(zz, 2).levelwise_bijective());
  CHECK_FALSE(coskeleton_comparison(zz, 1).levelwise_bijective());
}

TEST_CASE("nerves of discrete and pair groupoids") {
  auto a = corpus::cyclic_group(4);
  auto d = nerve(corpus::discrete_groupoid(a), 3);
  CHECK(sizes(d) == std::vector<size_t>{4, 4, 4, 4});
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(d->d(n, i).is_bijective());
    }
  }
  auto p = nerve(corpus::pair_groupoid(corpus::cyclic_group(2)), 3);
  CHECK(sizes(p) == std::vector<size_t>{2, 4, 8, 16});
}

TEST_CASE("Sk1 over modules") {
  // point graph: level 2 is X1 + X1 with faces (a,b) -> a, a + b, b
  auto z3  = corpus::cyclic_group(3);
  auto one = corpus::cyclic_group(1);
  auto pt  = make_graph("pt", one, z3, Homomorphism::create(z3, one, {0, 0, 0}),
                        Homomorphism::create(z3, one, {0, 0, 0}),
                        Homomorphism::create(one, z3, {0}));
  auto s   = sk1_module_variety(pt);
  REQUIRE(s->level(2)->size() == 9);
  auto add = *z3->signature().find("add");
  std::set<std::pair<Elem, Elem>> outer;
  for (Elem e = 0; e < 9; ++e) {
    Elem ends[] = {s->d(2, 0)(e), s->d(2, 2)(e)};
    CHECK(s->d(2, 1)(e) == z3->apply(add, ends));
    outer.insert({ends[0], ends[1]});
  }
  CHECK(outer.size() == 9);

  CHECK(sizes(sk1_module_variety(trivial_graph(z3))) == std::vector<size_t>{3, 3, 3});

  auto g = fat_graph();
  CHECK(sk1_module_variety(g)->level(2)->size() == 8);

  auto s3 = corpus::symmetric_group_3();
  try {
    sk1_module_variety(trivial_graph(s3));
    FAIL("expected UnsupportedVariety");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::unsupported_variety);
  }
}

TEST_CASE("simplicial congruences and quotients") {
  auto c = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& e : c.extensions) {
    if (e.f.dom()->max_level_size() > 500) {
      continue;
    }
    auto kp = kernel_pairs(e.f);
    CHECK(is_simplicial_congruence(e.f.dom(), kp));
    auto q = levelwise_quotient(e.f.dom(), kp);
    for (unsigned n = 0; n <= e.f.truncation(); ++n) {
      CHECK(q.object->level(n)->size() == e.f.cod()->level(n)->size());
    }
    auto m = induced_map(q, e.f);
    CHECK(m.levelwise_bijective());
  }
}
