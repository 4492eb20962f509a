#include <catch_amalgamated.hpp>

#include "simal/constructions.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/reflection.hpp"
#include "support.hpp"

using namespace simal;

namespace {

  // X_1 = Z2 x Z2 over X_0 = Z2 with d0 = d1 = first projection.
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

  // S3 as the arrows of a graph on one object.
  SimplicialPtr one_object_graph(AlgebraPtr const& g, AlgebraPtr const& one) {
    std::vector<Elem> to_one(g->size(), 0);
    auto              d = Homomorphism::create(g, one, to_one);
    return make_graph("loops", one, g, d, d, Homomorphism::create(one, g, {0}));
  }

  // d_1(D_0 ^ D_2) straight from pairs of 2-simplices.
  oracle::Partition h1_oracle(SimplicialPtr const& x) {
    std::vector<std::pair<Elem, Elem>> pairs;
    size_t const                       n2 = x->level(2)->size();
    for (Elem a = 0; a < n2; ++a) {
      for (Elem b = 0; b < n2; ++b) {
        if (x->d(2, 0)(a) == x->d(2, 0)(b) && x->d(2, 2)(a) == x->d(2, 2)(b)) {
          pairs.push_back({x->d(2, 1)(a), x->d(2, 1)(b)});
        }
      }
    }
    return oracle::closure(pairs, x->level(1)->size());
  }

}  // namespace

TEST_CASE("groupoid recognition") {
  auto n = nerve(corpus::crossed_module_groupoid(corpus::z3_by_z2()), 3);
  auto r = is_internal_groupoid(n);
  CHECK(r.groupoid);
  CHECK(r.conditions_agree());

  auto c = is_internal_groupoid(coskeleton(fat_graph(), 3));
  CHECK_FALSE(c.groupoid);
  CHECK(c.conditions_agree());
  REQUIRE(c.failing_level);
  CHECK(c.witness.first != c.witness.second);

  corpus::Rng rng(5);
  for (int k = 0; k < 3; ++k) {
    auto q = corpus::random_quotient_extension(n, rng);
    CHECK(is_internal_groupoid(q.cod()).groupoid);
  }
}

TEST_CASE("h1 on nerves, coskeleta and Heyting objects") {
  auto n = nerve(corpus::crossed_module_groupoid(corpus::one_object(4)), 3);
  CHECK(h1(n).is_identity());
  CHECK(h1(n).blocks() == h1_oracle(n));

  auto c = coskeleton(fat_graph(), 3);
  CHECK(h1(c) == meet(face_kernel(c, 1, 0), face_kernel(c, 1, 1)));
  CHECK(h1(c).blocks() == h1_oracle(c));
  CHECK(h1_candidates(c).all_equal());

  auto corp = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& o : corp.objects) {
    if (o.x->level(0)->signature().find("imp") && o.x->max_level_size() <= 4096) {
      INFO(o.name);
      CHECK(h1(o.x) == meet(face_kernel(o.x, 1, 0), face_kernel(o.x, 1, 1)));
      CHECK(h1(o.x).blocks() == h1_oracle(o.x));
    }
  }
}

TEST_CASE("hn at level 2 is the join of the three meets") {
  auto corp = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& name : {"cosk(V4 => Z2)", "N(S3 mod A3)", "Sk1(Z2xZ4 => Z2)"}) {
    auto x = corp.object(name).x;
    auto d = [&](unsigned i) { return face_kernel(x, 2, i); };
    auto expected = join(join(meet(d(0), d(1)), meet(d(0), d(2))), meet(d(1), d(2)));
    CHECK(hn(x, 2) == expected);
  }
}

TEST_CASE("pi1 of a nerve is the groupoid itself") {
  auto g = corpus::crossed_module_groupoid(corpus::z3_by_z2());
  auto r = pi1(nerve(g, 3));
  CHECK(r.eta.levelwise_bijective());
  CHECK(r.pi1.x1->size() == g.x1->size());
  CHECK_FALSE(r.pi1.failure());
}

TEST_CASE("pi1 of the coskeleton of the fat graph is discrete on two objects") {
  auto r = pi1(coskeleton(fat_graph(), 3));
  CHECK(r.pi1.x0->size() == 2);
  CHECK(r.pi1.x1->size() == 2);
  CHECK(r.pi1.d0.is_bijective());
  CHECK(r.pi1.d1.is_bijective());
}

TEST_CASE("pi1 of a decalage is thin") {
  auto x = decalage(nerve(corpus::crossed_module_groupoid(corpus::one_object(4)), 4)).object;
  auto r = pi1(x);
  CHECK(r.pi1.x0->size() == 4);
  CHECK(r.pi1.x1->size() == 16);
  CHECK(meet(kernel_pair(r.pi1.d0), kernel_pair(r.pi1.d1)).is_identity());
  for (unsigned n = 1; n <= x->truncation(); ++n) {
    CHECK(kernel_pair(r.eta[n]) == r.h[n]);
  }
}

TEST_CASE("universal property of eta") {
  auto x = coskeleton(fat_graph(), 2);
  auto r = pi1(x);
  CHECK(universal_property_check(r, r.eta).factors);
  CHECK(universal_property_check(r, to_terminal(x)).factors);

  // every map into a groupoid nerve factors, and uniquely: the hom-sets agree
  auto y = nerve(corpus::pair_groupoid(corpus::cyclic_group(2)), 2);
  auto from_x = enumerate_simplicial_morphisms(x, y);
  auto from_n = enumerate_simplicial_morphisms(r.nerve, y);
  CHECK(from_x.size() == from_n.size());
  CHECK_FALSE(from_x.empty());
  for (auto const& f : from_x) {
    auto u = universal_property_check(r, f);
    CHECK(u.factors);
    REQUIRE(u.g);
    CHECK(compose(*u.g, r.eta).components() == f.components());
  }
}

TEST_CASE("graph reflection of an abelian graph changes nothing") {
  auto g = fat_graph();
  auto r = graph_reflection(g);
  CHECK(r.commutator.is_identity());
  CHECK(r.eta1.is_bijective());
  CHECK_FALSE(r.groupoid.failure());
}

TEST_CASE("graph reflection of S3 on one object is its abelianization") {
  auto s3 = corpus::symmetric_group_3();
  auto g  = one_object_graph(s3, corpus::cyclic_group_mul(1));
  auto r  = graph_reflection(g);
  CHECK(r.commutator == corpus::coset_congruence(s3, 1));
  CHECK(r.groupoid.x1->size() == 2);
  CHECK_FALSE(r.groupoid.failure());
  auto u  = underlying_graph(r.groupoid, "ab");
  auto to = SimplicialMorphism::create(g, u, {Homomorphism::identity(g->level(0)), r.eta1});
  CHECK(graph_factors(r, to));
}

TEST_CASE("commutator chain") {
  auto corp = corpus::default_corpus(corpus::Profile::desk, 7);
  for (auto const& name : {"N(A3 in S3)", "Sk1(V4 => Z2)", "cosk(V4 => Z2)"}) {
    INFO(name);
    auto c = commutator_chain_check(corp.object(name).x);
    CHECK(c.holds);
    CHECK(leq(std::vector<Congruence>{c.commutator}, std::vector<Congruence>{c.h1}));
    CHECK(leq(std::vector<Congruence>{c.h1}, std::vector<Congruence>{c.meet}));
  }
}

TEST_CASE("homomorphism enumeration respects the budget") {
  try {
    enumerate_homomorphisms(corpus::zk_module(2, 4), corpus::zk_module(2, 4), 10);
    FAIL("expected BudgetExceeded");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}
