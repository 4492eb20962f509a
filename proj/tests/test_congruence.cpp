#include <catch_amalgamated.hpp>

#include "simal/commutator.hpp"
#include "simal/congruence.hpp"
#include "simal/corpus.hpp"
#include "simal/error.hpp"
#include "simal/limits.hpp"
#include "simal/reflection.hpp"
#include "simal/squares.hpp"
#include "support.hpp"

using namespace simal;

namespace {

  std::vector<oracle::Partition> library_lattice(AlgebraPtr const& a) {
    std::vector<oracle::Partition> out;
    for (auto const& c : corpus::enumerate_congruences(a)) {
      out.push_back(c.blocks());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("congruence lattices agree with brute-force partition search") {
  // sizes frozen from the partition oracle
  struct Case {
    AlgebraPtr a;
    size_t     count;
  };
  std::vector<Case> cases = {
      {corpus::cyclic_group(4), 3},       {corpus::zk_module(2, 2), 5},
      {corpus::cyclic_group(6), 4},       {corpus::cyclic_group(5), 2},
      {corpus::symmetric_group_3(), 3},   {corpus::dihedral_group(4), 6},
      {corpus::heyting_chain(3), 3},      {corpus::heyting_boolean(2), 4},
      {corpus::cyclic_group_mul(2), 2},
  };
  for (auto const& c : cases) {
    INFO(c.a->name());
    auto brute = oracle::all_congruences(c.a);
    CHECK(brute.size() == c.count);
    CHECK(library_lattice(c.a) == brute);
  }
}

TEST_CASE("join on Z6 of mod <2> and mod <3> is everything") {
  auto z6 = corpus::cyclic_group(6);
  auto a  = corpus::coset_congruence(z6, 2);
  auto b  = corpus::coset_congruence(z6, 3);
  CHECK(a.num_blocks() == 2);
  CHECK(b.num_blocks() == 3);
  CHECK(join(a, b).is_all());
  CHECK(meet(a, b).is_identity());
}

TEST_CASE("lattice unit laws") {
  for (auto const& a : {corpus::dihedral_group(4), corpus::heyting_boolean(2)}) {
    auto delta = Congruence::identity(a);
    auto nabla = Congruence::all(a);
    for (auto const& t : corpus::enumerate_congruences(a)) {
      CHECK(meet(t, delta) == delta);
      CHECK(join(t, delta) == t);
      CHECK(meet(t, nabla) == t);
      CHECK(join(t, nabla) == nabla);
    }
  }
}

TEST_CASE("joins are relational composites equal to the transitive closure") {
  corpus::Rng rng(11);
  for (auto const& a : {corpus::dihedral_group(4), corpus::symmetric_group_3(),
                        corpus::zk_module(2, 3), corpus::heyting_chain(4)}) {
    auto cons = corpus::enumerate_congruences(a);
    for (int k = 0; k < 40; ++k) {
      auto const& s = cons[rng.below(cons.size())];
      auto const& t = cons[rng.below(cons.size())];
      auto        u = oracle::pairs_of(s.blocks());
      auto        v = oracle::pairs_of(t.blocks());
      u.insert(u.end(), v.begin(), v.end());
      CHECK(join(s, t).blocks() == oracle::closure(u, a->size()));
      CHECK(join(s, t) == join(t, s));
    }
  }
}

TEST_CASE("generated congruences match the fixpoint oracle") {
  corpus::Rng rng(3);
  for (auto const& a : {corpus::dihedral_group(4), corpus::heyting_boolean(2),
                        corpus::cyclic_group(6)}) {
    for (int k = 0; k < 20; ++k) {
      Elem x = static_cast<Elem>(rng.below(a->size()));
      Elem y = static_cast<Elem>(rng.below(a->size()));
      CHECK(Congruence::generated(a, {{x, y}}).blocks() == oracle::generated(a, {{x, y}}));
    }
  }
}

TEST_CASE("builder records merging unions only") {
  auto              z4 = corpus::cyclic_group(4);
  CongruenceBuilder b(z4);
  b.add(0, 2);
  auto first = b.take_new_unions();
  CHECK_FALSE(first.empty());
  b.add(1, 3);  // already forced by translation
  CHECK(b.take_new_unions().empty());
  CHECK(b.result() == corpus::coset_congruence(z4, 2));
}

TEST_CASE("kernel pairs") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  auto f  = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  CHECK(kernel_pair(f).blocks() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(kernel_pair(Homomorphism::identity(z4)).is_identity());

  auto s3   = corpus::symmetric_group_3();
  auto c2   = corpus::cyclic_group_mul(2);
  auto homs = enumerate_homomorphisms(s3, c2);
  for (auto const& h : homs) {
    if (!h.is_surjective()) {
      continue;
    }
    auto kp = kernel_pair(h);
    CHECK(kp.num_blocks() == 2);
    for (auto const& cls : kp.classes()) {
      CHECK(cls.size() == 3);
    }
    CHECK(kp == corpus::coset_congruence(s3, 1));  // 1 is a rotation
  }
}

TEST_CASE("direct images") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  auto f  = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  auto m2 = corpus::coset_congruence(z4, 2);
  CHECK(image_congruence(Homomorphism::identity(z4), m2) == m2);
  CHECK(image_congruence(f, Congruence::identity(z4)).is_identity());
  CHECK(image_congruence(f, m2).is_identity());
  CHECK(image_congruence(f, Congruence::all(z4)).is_all());

  auto inc = Homomorphism::create(z2, z4, {0, 2});
  try {
    image_congruence(inc, Congruence::all(z2));
    FAIL("expected NotSurjective");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::not_surjective);
  }
}

TEST_CASE("inverse images") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  auto f  = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  CHECK(preimage_congruence(f, Congruence::identity(z2)) == kernel_pair(f));
  CHECK(preimage_congruence(f, Congruence::all(z2)).is_all());
}

TEST_CASE("quotients") {
  auto z4 = corpus::cyclic_group(4);
  CHECK(quotient(z4, Congruence::identity(z4)).projection.is_bijective());
  CHECK(quotient(z4, Congruence::all(z4)).algebra->size() == 1);
  auto q = quotient(z4, corpus::coset_congruence(z4, 2));
  REQUIRE(q.algebra->size() == 2);
  CHECK(kernel_pair(q.projection) == corpus::coset_congruence(z4, 2));
  // the quotient is Z2: 1 + 1 = 0
  auto add = *q.algebra->signature().find("add");
  Elem one = q.projection(1);
  Elem two[] = {one, one};
  CHECK(q.algebra->apply(add, two) == q.projection(0));
}

TEST_CASE("term-condition commutator against the definition") {
  for (auto const& a : {corpus::symmetric_group_3(), corpus::cyclic_group(4),
                        corpus::zk_module(2, 2), corpus::heyting_chain(3),
                        corpus::heyting_boolean(2)}) {
    auto cons = corpus::enumerate_congruences(a);
    for (auto const& s : cons) {
      for (auto const& t : cons) {
        INFO(a->name() << " " << s.num_blocks() << " " << t.num_blocks());
        CHECK(tc_commutator(s, t).blocks() == oracle::tc_commutator(a, s.blocks(), t.blocks()));
      }
    }
  }
}

TEST_CASE("commutator examples") {
  auto s3 = corpus::symmetric_group_3();
  CHECK(tc_commutator(Congruence::all(s3), Congruence::all(s3))
        == corpus::coset_congruence(s3, 1));
  for (auto const& a : {corpus::zk_module(3, 2), corpus::cyclic_group(6)}) {
    CHECK(tc_commutator(Congruence::all(a), Congruence::all(a)).is_identity());
  }
  for (auto const& t : corpus::enumerate_congruences(s3)) {
    CHECK(tc_commutator(Congruence::identity(s3), t).is_identity());
  }
  // in D4 the derived subgroup is the centre {1, r^2}
  auto d4 = corpus::dihedral_group(4);
  CHECK(tc_commutator(Congruence::all(d4), Congruence::all(d4))
        == corpus::coset_congruence(d4, 2));
  // arithmetical: the commutator is the meet
  auto h3 = corpus::heyting_chain(3);
  for (auto const& s : corpus::enumerate_congruences(h3)) {
    for (auto const& t : corpus::enumerate_congruences(h3)) {
      CHECK(tc_commutator(s, t) == meet(s, t));
    }
  }
}

TEST_CASE("double extensions") {
  auto z4  = corpus::cyclic_group(4);
  auto z2  = corpus::cyclic_group(2);
  auto one = corpus::cyclic_group(1);
  auto id4 = Homomorphism::identity(z4);
  CHECK(is_double_extension(id4, id4, id4, id4).holds());

  // downward split square: Z4 x Z2 over Z4 and Z2 with sections
  auto f   = Homomorphism::create(z4, z2, {0, 1, 0, 1});
  auto to1 = Homomorphism::create(z2, one, {0, 0});
  auto rep = is_double_extension(f, f, Homomorphism::identity(z2), Homomorphism::identity(z2));
  CHECK(rep.holds());
  CHECK(rep.image_criterion);

  // Z4 -> Z2 x Z2 over the point misses (0,1) and (1,0)
  rep = is_double_extension(f, f, to1, to1);
  CHECK_FALSE(rep.holds());
  CHECK_FALSE(rep.image_criterion);
  CHECK(rep.pullback_size == 4);
  CHECK(rep.comparison_image == 2);

  // product projections always give a double extension
  auto p   = product(z2, z2);
  auto rep2 = is_double_extension(p->projections[0], p->projections[1], to1, to1);
  CHECK(rep2.holds());
  CHECK(rep2.image_criterion);

  try {
    is_double_extension(f, f, Homomorphism::identity(z2), Homomorphism::create(z2, z2, {0, 0}));
    FAIL("expected NotRegularEpi");
  } catch (Error const& e) {
    CHECK((e.code() == Errc::not_regular_epi || e.code() == Errc::not_commuting));
  }
}
