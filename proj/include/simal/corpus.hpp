#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "simal/algebra.hpp"
#include "simal/congruence.hpp"
#include "simal/groupoid.hpp"
#include "simal/simplicial.hpp"

namespace simal::corpus {

  // Z_k over add/neg/zero.
  AlgebraPtr cyclic_group(unsigned k);

  // (Z_k)^rank over add/neg/zero; elements are base-k digit strings.
  AlgebraPtr zk_module(unsigned k, unsigned rank);

  // Group from a multiplication table over mul/inv/e.  Throws
  // InvalidParameters if the table is not a group.
  AlgebraPtr make_group(std::string name, std::vector<std::vector<Elem>> const& mul);

  // Z_k over mul/inv/e.
  AlgebraPtr cyclic_group_mul(unsigned k);

  // Symmetries of the n-gon, r^i t^j stored at i + n j.
  AlgebraPtr dihedral_group(unsigned n);
  AlgebraPtr symmetric_group_3();

  // Heyting algebra over meet/join/imp/bot/top from a partial order given by
  // its relation matrix.  Throws InvalidParameters unless the order is a
  // lattice with an implication.
  AlgebraPtr heyting_from_poset(std::string name, std::vector<std::vector<bool>> const& leq);
  AlgebraPtr heyting_chain(unsigned k);
  // Subsets of an atoms-element set.
  AlgebraPtr heyting_boolean(unsigned atoms);

  // The complete congruence lattice: principal congruences closed under join.
  // Sorted by number of classes, descending, then by block array.
  std::vector<Congruence> enumerate_congruences(AlgebraPtr const& a, size_t budget = 20000);

  // The congruence of a group or module whose classes are cosets of the
  // subalgebra generated by g.
  Congruence coset_congruence(AlgebraPtr const& a, Elem g);

  // Equivalence relation theta as a groupoid; the arrow (a, b) goes from a
  // to b.
  InternalGroupoid congruence_groupoid(Congruence const& theta);
  InternalGroupoid pair_groupoid(AlgebraPtr const& a);
  InternalGroupoid discrete_groupoid(AlgebraPtr const& a);

  // Groups t, g over one signature, boundary t -> g and an action of g on t
  // by automorphisms, action[g][x].
  struct CrossedModule {
    AlgebraPtr                     t;
    AlgebraPtr                     g;
    std::vector<Elem>              boundary;
    std::vector<std::vector<Elem>> action;
  };

  CrossedModule a3_in_s3();
  CrossedModule z3_by_z2();  // inversion action, trivial boundary
  CrossedModule one_object(unsigned k);

  // X_1 = t x| g at t |g| + g, d0 (t, g) = g, d1 (t, g) = bd(t) g, s0 g = (1, g).
  // Throws InvalidParameters with the violated axiom.
  InternalGroupoid crossed_module_groupoid(CrossedModule const& c);

  SimplicialPtr congruence_nerve(Congruence const& theta, unsigned level);

  // Deterministic stream for corpus choices; the raw 64-bit words of
  // mt19937_64 are reduced by modulus so output does not depend on the
  // standard library's distributions.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _gen(seed) {}
    std::uint64_t below(std::uint64_t n) {
      return _gen() % n;
    }

   private:
    std::mt19937_64 _gen;
  };

  // Projection onto the quotient by the simplicial congruence generated by
  // one pair of elements at a random level.
  SimplicialMorphism random_quotient_extension(SimplicialPtr const& x, Rng& rng);

  SimplicialMorphism product_projection(SimplicialPtr const& x, SimplicialPtr const& y);

  enum class Profile { desk, deep };

  Profile parse_profile(std::string const& text);

  struct Object {
    std::string   name;
    SimplicialPtr x;
    bool          nerve = false;  // built as the nerve of a groupoid
  };

  struct Extension {
    std::string        name;
    SimplicialMorphism f;
  };

  struct Corpus {
    Profile                 profile = Profile::desk;
    std::uint64_t           seed    = 0;
    std::vector<AlgebraPtr> algebras;
    std::vector<Object>     objects;
    std::vector<Extension>  extensions;
    // Small groupoid nerves (levels of at most 4 elements), truncation 2.
    std::vector<Object> small_nerves;

    Object const& object(std::string const& name) const;
  };

  Corpus default_corpus(Profile profile, std::uint64_t seed);

  struct GeneratorSpec {
    std::string              kind;
    std::vector<std::string> params;
    std::uint64_t            seed = 0;
  };

  using Artifact = std::variant<AlgebraPtr, SimplicialPtr, SimplicialMorphism>;

  std::vector<std::string> generator_kinds();

  // Throws InvalidParameters for an unknown kind or bad parameters.
  Artifact generate(GeneratorSpec const& spec);

}  // namespace simal::corpus
