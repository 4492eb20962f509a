#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simal/congruence.hpp"
#include "simal/constructions.hpp"
#include "simal/groupoid.hpp"
#include "simal/simplicial.hpp"

namespace simal {

  // D_i on X_n.
  Congruence face_kernel(SimplicialPtr const& x, unsigned n, unsigned i);

  struct GroupoidLevel {
    unsigned n;
    bool     all_pairs_trivial;   // D_i ^ D_j = Delta for all i < j
    bool     outer_pair_trivial;  // D_0 ^ D_n = Delta
    bool     some_pair_trivial;   // D_i ^ D_j = Delta for some i < j
    bool     square_is_pullback;  // <d_0, d_n> onto X_{n-1} x_{X_{n-2}} X_{n-1}
  };

  struct GroupoidCheck {
    bool                       groupoid = true;
    std::optional<unsigned>    failing_level;
    std::pair<Elem, Elem>      witness{0, 0};  // distinct, same d_0 and d_n
    std::vector<GroupoidLevel> levels;

    bool conditions_agree() const;
  };

  GroupoidCheck is_internal_groupoid(SimplicialPtr const& x);

  // d_0(D_1 ^ D_2), d_1(D_0 ^ D_2), d_2(D_0 ^ D_1) on X_1.
  struct H1Candidates {
    Congruence via_d0;
    Congruence via_d1;
    Congruence via_d2;

    bool all_equal() const {
      return via_d0 == via_d1 && via_d1 == via_d2;
    }
  };

  H1Candidates h1_candidates(SimplicialPtr const& x);

  // d_1(D_0 ^ D_2).  With truncation at least 3 the other two candidates
  // must agree, otherwise TripleEqualityViolated.
  Congruence h1(SimplicialPtr const& x);

  // Join of D_i ^ D_j over 0 <= i < j <= n.
  Congruence hn(SimplicialPtr const& x, unsigned n);

  struct ReflectionResult {
    InternalGroupoid        pi1;
    SimplicialPtr           nerve;  // nerve of pi1 up to the truncation of X
    std::vector<LimitPtr>   paths;
    SimplicialMorphism      eta;
    std::vector<Congruence> h;  // h[n] = Eq[eta_n]
  };

  // Quotient X_1 / H_1 with composition solved through eta_2.  Asserts that
  // every eta_n is onto with kernel pair hn(X, n); throws
  // CompositionIllDefined or PropertyViolation otherwise.
  ReflectionResult pi1(SimplicialPtr const& x, size_t budget = default_limit_budget);

  struct Factorization1 {
    bool                              factors = false;
    std::optional<SimplicialMorphism> g;  // f = g eta
    std::string                       witness;
  };

  // f : X -> Y with Y a groupoid nerve.
  Factorization1 universal_property_check(ReflectionResult const&   r,
                                          SimplicialMorphism const& f);

  // Every homomorphism a -> b, in lexicographic order of the maps.  Stops
  // with BudgetExceeded past the limit.
  std::vector<Homomorphism> enumerate_homomorphisms(AlgebraPtr const& a,
                                                    AlgebraPtr const& b,
                                                    size_t            limit = 100000);

  std::vector<SimplicialMorphism> enumerate_simplicial_morphisms(SimplicialPtr const& x,
                                                                 SimplicialPtr const& y,
                                                                 size_t limit = 100000);

  struct GraphReflection {
    Congruence       commutator;  // [D_0, D_1] on X_1
    Homomorphism     eta1;        // X_1 -> X_1 / [D_0, D_1]
    InternalGroupoid groupoid;
  };

  // Quotient of X_1 by the term-condition commutator of D_0 and D_1.
  GraphReflection graph_reflection(SimplicialPtr const& graph);

  // f : graph -> underlying graph of a groupoid; true when f_1 factors
  // through eta1.
  bool graph_factors(GraphReflection const& r, SimplicialMorphism const& f);

  struct CommutatorChain {
    Congruence commutator;  // [D_0, D_1]
    Congruence h1;
    Congruence meet;        // D_0 ^ D_1
    bool       holds = false;
  };

  CommutatorChain commutator_chain_check(SimplicialPtr const& x);

  // f(D_i ^ D_j) = D_i ^ D_j on levels >= 2 for levelwise surjective f (on
  // level 1 the square into X_0 x X_0 need not be a double extension), and
  // the three face identities d_k(D_i ^ D_j) = D_i ^ D_j, d_j(D_i ^ D_k) = D_i ^ D_{k-1},
  // d_i(D_j ^ D_k) = D_{j-1} ^ D_{k-1} for i < j < k on levels >= 3.
  // Returns a description of the first failure.
  std::optional<std::string> image_of_meet_failure(SimplicialPtr const& x);
  std::optional<std::string> image_of_meet_failure(SimplicialMorphism const& f);

}  // namespace simal
