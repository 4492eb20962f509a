#pragma once

#include "simal/groupoid.hpp"
#include "simal/kan.hpp"
#include "simal/simplicial.hpp"

namespace simal {

  struct Decalage {
    SimplicialPtr      object;  // Dec(X)_n = X_{n+1}, truncation N-1
    SimplicialMorphism counit;  // eps_n = d_{n+1} : Dec(X) -> X truncated to N-1
  };

  Decalage decalage(SimplicialPtr const& x);

  struct Coskeleton {
    SimplicialPtr         object;
    std::vector<LimitPtr> kernels;  // tuple carriers of the new levels, null below
  };

  Coskeleton coskeleton_levels(SimplicialPtr const& x,
                               unsigned             to_level,
                               size_t               budget = default_limit_budget);

  // Extends x to the given level by iterated simplicial kernels.  Throws
  // LevelTooLarge past the budget.
  SimplicialPtr coskeleton(SimplicialPtr const& x,
                           unsigned             to_level,
                           size_t               budget = default_limit_budget);

  // Canonical map x -> coskeleton(truncate(x, k), N) built from iterated
  // kappa maps.  It is an isomorphism exactly when x is k-coskeletal.
  SimplicialMorphism coskeleton_comparison(SimplicialPtr const& x,
                                           unsigned             k,
                                           size_t budget = default_limit_budget);

  struct Nerve {
    SimplicialPtr         object;
    std::vector<LimitPtr> paths;  // tuple carriers of levels >= 2, null below
  };

  Nerve nerve_levels(InternalGroupoid const& g,
                     unsigned                to_level,
                     size_t                  budget = default_limit_budget);

  // Level n holds the paths (a_1, .., a_n) with d0(a_i) = d1(a_{i+1}).
  SimplicialPtr nerve(InternalGroupoid const& g,
                      unsigned                to_level,
                      size_t                  budget = default_limit_budget);

  // Truncation-2 object Sk_1 of a reflexive graph over the signature
  // add/neg/zero with commutative add.  Level 2 is the pushout of s0 along
  // itself, (X1 x X1) / <((s0 a, -s0 a), (0, 0))>.  Throws UnsupportedVariety
  // for any other signature.
  SimplicialPtr sk1_module_variety(SimplicialPtr const& graph);

  // The k-th edge (1 <= k <= n) of an n-simplex, from vertex k-1 to vertex k.
  Elem edge(SimplicialPtr const& x, unsigned n, unsigned k, Elem e);

  // Reflexive graph underlying an internal groupoid.
  SimplicialPtr underlying_graph(InternalGroupoid const& g, std::string name);

}  // namespace simal
