#pragma once

#include <optional>
#include <string>

#include "simal/homomorphism.hpp"
#include "simal/limits.hpp"

namespace simal {

  // Arrows a : d1(a) -> d0(a).  composable holds pairs (a, b) with
  // d0(a) = d1(b), i.e. a followed by b, and m(a, b) : d1(a) -> d0(b).
  struct InternalGroupoid {
    AlgebraPtr   x0;
    AlgebraPtr   x1;
    Homomorphism d0;
    Homomorphism d1;
    Homomorphism s0;
    LimitPtr     composable;
    Homomorphism m;

    // Validates units, endpoints, associativity and inverses.  Throws
    // PreconditionUnmet with the first failure.
    static InternalGroupoid make(AlgebraPtr   x0,
                                 AlgebraPtr   x1,
                                 Homomorphism d0,
                                 Homomorphism d1,
                                 Homomorphism s0,
                                 std::vector<Elem> composition);

    // The only possible composition, m(a, b) = p(a, s0 d0 a, b).  Throws
    // PreconditionUnmet if the graph does not carry a groupoid structure.
    static InternalGroupoid from_graph(AlgebraPtr   x0,
                                       AlgebraPtr   x1,
                                       Homomorphism d0,
                                       Homomorphism d1,
                                       Homomorphism s0);

    Elem compose(Elem a, Elem b) const;
    Elem inverse(Elem a) const;

    std::optional<std::string> failure() const;
  };

  // Composition given by the Mal'tsev term, defined on every composable pair.
  std::vector<Elem> maltsev_composition(AlgebraPtr const&   x1,
                                        Homomorphism const& d0,
                                        Homomorphism const& s0,
                                        LimitAlgebra const& composable);

}  // namespace simal
