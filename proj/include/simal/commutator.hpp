#pragma once

#include "simal/congruence.hpp"

namespace simal {

  // Term-condition commutator [alpha, beta] on a Mal'tsev algebra.
  //
  // The matrices (t(a,c), t(a,d), t(b,c), t(b,d)) with a alpha b and c beta d
  // form a reflexive compatible relation on the algebra beta of pairs, so
  // they are the congruence of beta generated by ((a,a),(b,b)).  The least
  // delta satisfying the term condition is then generated by the pairs
  // (t(b,c), p(t(b,d), t(a,d), t(a,c))).
  Congruence tc_commutator(Congruence const& alpha, Congruence const& beta);

}  // namespace simal
