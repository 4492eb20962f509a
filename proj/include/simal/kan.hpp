#pragma once

#include <optional>
#include <vector>

#include "simal/limits.hpp"
#include "simal/simplicial.hpp"

namespace simal {

  // Tuples (x_i)_{i in faces} over X_{n-1} with d_i x_j = d_{j-1} x_i for
  // i < j, both in faces.  faces lists the positions kept: all of 0..n for
  // the simplicial kernel, all but k for the (n,k)-horn.
  struct FaceLimit {
    unsigned              n = 0;
    std::vector<unsigned> faces;
    LimitPtr              limit;
    // X_n -> limit induced by the faces; empty when n exceeds the truncation.
    std::optional<Homomorphism> comparison;
  };

  // K_n for 2 <= n <= N+1, with kappa_n when n <= N.
  FaceLimit simplicial_kernel(SimplicialPtr const& x,
                              unsigned             n,
                              size_t               budget = default_limit_budget);

  // Lambda^n_k for 2 <= n <= N, with lambda^n_k.
  FaceLimit horn(SimplicialPtr const& x,
                 unsigned             n,
                 unsigned             k,
                 size_t               budget = default_limit_budget);

  struct KanEntry {
    unsigned n;
    unsigned k;
    size_t   horn_size;   // |Lambda^n_k(X)|, or the horn pullback for fibrations
    size_t   image_size;  // size of the image of lambda or theta
    bool     surjective;
    bool     bijective;
  };

  struct KanReport {
    std::vector<KanEntry> entries;

    bool holds() const;
  };

  KanReport kan_check(SimplicialPtr const& x, size_t budget = default_limit_budget);

  // theta^n_k : X_n -> Lambda^n_k(X) x_{Lambda^n_k(Y)} Y_n for every
  // 2 <= n <= N and k.  The pullback is counted, not built.
  KanReport kan_fibration_check(SimplicialMorphism const& f,
                                size_t                    budget = default_limit_budget);

  // Is kappa_n surjective.
  bool exactness_check(SimplicialPtr const& x,
                       unsigned             n,
                       size_t               budget = default_limit_budget);

}  // namespace simal
