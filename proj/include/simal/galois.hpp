#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simal/congruence.hpp"
#include "simal/reflection.hpp"
#include "simal/simplicial.hpp"

namespace simal {

  // One evaluated lattice condition, with a pair of distinct related
  // elements when a meet that should be Delta is not.
  struct ConditionWitness {
    std::string                          condition;
    unsigned                             level = 0;
    bool                                 holds = false;
    std::optional<std::pair<Elem, Elem>> pair;
  };

  struct ExtensionReport {
    std::string morphism;
    bool        levelwise_surjective = false;
    bool        trivial              = false;
    bool        central              = false;  // theorem route
    bool        central_definitional = false;  // kernel-pair projection trivial
    bool        normal               = false;
    bool        exact_fibration      = false;  // every theta^n_k bijective
    // theta^2_k bijective against F_2 ^ D_i ^ D_j = Delta, k = 0, 1, 2
    std::vector<std::pair<bool, bool>> horn_squares;
    std::vector<ConditionWitness>      witnesses;

    // Failed cross-route and implication checks.
    std::vector<std::string> violations() const;
  };

  // F_n ^ H_n = Delta for 1 <= n <= N.
  bool is_trivial_extension(SimplicialMorphism const& f);

  // F_n ^ D_i ^ D_j = Delta for 2 <= n <= N and d_1(F_2 ^ D_0 ^ D_2) = Delta.
  bool is_central_extension(SimplicialMorphism const& f);

  // Throws NotLevelwiseSurjective.
  ExtensionReport classify_extension(SimplicialMorphism const& f, std::string name = "");

  // Pi_1 of h : A -> B as an isomorphism of groupoids: levels 0 and 1 of
  // the reflections.  h must be levelwise surjective.
  bool pi1_inverts(SimplicialMorphism const& h);

  enum class FactorizationMode { em, ml };

  struct Factorization {
    FactorizationMode  mode;
    SimplicialMorphism e;
    SimplicialMorphism m;
    bool               composite_matches = false;  // m e = f
    bool               m_in_class        = false;  // trivial (em) or central (ml)
    bool               e_inverted        = false;  // Pi_1(e) iso
    size_t             samples           = 0;
    size_t             samples_inverted  = 0;
    // ml only
    SimplicialCongruence theta;
    size_t               lattice_size   = 0;
    size_t               central_count  = 0;
    bool                 unique_minimum = false;
  };

  // e = <f, eta_X> into Y x_{N Pi_1 Y} N Pi_1 X, m the first projection.
  Factorization em_factorization(SimplicialMorphism const& f);

  // Principal simplicial congruences below Eq[f] generated by pairs at the
  // top level.
  std::vector<SimplicialCongruence> ml_atoms(SimplicialMorphism const& f);

  // Join closure of the atoms, Delta first.  Throws BudgetExceeded.
  std::vector<SimplicialCongruence> simplicial_congruences_below(SimplicialMorphism const& f,
                                                                 size_t budget = 20000);

  // Is X/theta -> Y central, evaluated on X through
  // E_i = d_i^{-1}(theta_{n-1}).
  bool central_over(SimplicialMorphism const& f, SimplicialCongruence const& theta);

  // Least theta <= Eq[f] with X/theta -> Y central.  Pullbacks of e along
  // sample_extensions_into(X/theta) are checked to be inverted by Pi_1.
  Factorization ml_factorization(SimplicialMorphism const& f, size_t budget = 20000);

  // Identity of x, the projection x x const(X_0) -> x and the projection
  // out of the kernel pair of eta_x.
  std::vector<SimplicialMorphism> sample_extensions_into(SimplicialPtr const& x);

  // {(d_0 a, d_1 a) : d_2 a in im s_0}, asserted equal to h1(X); throws
  // HomotopyMismatch otherwise.
  Congruence homotopy_relation(SimplicialPtr const& x);

  struct RelativeHomotopy {
    // image of (d_0, d_1) over X_1 x_{Y_1} Y_0, a relation on X_0
    Congruence lemma_formula;  // d_0(D_1 ^ F_1)
    bool       lemma_matches = false;
    // image of (d_0, d_1) over the L-limit, a relation on X_1
    Congruence construction_formula;  // d_0(D_1 ^ D_2 ^ F_2)
    Congruence statement_formula;     // d_1(F_2 ^ D_0 ^ D_2)
    bool       construction_matches = false;
    bool       statement_matches    = false;
  };

  RelativeHomotopy relative_homotopy_relation(SimplicialMorphism const& f);

  struct ExactnessLemma {
    Congruence lhs;  // d_0(D_1 ^ D_2) ^ F_1
    Congruence rhs;  // d_0(D_1 ^ D_2 ^ F_2)
    bool       holds = false;
  };

  // Needs kappa_3 of the codomain onto; PreconditionUnmet otherwise.
  ExactnessLemma exactness_lemma_check(SimplicialMorphism const& f);

  struct StabilizingProbe {
    size_t                   samples  = 0;
    size_t                   inverted = 0;
    std::vector<std::string> failures;
    bool holds() const {
      return inverted == samples;
    }
  };

  // f : W -> X with X exact.  For each sample p : Z -> X the e-part of the
  // em factorization of f is pulled back along P x_X Z -> P and tested with
  // pi1_inverts.
  StabilizingProbe stabilizing_probe(SimplicialMorphism const&              f,
                                     std::vector<SimplicialMorphism> const& samples);

}  // namespace simal
