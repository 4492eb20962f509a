#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simal/algebra.hpp"
#include "simal/congruence.hpp"
#include "simal/homomorphism.hpp"
#include "simal/limits.hpp"

namespace simal {

  struct IdentityViolation {
    unsigned    level;  // level of the element the identity is applied to
    std::string which;  // e.g. "d_i d_j = d_{j-1} d_i"
    unsigned    i;
    unsigned    j;
    Elem        witness;

    std::string describe() const;
  };

  class TruncatedSimplicialAlgebra;
  using SimplicialPtr = std::shared_ptr<TruncatedSimplicialAlgebra const>;

  // Levels X_0 .. X_N.  faces[n] (1 <= n <= N) holds d_0 .. d_n out of X_n;
  // degeneracies[n] (0 <= n < N) holds s_0 .. s_n out of X_n.  faces[0] is
  // empty.
  class TruncatedSimplicialAlgebra {
   public:
    using Maps = std::vector<std::vector<Homomorphism>>;

    // Checks shapes, endpoints, signatures and every simplicial identity.
    // Throws IdentityViolated with the first failure.
    static SimplicialPtr make(std::string             name,
                              std::vector<AlgebraPtr> levels,
                              Maps                    faces,
                              Maps                    degeneracies);

    static SimplicialPtr trusted(std::string             name,
                                 std::vector<AlgebraPtr> levels,
                                 Maps                    faces,
                                 Maps                    degeneracies);

    std::string const& name() const noexcept {
      return _name;
    }

    unsigned truncation() const noexcept {
      return static_cast<unsigned>(_levels.size() - 1);
    }

    AlgebraPtr const& level(unsigned n) const {
      return _levels.at(n);
    }

    std::vector<AlgebraPtr> const& levels() const noexcept {
      return _levels;
    }

    // d_i : X_n -> X_{n-1}
    Homomorphism const& d(unsigned n, unsigned i) const {
      return _faces.at(n).at(i);
    }

    // s_i : X_n -> X_{n+1}
    Homomorphism const& s(unsigned n, unsigned i) const {
      return _degeneracies.at(n).at(i);
    }

    Maps const& faces() const noexcept {
      return _faces;
    }

    Maps const& degeneracies() const noexcept {
      return _degeneracies;
    }

    Signature const& signature() const {
      return _levels[0]->signature();
    }

    size_t max_level_size() const;

    std::optional<IdentityViolation> check_identities() const;

   private:
    TruncatedSimplicialAlgebra() = default;

    std::string             _name;
    std::vector<AlgebraPtr> _levels;
    Maps                    _faces;
    Maps                    _degeneracies;
  };

  SimplicialPtr validate_simplicial(std::string                      name,
                                    std::vector<AlgebraPtr>          levels,
                                    TruncatedSimplicialAlgebra::Maps faces,
                                    TruncatedSimplicialAlgebra::Maps degeneracies);

  // A reflexive graph is a 1-truncated simplicial algebra:
  // d0, d1 : X1 -> X0 and s0 : X0 -> X1 with d0 s0 = d1 s0 = 1.
  SimplicialPtr make_graph(std::string  name,
                           AlgebraPtr   x0,
                           AlgebraPtr   x1,
                           Homomorphism d0,
                           Homomorphism d1,
                           Homomorphism s0);

  SimplicialPtr constant_object(AlgebraPtr a, unsigned truncation);

  SimplicialPtr truncate(SimplicialPtr const& x, unsigned truncation);

  class SimplicialMorphism {
   public:
    SimplicialMorphism() = default;

    // Checks that the components commute with all faces and degeneracies.
    // Throws NotCommuting with the first failure.
    static SimplicialMorphism create(SimplicialPtr             dom,
                                     SimplicialPtr             cod,
                                     std::vector<Homomorphism> components);

    static SimplicialMorphism trusted(SimplicialPtr             dom,
                                      SimplicialPtr             cod,
                                      std::vector<Homomorphism> components);

    static SimplicialMorphism identity(SimplicialPtr x);

    SimplicialPtr const& dom() const noexcept {
      return _dom;
    }

    SimplicialPtr const& cod() const noexcept {
      return _cod;
    }

    Homomorphism const& operator[](unsigned n) const {
      return _components.at(n);
    }

    std::vector<Homomorphism> const& components() const noexcept {
      return _components;
    }

    unsigned truncation() const {
      return _dom->truncation();
    }

    bool levelwise_surjective() const;
    bool levelwise_injective() const;
    bool levelwise_bijective() const;

    // Description of the first non-commuting square, if any.
    std::optional<std::string> commutation_failure() const;

   private:
    SimplicialMorphism(SimplicialPtr dom, SimplicialPtr cod, std::vector<Homomorphism> c)
        : _dom(std::move(dom)), _cod(std::move(cod)), _components(std::move(c)) {}

    SimplicialPtr             _dom;
    SimplicialPtr             _cod;
    std::vector<Homomorphism> _components;
  };

  SimplicialMorphism compose(SimplicialMorphism const& g, SimplicialMorphism const& f);

  SimplicialMorphism truncate(SimplicialMorphism const& f,
                              SimplicialPtr const&      dom,
                              SimplicialPtr const&      cod);

  // Unique morphism to the one-element constant object.
  SimplicialMorphism to_terminal(SimplicialPtr const& x);

  // Levelwise congruences closed under faces and degeneracies.
  using SimplicialCongruence = std::vector<Congruence>;

  SimplicialCongruence kernel_pairs(SimplicialMorphism const& f);

  SimplicialCongruence identity_congruence(SimplicialPtr const& x);

  bool is_simplicial_congruence(SimplicialPtr const& x, SimplicialCongruence const& t);

  bool leq(SimplicialCongruence const& a, SimplicialCongruence const& b);

  SimplicialCongruence join(SimplicialCongruence const& a, SimplicialCongruence const& b);

  SimplicialCongruence meet(SimplicialCongruence const& a, SimplicialCongruence const& b);

  // Smallest simplicial congruence containing the given pairs; pairs[n] are
  // pairs of elements of X_n.
  SimplicialCongruence simplicial_congruence_generated(
      SimplicialPtr const&                                   x,
      std::vector<std::vector<std::pair<Elem, Elem>>> const& pairs);

  struct SimplicialQuotient {
    SimplicialPtr      object;
    SimplicialMorphism projection;
  };

  SimplicialQuotient levelwise_quotient(SimplicialPtr const& x, SimplicialCongruence const& t);

  // Map induced on a quotient: given f : X -> Y constant on t, returns
  // X/t -> Y.
  SimplicialMorphism induced_map(SimplicialQuotient const& q, SimplicialMorphism const& f);

  struct SimplicialSubobject {
    SimplicialPtr      object;
    SimplicialMorphism inclusion;
  };

  // Smallest levelwise subalgebra closed under faces and degeneracies
  // containing the generators; gens[n] lists elements of X_n.
  SimplicialSubobject simplicial_subobject_generated(
      SimplicialPtr const& x, std::vector<std::vector<Elem>> const& gens);

  // Levelwise limits.  Every factor has the same truncation; constraints
  // refer to factors by position, a null morphism is the identity.
  struct SimplicialLink {
    size_t                    left;
    SimplicialMorphism const* left_map;
    size_t                    right;
    SimplicialMorphism const* right_map;
  };

  struct SimplicialLimit {
    SimplicialPtr                   object;
    std::vector<LimitPtr>           levels;
    std::vector<SimplicialMorphism> projections;
  };

  SimplicialLimit simplicial_limit(std::string                        name,
                                   std::vector<SimplicialPtr> const&  factors,
                                   std::vector<SimplicialLink> const& links,
                                   size_t budget = default_limit_budget);

  SimplicialLimit simplicial_pullback(SimplicialMorphism const& f,
                                      SimplicialMorphism const& g,
                                      size_t budget = default_limit_budget);

  SimplicialLimit simplicial_product(SimplicialPtr const& x,
                                     SimplicialPtr const& y,
                                     size_t budget = default_limit_budget);

  // X x_Y X for f : X -> Y.
  SimplicialLimit kernel_pair_object(SimplicialMorphism const& f,
                                     size_t budget = default_limit_budget);

}  // namespace simal
