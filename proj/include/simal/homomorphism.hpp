#pragma once

#include <vector>

#include "simal/algebra.hpp"

namespace simal {

  class Homomorphism {
   public:
    Homomorphism() = default;

    // Exhaustive check of every operation.  Throws SignatureMismatch,
    // MalformedTable (bad length or range) or NotHomomorphism.
    static Homomorphism create(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map);

    static Homomorphism trusted(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map);

    static Homomorphism identity(AlgebraPtr a);

    Elem operator()(Elem x) const {
      return _map[x];
    }

    AlgebraPtr const& dom() const noexcept {
      return _dom;
    }

    AlgebraPtr const& cod() const noexcept {
      return _cod;
    }

    std::vector<Elem> const& map() const noexcept {
      return _map;
    }

    bool is_surjective() const;
    bool is_injective() const;

    bool is_bijective() const {
      return _dom->size() == _cod->size() && is_injective();
    }

    // Same carriers and same map; algebra identity is by pointer.
    bool operator==(Homomorphism const& that) const {
      return _dom == that._dom && _cod == that._cod && _map == that._map;
    }

   private:
    Homomorphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map)
        : _dom(std::move(dom)), _cod(std::move(cod)), _map(std::move(map)) {}

    AlgebraPtr        _dom;
    AlgebraPtr        _cod;
    std::vector<Elem> _map;
  };

  // g after f.
  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

  // Same map on the same elements; ignores which algebra objects are used.
  bool same_map(Homomorphism const& f, Homomorphism const& g);

}  // namespace simal
