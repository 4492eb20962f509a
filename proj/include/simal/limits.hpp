#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "simal/algebra.hpp"
#include "simal/congruence.hpp"
#include "simal/homomorphism.hpp"

namespace simal {

  inline constexpr size_t default_limit_budget = 1'000'000;

  // Fixed-width tuples stored back to back.
  class TupleSet {
   public:
    TupleSet() = default;
    explicit TupleSet(size_t width) : _width(width) {}

    size_t width() const noexcept {
      return _width;
    }

    size_t size() const noexcept {
      return _width == 0 ? _count : _data.size() / _width;
    }

    Elem const* operator[](size_t i) const {
      return _data.data() + i * _width;
    }

    void push_back(Elem const* t) {
      _data.insert(_data.end(), t, t + _width);
      ++_count;
    }

    std::vector<Elem> const& data() const noexcept {
      return _data;
    }

   private:
    size_t            _width = 0;
    size_t            _count = 0;
    std::vector<Elem> _data;
  };

  // Hash index from tuple contents to position.  Tuples whose components fit
  // in 64 bits are packed; wider ones fall back to byte strings.
  class TupleIndex {
   public:
    TupleIndex() = default;
    TupleIndex(TupleSet const& set, std::vector<size_t> const& radices);

    static constexpr size_t npos = SIZE_MAX;

    size_t find(Elem const* t) const;

    size_t find(std::vector<Elem> const& t) const {
      return find(t.data());
    }

   private:
    std::vector<unsigned>                     _shift;
    bool                                      _packed = true;
    size_t                                    _width  = 0;
    std::unordered_map<uint64_t, uint32_t>    _small;
    std::unordered_map<std::string, uint32_t> _wide;

    uint64_t    pack(Elem const* t) const;
    std::string bytes(Elem const* t) const;
  };

  // Requires map_l(t[left]) == map_r(t[right]); a null map is the identity.
  struct LinkConstraint {
    size_t              left;
    Homomorphism const* left_map;
    size_t              right;
    Homomorphism const* right_map;
  };

  // All tuples (x_0, ..., x_{w-1}) with x_c in factors[c] satisfying every
  // constraint, in lexicographic order.  Built one component at a time by
  // joining on fibers; the full product is never enumerated.  Throws
  // LevelTooLarge past the budget.
  TupleSet compatible_tuples(std::vector<size_t> const&         factor_sizes,
                             std::vector<LinkConstraint> const& constraints,
                             size_t budget = default_limit_budget);

  // A subalgebra of a product given by its tuples, with the projections.
  struct LimitAlgebra {
    AlgebraPtr                algebra;
    std::vector<AlgebraPtr>   factors;
    TupleSet                  tuples;
    TupleIndex                index;
    std::vector<Homomorphism> projections;

    size_t find(std::vector<Elem> const& t) const {
      return index.find(t);
    }

    size_t find(Elem const* t) const {
      return index.find(t);
    }

    Elem const* tuple(Elem x) const {
      return tuples[x];
    }
  };

  using LimitPtr = std::shared_ptr<LimitAlgebra const>;

  // Operations act componentwise.  Throws PropertyViolation if the tuple set
  // is not closed, InconsistentConstants if it is empty but constants exist.
  LimitPtr make_limit(std::string name, std::vector<AlgebraPtr> factors, TupleSet tuples);

  LimitPtr product(AlgebraPtr a, AlgebraPtr b);
  LimitPtr product(std::vector<AlgebraPtr> const& factors);

  // Tuples (a, b) with f(a) = g(b).
  LimitPtr pullback(Homomorphism const& f, Homomorphism const& g,
                    size_t budget = default_limit_budget);

  struct DiagramArrow {
    size_t       from;
    size_t       to;
    Homomorphism map;
  };

  struct FiniteDiagram {
    std::vector<AlgebraPtr>   nodes;
    std::vector<DiagramArrow> arrows;
  };

  // Limit of the whole diagram, carried by one tuple entry per node.
  LimitPtr finite_limit(FiniteDiagram const& d, size_t budget = default_limit_budget);

  struct Quotient {
    AlgebraPtr   algebra;
    Homomorphism projection;
  };

  Quotient quotient(AlgebraPtr a, Congruence const& theta);

  struct Subalgebra {
    AlgebraPtr   algebra;
    Homomorphism inclusion;
  };

  // Smallest subalgebra containing the generators (and all constants).
  Subalgebra subalgebra_generated(AlgebraPtr a, std::vector<Elem> const& gens);

  // Subalgebra on a subset already known to be closed.
  Subalgebra subalgebra_on(AlgebraPtr a, std::vector<Elem> const& members);

}  // namespace simal
