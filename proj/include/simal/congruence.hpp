#pragma once

#include <utility>
#include <vector>

#include "simal/algebra.hpp"
#include "simal/homomorphism.hpp"

namespace simal {

  // Partition of a carrier stored as a block array: block(x) is the least
  // element of the class of x.  Equality of congruences on the same algebra
  // is equality of these arrays.
  class Congruence {
   public:
    Congruence() = default;

    static Congruence identity(AlgebraPtr a);
    static Congruence all(AlgebraPtr a);

    // Arbitrary labels; equal labels mean the same class.  Throws
    // PropertyViolation (with a witness) if the partition is not compatible.
    static Congruence from_labels(AlgebraPtr a, std::vector<Elem> const& labels);

    // Labels are canonicalised but compatibility is not checked.
    static Congruence trusted(AlgebraPtr a, std::vector<Elem> const& labels);

    static Congruence generated(AlgebraPtr                                 a,
                                std::vector<std::pair<Elem, Elem>> const& pairs);

    AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }

    size_t size() const noexcept {
      return _block.size();
    }

    Elem block(Elem x) const {
      return _block[x];
    }

    std::vector<Elem> const& blocks() const noexcept {
      return _block;
    }

    bool related(Elem a, Elem b) const {
      return _block[a] == _block[b];
    }

    size_t num_blocks() const;

    // Number of related ordered pairs, the sum of squared class sizes.
    size_t pair_count() const;

    std::vector<std::vector<Elem>> classes() const;

    bool is_identity() const;
    bool is_all() const;

    bool leq(Congruence const& that) const;

    bool operator==(Congruence const& that) const {
      return _block == that._block;
    }

   private:
    Congruence(AlgebraPtr a, std::vector<Elem> block)
        : _alg(std::move(a)), _block(std::move(block)) {}

    AlgebraPtr        _alg;
    std::vector<Elem> _block;
  };

  std::vector<Elem> canonical_labels(std::vector<Elem> const& labels);

  // Union-find with closure under basic translations.  Every union that
  // actually merges two classes is recorded, so callers can propagate new
  // pairs elsewhere (simplicial congruences do this across levels).
  class CongruenceBuilder {
   public:
    explicit CongruenceBuilder(AlgebraPtr a);
    CongruenceBuilder(Congruence const& start);

    // Merges the classes of a and b and closes under translations.
    void add(Elem a, Elem b);

    bool related(Elem a, Elem b) {
      return find(a) == find(b);
    }

    std::vector<std::pair<Elem, Elem>> take_new_unions() {
      return std::exchange(_new_unions, {});
    }

    Congruence result();

    AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }

   private:
    Elem find(Elem x);
    bool unite(Elem a, Elem b);

    AlgebraPtr                         _alg;
    std::vector<Elem>                  _parent;
    std::vector<std::pair<Elem, Elem>> _queue;
    std::vector<std::pair<Elem, Elem>> _new_unions;
  };

  Congruence meet(Congruence const& a, Congruence const& b);

  // Computed as the relational composite a∘b.  Throws JoinNotComposite when
  // the composite is not already the join.
  Congruence join(Congruence const& a, Congruence const& b);

  Congruence meet(std::vector<Congruence> const& cs);
  Congruence join(std::vector<Congruence> const& cs);

  // {(f a, f b) : a θ b}.  Throws NotSurjective or NotTransitive.
  Congruence image_congruence(Homomorphism const& f, Congruence const& theta);

  Congruence preimage_congruence(Homomorphism const& f, Congruence const& theta);

  Congruence kernel_pair(Homomorphism const& f);

}  // namespace simal
