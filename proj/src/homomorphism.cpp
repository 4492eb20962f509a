#include "simal/homomorphism.hpp"

#include "simal/error.hpp"

namespace simal {

  Homomorphism Homomorphism::trusted(AlgebraPtr        dom,
                                     AlgebraPtr        cod,
                                     std::vector<Elem> map) {
    return Homomorphism(std::move(dom), std::move(cod), std::move(map));
  }

  Homomorphism Homomorphism::identity(AlgebraPtr a) {
    std::vector<Elem> map(a->size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = x;
    }
    return Homomorphism(a, a, std::move(map));
  }

  Homomorphism Homomorphism::create(AlgebraPtr        dom,
                                    AlgebraPtr        cod,
                                    std::vector<Elem> map) {
    if (!same_signature(*dom, *cod)) {
      fail(Errc::signature_mismatch,
           dom->name() + " and " + cod->name() + " have different signatures");
    }
    if (map.size() != dom->size()) {
      fail(Errc::malformed_table,
           "map has length " + std::to_string(map.size()) + ", domain "
               + dom->name() + " has size " + std::to_string(dom->size()));
    }
    for (Elem x = 0; x < map.size(); ++x) {
      if (map[x] >= cod->size()) {
        fail(Errc::malformed_table,
             "map sends " + std::to_string(x) + " to "
                 + std::to_string(map[x]) + ", outside " + cod->name());
      }
    }
    Signature const& sig = dom->signature();
    size_t const     n   = dom->size();
    std::vector<Elem> args, imgs;
    for (size_t op = 0; op < sig.size(); ++op) {
      unsigned k     = sig[op].arity;
      size_t   total = checked_power(n, k);
      args.assign(k, 0);
      imgs.assign(k, 0);
      for (size_t idx = 0; idx < total; ++idx) {
        size_t rest = idx;
        for (unsigned i = k; i-- > 0;) {
          args[i] = static_cast<Elem>(rest % n);
          rest /= n;
          imgs[i] = map[args[i]];
        }
        Elem lhs = map[dom->table(op)[idx]];
        Elem rhs = cod->apply(op, imgs.data());
        if (lhs != rhs) {
          std::string w = sig[op].name + "(";
          for (unsigned i = 0; i < k; ++i) {
            w += (i ? "," : "") + std::to_string(args[i]);
          }
          w += ")";
          fail(Errc::not_homomorphism,
               "map " + dom->name() + " -> " + cod->name()
                   + " does not preserve " + w);
        }
      }
    }
    return Homomorphism(std::move(dom), std::move(cod), std::move(map));
  }

  bool Homomorphism::is_surjective() const {
    std::vector<char> hit(_cod->size(), 0);
    size_t            count = 0;
    for (Elem y : _map) {
      if (!hit[y]) {
        hit[y] = 1;
        ++count;
      }
    }
    return count == _cod->size();
  }

  bool Homomorphism::is_injective() const {
    std::vector<char> hit(_cod->size(), 0);
    for (Elem y : _map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = 1;
    }
    return true;
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (f.cod()->size() != g.dom()->size()) {
      fail(Errc::precondition_unmet, "composing maps whose ends do not meet");
    }
    std::vector<Elem> map(f.dom()->size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return Homomorphism::trusted(f.dom(), g.cod(), std::move(map));
  }

  bool same_map(Homomorphism const& f, Homomorphism const& g) {
    return f.map() == g.map();
  }

}  // namespace simal
