#include "simal/commutator.hpp"

#include "simal/error.hpp"
#include "simal/limits.hpp"

namespace simal {

  Congruence tc_commutator(Congruence const& alpha, Congruence const& beta) {
    AlgebraPtr const& a = alpha.algebra();
    if (alpha.size() != beta.size()) {
      fail(Errc::precondition_unmet, "commutator of congruences on different algebras");
    }
    if (alpha.is_identity() || beta.is_identity()) {
      return Congruence::identity(a);
    }
    Quotient qb = quotient(a, beta);
    auto     pairs
        = make_limit(a->name() + "_beta",
                     {a, a},
                     compatible_tuples({a->size(), a->size()},
                                       {{0, &qb.projection, 1, &qb.projection}}));
    CongruenceBuilder m(pairs->algebra);
    for (Elem x = 0; x < a->size(); ++x) {
      Elem r = alpha.block(x);
      if (r != x) {
        Elem xx[2] = {x, x};
        Elem rr[2] = {r, r};
        m.add(static_cast<Elem>(pairs->find(rr)), static_cast<Elem>(pairs->find(xx)));
      }
    }
    Congruence        mc = m.result();
    CongruenceBuilder delta(a);
    for (auto const& cls : mc.classes()) {
      for (Elem top : cls) {
        Elem const* uv = pairs->tuple(top);
        for (Elem bottom : cls) {
          Elem const* wz = pairs->tuple(bottom);
          Elem        rhs = a->maltsev(wz[1], uv[1], uv[0]);
          if (wz[0] != rhs) {
            delta.add(wz[0], rhs);
          }
        }
      }
    }
    return delta.result();
  }

}  // namespace simal
