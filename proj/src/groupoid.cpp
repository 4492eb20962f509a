#include "simal/groupoid.hpp"

#include "simal/error.hpp"

namespace simal {

  std::vector<Elem> maltsev_composition(AlgebraPtr const&   x1,
                                        Homomorphism const& d0,
                                        Homomorphism const& s0,
                                        LimitAlgebra const& composable) {
    std::vector<Elem> m(composable.tuples.size());
    for (Elem c = 0; c < m.size(); ++c) {
      Elem const* t = composable.tuple(c);
      m[c]          = x1->maltsev(t[0], s0(d0(t[0])), t[1]);
    }
    return m;
  }

  InternalGroupoid InternalGroupoid::make(AlgebraPtr        x0,
                                          AlgebraPtr        x1,
                                          Homomorphism      d0,
                                          Homomorphism      d1,
                                          Homomorphism      s0,
                                          std::vector<Elem> composition) {
    InternalGroupoid g;
    g.composable = pullback(d0, d1);
    if (composition.size() != g.composable->tuples.size()) {
      fail(Errc::malformed_table, "composition must cover every composable pair");
    }
    g.x0 = std::move(x0);
    g.x1 = std::move(x1);
    g.d0 = std::move(d0);
    g.d1 = std::move(d1);
    g.s0 = std::move(s0);
    g.m  = Homomorphism::create(g.composable->algebra, g.x1, std::move(composition));
    if (auto why = g.failure()) {
      fail(Errc::precondition_unmet, "not an internal groupoid: " + *why);
    }
    return g;
  }

  InternalGroupoid InternalGroupoid::from_graph(AlgebraPtr   x0,
                                                AlgebraPtr   x1,
                                                Homomorphism d0,
                                                Homomorphism d1,
                                                Homomorphism s0) {
    auto comp = pullback(d0, d1);
    auto m    = maltsev_composition(x1, d0, s0, *comp);
    return make(std::move(x0), std::move(x1), std::move(d0), std::move(d1), std::move(s0), m);
  }

  Elem InternalGroupoid::compose(Elem a, Elem b) const {
    Elem   t[2] = {a, b};
    size_t pos  = composable->find(t);
    if (pos == TupleIndex::npos) {
      fail(Errc::precondition_unmet, "arrows are not composable");
    }
    return m(static_cast<Elem>(pos));
  }

  Elem InternalGroupoid::inverse(Elem a) const {
    Elem unit = s0(d1(a));
    for (Elem b = 0; b < x1->size(); ++b) {
      if (d1(b) == d0(a) && compose(a, b) == unit) {
        return b;
      }
    }
    fail(Errc::precondition_unmet, "arrow " + std::to_string(a) + " has no inverse");
  }

  std::optional<std::string> InternalGroupoid::failure() const {
    for (Elem x = 0; x < x0->size(); ++x) {
      if (d0(s0(x)) != x || d1(s0(x)) != x) {
        return "s0 is not a common section at " + std::to_string(x);
      }
    }
    for (Elem c = 0; c < composable->tuples.size(); ++c) {
      Elem const* t = composable->tuple(c);
      Elem        r = m(c);
      if (d1(r) != d1(t[0]) || d0(r) != d0(t[1])) {
        return "composite of " + std::to_string(t[0]) + " and " + std::to_string(t[1])
               + " has the wrong endpoints";
      }
    }
    for (Elem a = 0; a < x1->size(); ++a) {
      if (compose(s0(d1(a)), a) != a || compose(a, s0(d0(a))) != a) {
        return "units fail at arrow " + std::to_string(a);
      }
    }
    // associativity, grouping arrows by source
    std::vector<std::vector<Elem>> from(x0->size());
    for (Elem a = 0; a < x1->size(); ++a) {
      from[d1(a)].push_back(a);
    }
    for (Elem a = 0; a < x1->size(); ++a) {
      for (Elem b : from[d0(a)]) {
        Elem ab = compose(a, b);
        for (Elem c : from[d0(b)]) {
          if (compose(ab, c) != compose(a, compose(b, c))) {
            return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b)
                   + "," + std::to_string(c) + ")";
          }
        }
      }
    }
    for (Elem a = 0; a < x1->size(); ++a) {
      bool found = false;
      for (Elem b : from[d0(a)]) {
        if (compose(a, b) == s0(d1(a)) && compose(b, a) == s0(d0(a))) {
          found = true;
          break;
        }
      }
      if (!found) {
        return "arrow " + std::to_string(a) + " has no inverse";
      }
    }
    return std::nullopt;
  }

}  // namespace simal
