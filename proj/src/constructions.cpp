#include "simal/constructions.hpp"

#include "simal/error.hpp"

namespace simal {

  Decalage decalage(SimplicialPtr const& x) {
    unsigned const N = x->truncation();
    if (N < 2) {
      fail(Errc::precondition_unmet, "decalage needs truncation at least 2");
    }
    std::vector<AlgebraPtr>          levels(x->levels().begin() + 1, x->levels().end());
    TruncatedSimplicialAlgebra::Maps faces(N), degs(N - 1);
    for (unsigned n = 1; n < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        faces[n].push_back(x->d(n + 1, i));
      }
    }
    for (unsigned n = 0; n + 1 < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        degs[n].push_back(x->s(n + 1, i));
      }
    }
    auto dec = TruncatedSimplicialAlgebra::make(
        "Dec(" + x->name() + ")", std::move(levels), std::move(faces), std::move(degs));
    auto                      base = truncate(x, N - 1);
    std::vector<Homomorphism> eps;
    for (unsigned n = 0; n < N; ++n) {
      eps.push_back(x->d(n + 1, n + 1));
    }
    return {dec, SimplicialMorphism::trusted(dec, base, std::move(eps))};
  }

  Coskeleton coskeleton_levels(SimplicialPtr const& x, unsigned to_level, size_t budget) {
    unsigned const N = x->truncation();
    if (to_level < N) {
      fail(Errc::precondition_unmet, "coskeleton target level is below the truncation");
    }
    Coskeleton out;
    out.kernels.assign(to_level + 1, nullptr);
    if (to_level == N) {
      out.object = x;
      return out;
    }
    std::vector<AlgebraPtr> levels = x->levels();
    auto                    faces  = x->faces();
    auto                    degs   = x->degeneracies();
    std::string const       name   = "cosk(" + x->name() + ")";
    for (unsigned n = N + 1; n <= to_level; ++n) {
      auto      cur = TruncatedSimplicialAlgebra::trusted(name, levels, faces, degs);
      FaceLimit K   = simplicial_kernel(cur, n, budget);
      auto      lvl = K.limit->algebra;
      out.kernels[n] = K.limit;

      std::vector<Homomorphism> fn;
      for (unsigned i = 0; i <= n; ++i) {
        fn.push_back(Homomorphism::trusted(lvl, levels[n - 1], K.limit->projections[i].map()));
      }
      // s_i x has faces s_{i-1} d_j x (j < i), x (j = i, i+1), s_i d_{j-1} x (j > i+1)
      std::vector<Homomorphism> sn;
      AlgebraPtr const&         below = levels[n - 1];
      std::vector<Elem>         t(n + 1);
      for (unsigned i = 0; i < n; ++i) {
        std::vector<Elem> map(below->size());
        for (Elem e = 0; e < below->size(); ++e) {
          for (unsigned j = 0; j <= n; ++j) {
            if (j < i) {
              t[j] = cur->s(n - 2, i - 1)(cur->d(n - 1, j)(e));
            } else if (j == i || j == i + 1) {
              t[j] = e;
            } else {
              t[j] = cur->s(n - 2, i)(cur->d(n - 1, j - 1)(e));
            }
          }
          size_t pos = K.limit->find(t);
          if (pos == TupleIndex::npos) {
            fail(Errc::property_violation,
                 name + ": degenerate tuple is not in the simplicial kernel");
          }
          map[e] = static_cast<Elem>(pos);
        }
        sn.push_back(Homomorphism::trusted(below, lvl, std::move(map)));
      }
      levels.push_back(lvl);
      faces.push_back(std::move(fn));
      degs.push_back(std::move(sn));
    }
    out.object = TruncatedSimplicialAlgebra::make(
        name, std::move(levels), std::move(faces), std::move(degs));
    return out;
  }

  SimplicialPtr coskeleton(SimplicialPtr const& x, unsigned to_level, size_t budget) {
    return coskeleton_levels(x, to_level, budget).object;
  }

  SimplicialMorphism coskeleton_comparison(SimplicialPtr const& x, unsigned k, size_t budget) {
    unsigned const N = x->truncation();
    auto           c = coskeleton_levels(truncate(x, k), N, budget);
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= N; ++n) {
      if (n <= k) {
        comps.push_back(Homomorphism::identity(x->level(n)));
        continue;
      }
      std::vector<Elem> map(x->level(n)->size());
      std::vector<Elem> t(n + 1);
      for (Elem e = 0; e < map.size(); ++e) {
        for (unsigned i = 0; i <= n; ++i) {
          t[i] = comps[n - 1](x->d(n, i)(e));
        }
        map[e] = static_cast<Elem>(c.kernels[n]->find(t));
      }
      comps.push_back(Homomorphism::trusted(x->level(n), c.object->level(n), std::move(map)));
    }
    return SimplicialMorphism::trusted(x, c.object, std::move(comps));
  }

  Nerve nerve_levels(InternalGroupoid const& g, unsigned to_level, size_t budget) {
    if (to_level < 1) {
      fail(Errc::precondition_unmet, "nerve needs at least level 1");
    }
    std::string const     name = "N(" + g.x1->name() + ")";
    std::vector<LimitPtr> paths(to_level + 1, nullptr);
    if (to_level >= 2) {
      paths[2] = g.composable;
    }
    for (unsigned n = 3; n <= to_level; ++n) {
      std::vector<LinkConstraint> cs;
      for (size_t c = 0; c + 1 < n; ++c) {
        cs.push_back({c, &g.d0, c + 1, &g.d1});
      }
      paths[n] = make_limit(name + "_" + std::to_string(n),
                            std::vector<AlgebraPtr>(n, g.x1),
                            compatible_tuples(std::vector<size_t>(n, g.x1->size()), cs, budget));
    }
    std::vector<AlgebraPtr> levels{g.x0, g.x1};
    for (unsigned n = 2; n <= to_level; ++n) {
      levels.push_back(paths[n]->algebra);
    }
    // element of level n as its path of arrows
    auto path = [&](unsigned n, Elem e, std::vector<Elem>& out) {
      out.assign(n, 0);
      if (n == 1) {
        out[0] = e;
      } else {
        Elem const* t = paths[n]->tuple(e);
        std::copy(t, t + n, out.begin());
      }
    };
    auto lookup = [&](unsigned n, std::vector<Elem> const& p) -> Elem {
      if (n == 1) {
        return p[0];
      }
      size_t pos = paths[n]->find(p);
      if (pos == TupleIndex::npos) {
        fail(Errc::property_violation, name + ": path is not composable");
      }
      return static_cast<Elem>(pos);
    };

    TruncatedSimplicialAlgebra::Maps faces(to_level + 1), degs(to_level);
    faces[1] = {g.d0, g.d1};
    degs[0]  = {g.s0};
    std::vector<Elem> p, q;
    for (unsigned n = 2; n <= to_level; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        std::vector<Elem> map(levels[n]->size());
        for (Elem e = 0; e < map.size(); ++e) {
          path(n, e, p);
          if (i == 0) {
            q.assign(p.begin() + 1, p.end());
          } else if (i == n) {
            q.assign(p.begin(), p.end() - 1);
          } else {
            q.assign(p.begin(), p.begin() + (i - 1));
            q.push_back(g.compose(p[i - 1], p[i]));
            q.insert(q.end(), p.begin() + i + 1, p.end());
          }
          map[e] = lookup(n - 1, q);
        }
        faces[n].push_back(Homomorphism::trusted(levels[n], levels[n - 1], std::move(map)));
      }
    }
    for (unsigned n = 1; n < to_level; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        std::vector<Elem> map(levels[n]->size());
        for (Elem e = 0; e < map.size(); ++e) {
          path(n, e, p);
          Elem v = i == 0 ? g.d1(p[0]) : g.d0(p[i - 1]);
          q      = p;
          q.insert(q.begin() + i, g.s0(v));
          map[e] = lookup(n + 1, q);
        }
        degs[n].push_back(Homomorphism::trusted(levels[n], levels[n + 1], std::move(map)));
      }
    }
    return {TruncatedSimplicialAlgebra::make(
                name, std::move(levels), std::move(faces), std::move(degs)),
            paths};
  }

  SimplicialPtr nerve(InternalGroupoid const& g, unsigned to_level, size_t budget) {
    return nerve_levels(g, to_level, budget).object;
  }

  SimplicialPtr sk1_module_variety(SimplicialPtr const& graph) {
    Signature const& sig = graph->signature();
    auto             add = sig.find("add"), neg = sig.find("neg"), zero = sig.find("zero");
    if (sig.size() != 3 || !add || !neg || !zero || sig[*add].arity != 2
        || sig[*neg].arity != 1 || sig[*zero].arity != 0) {
      fail(Errc::unsupported_variety,
           "Sk1 is only available over the signature add/neg/zero");
    }
    SimplicialPtr     g  = truncate(graph, 1);
    AlgebraPtr const& x1 = g->level(1);
    for (Elem a = 0; a < x1->size(); ++a) {
      for (Elem b = 0; b < a; ++b) {
        if (x1->apply(*add, {a, b}) != x1->apply(*add, {b, a})) {
          fail(Errc::unsupported_variety, "Sk1 needs a commutative addition");
        }
      }
    }
    Homomorphism const &d0 = g->d(1, 0), &d1 = g->d(1, 1), &s0 = g->s(0, 0);
    auto plus = [&](Elem a, Elem b) {
      return x1->apply(*add, {a, b});
    };
    Elem const z = x1->apply(*zero, std::vector<Elem>{});

    LimitPtr P = product(x1, x1);
    auto     at = [&](Elem u, Elem v) {
      Elem t[2] = {u, v};
      return static_cast<Elem>(P->find(t));
    };
    std::vector<std::pair<Elem, Elem>> gens;
    for (Elem a = 0; a < g->level(0)->size(); ++a) {
      Elem s = s0(a);
      gens.emplace_back(at(s, x1->apply(*neg, {s})), at(z, z));
    }
    Quotient Q = quotient(P->algebra, Congruence::generated(P->algebra, gens));

    auto face = [&](auto&& formula) {
      std::vector<Elem> map(Q.algebra->size(), UINT32_MAX);
      for (Elem e = 0; e < P->tuples.size(); ++e) {
        Elem const* t  = P->tuple(e);
        Elem        v  = formula(t[0], t[1]);
        Elem&       sl = map[Q.projection(e)];
        if (sl != UINT32_MAX && sl != v) {
          fail(Errc::property_violation, "Sk1 face is not defined on the pushout");
        }
        sl = v;
      }
      return Homomorphism::trusted(Q.algebra, x1, std::move(map));
    };
    auto inject = [&](bool left) {
      std::vector<Elem> map(x1->size());
      for (Elem u = 0; u < x1->size(); ++u) {
        map[u] = Q.projection(left ? at(u, z) : at(z, u));
      }
      return Homomorphism::trusted(x1, Q.algebra, std::move(map));
    };

    TruncatedSimplicialAlgebra::Maps faces(3), degs(2);
    faces[1] = {d0, d1};
    faces[2] = {face([&](Elem u, Elem v) { return plus(u, s0(d0(v))); }),
                face([&](Elem u, Elem v) { return plus(u, v); }),
                face([&](Elem u, Elem v) { return plus(s0(d1(u)), v); })};
    degs[0] = {s0};
    degs[1] = {inject(true), inject(false)};
    return TruncatedSimplicialAlgebra::make("Sk1(" + graph->name() + ")",
                                            {g->level(0), x1, Q.algebra},
                                            std::move(faces),
                                            std::move(degs));
  }

  Elem edge(SimplicialPtr const& x, unsigned n, unsigned k, Elem e) {
    if (k < 1 || k > n) {
      fail(Errc::precondition_unmet, "edge index out of range");
    }
    unsigned lvl = n;
    while (lvl > k) {
      e = x->d(lvl, lvl)(e);
      --lvl;
    }
    for (unsigned t = 0; t + 1 < k; ++t) {
      e = x->d(lvl, 0)(e);
      --lvl;
    }
    return e;
  }

  SimplicialPtr underlying_graph(InternalGroupoid const& g, std::string name) {
    return make_graph(std::move(name), g.x0, g.x1, g.d0, g.d1, g.s0);
  }

}  // namespace simal
