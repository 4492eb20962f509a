#include "simal/reflection.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "simal/commutator.hpp"
#include "simal/error.hpp"

namespace simal {

  Congruence face_kernel(SimplicialPtr const& x, unsigned n, unsigned i) {
    return kernel_pair(x->d(n, i));
  }

  namespace {

    std::vector<std::vector<Congruence>> all_face_kernels(SimplicialPtr const& x) {
      std::vector<std::vector<Congruence>> D(x->truncation() + 1);
      for (unsigned n = 1; n <= x->truncation(); ++n) {
        for (unsigned i = 0; i <= n; ++i) {
          D[n].push_back(face_kernel(x, n, i));
        }
      }
      return D;
    }

    // Map on the classes of a quotient induced by h; fails if h is not
    // constant on classes.
    std::optional<Homomorphism> induce(Homomorphism const& proj,
                                       Homomorphism const& h,
                                       AlgebraPtr const&   cod) {
      std::vector<Elem> map(proj.cod()->size(), UINT32_MAX);
      for (Elem a = 0; a < proj.dom()->size(); ++a) {
        Elem& slot = map[proj(a)];
        if (slot != UINT32_MAX && slot != h(a)) {
          return std::nullopt;
        }
        slot = h(a);
      }
      return Homomorphism::trusted(proj.cod(), cod, std::move(map));
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Groupoid detection
  ////////////////////////////////////////////////////////////////////////

  bool GroupoidCheck::conditions_agree() const {
    for (auto const& l : levels) {
      if (l.all_pairs_trivial != l.outer_pair_trivial
          || l.outer_pair_trivial != l.some_pair_trivial) {
        return false;
      }
    }
    return true;
  }

  GroupoidCheck is_internal_groupoid(SimplicialPtr const& x) {
    if (x->truncation() < 2) {
      fail(Errc::precondition_unmet, "groupoid detection needs truncation at least 2");
    }
    GroupoidCheck out;
    for (unsigned n = 2; n <= x->truncation(); ++n) {
      std::vector<Congruence> D;
      for (unsigned i = 0; i <= n; ++i) {
        D.push_back(face_kernel(x, n, i));
      }
      GroupoidLevel lvl{n, true, false, false, false};
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          bool t = meet(D[i], D[j]).is_identity();
          lvl.all_pairs_trivial &= t;
          lvl.some_pair_trivial |= t;
          if (i == 0 && j == n) {
            lvl.outer_pair_trivial = t;
          }
        }
      }
      // pairs (u, v) with d_{n-1} u = d_0 v, counted by fibers over X_{n-2}
      Homomorphism const &top = x->d(n - 1, n - 1), &bot = x->d(n - 1, 0);
      std::vector<size_t> cu(x->level(n - 2)->size(), 0), cv(cu.size(), 0);
      for (Elem u = 0; u < x->level(n - 1)->size(); ++u) {
        ++cu[top(u)];
        ++cv[bot(u)];
      }
      size_t pb = 0;
      for (size_t k = 0; k < cu.size(); ++k) {
        pb += cu[k] * cv[k];
      }
      std::unordered_set<uint64_t> seen;
      for (Elem e = 0; e < x->level(n)->size(); ++e) {
        seen.insert((uint64_t(x->d(n, 0)(e)) << 32) | x->d(n, n)(e));
      }
      lvl.square_is_pullback = seen.size() == pb && pb == x->level(n)->size();
      if (!(lvl.outer_pair_trivial && lvl.square_is_pullback) && out.groupoid) {
        out.groupoid      = false;
        out.failing_level = n;
        Congruence w      = meet(D[0], D[n]);
        for (Elem e = 0; e < w.size(); ++e) {
          if (w.block(e) != e) {
            out.witness = {w.block(e), e};
            break;
          }
        }
      }
      out.levels.push_back(lvl);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // H_1 and H_n
  ////////////////////////////////////////////////////////////////////////

  H1Candidates h1_candidates(SimplicialPtr const& x) {
    if (x->truncation() < 2) {
      fail(Errc::precondition_unmet, "H1 needs truncation at least 2");
    }
    Congruence D0 = face_kernel(x, 2, 0), D1 = face_kernel(x, 2, 1),
               D2 = face_kernel(x, 2, 2);
    return {image_congruence(x->d(2, 0), meet(D1, D2)),
            image_congruence(x->d(2, 1), meet(D0, D2)),
            image_congruence(x->d(2, 2), meet(D0, D1))};
  }

  Congruence h1(SimplicialPtr const& x) {
    if (x->truncation() < 3) {
      if (x->truncation() < 2) {
        fail(Errc::precondition_unmet, "H1 needs truncation at least 2");
      }
      return image_congruence(
          x->d(2, 1), meet(face_kernel(x, 2, 0), face_kernel(x, 2, 2)));
    }
    H1Candidates c = h1_candidates(x);
    if (!c.all_equal()) {
      fail(Errc::triple_equality_violated,
           x->name() + ": d0(D1^D2), d1(D0^D2), d2(D0^D1) differ");
    }
    return c.via_d1;
  }

  Congruence hn(SimplicialPtr const& x, unsigned n) {
    if (n < 1 || n > x->truncation()) {
      fail(Errc::precondition_unmet, "H_n needs 1 <= n <= truncation");
    }
    std::vector<Congruence> D;
    for (unsigned i = 0; i <= n; ++i) {
      D.push_back(face_kernel(x, n, i));
    }
    std::vector<Congruence> meets;
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned i = 0; i < j; ++i) {
        meets.push_back(meet(D[i], D[j]));
      }
    }
    return join(meets);
  }

  ////////////////////////////////////////////////////////////////////////
  // Pi_1
  ////////////////////////////////////////////////////////////////////////

  ReflectionResult pi1(SimplicialPtr const& x, size_t budget) {
    unsigned const N = x->truncation();
    if (N < 2) {
      fail(Errc::precondition_unmet, "the reflection needs truncation at least 2");
    }
    Congruence        H1 = h1(x);
    Quotient          Q  = quotient(x->level(1), H1);
    Homomorphism const& eta1 = Q.projection;

    auto d0 = induce(eta1, x->d(1, 0), x->level(0));
    auto d1 = induce(eta1, x->d(1, 1), x->level(0));
    if (!d0 || !d1) {
      fail(Errc::property_violation, x->name() + ": H1 is not below D0 ^ D1");
    }
    Homomorphism s0 = compose(eta1, x->s(0, 0));
    s0 = Homomorphism::trusted(x->level(0), Q.algebra, s0.map());

    LimitPtr          comp = pullback(*d0, *d1);
    std::vector<Elem> m(comp->tuples.size(), UINT32_MAX);
    for (Elem e = 0; e < x->level(2)->size(); ++e) {
      Elem   t[2] = {eta1(x->d(2, 2)(e)), eta1(x->d(2, 0)(e))};
      size_t c    = comp->find(t);
      Elem   v    = eta1(x->d(2, 1)(e));
      if (c == TupleIndex::npos) {
        fail(Errc::composition_ill_defined,
             x->name() + ": outer faces of a 2-simplex are not composable");
      }
      if (m[c] != UINT32_MAX && m[c] != v) {
        fail(Errc::composition_ill_defined,
             x->name() + ": composite depends on the chosen 2-simplex");
      }
      m[c] = v;
    }
    for (Elem v : m) {
      if (v == UINT32_MAX) {
        fail(Errc::composition_ill_defined,
             x->name() + ": some composable pair has no 2-simplex");
      }
    }
    if (m != maltsev_composition(Q.algebra, *d0, s0, *comp)) {
      fail(Errc::property_violation,
           x->name() + ": solved composition differs from the Mal'tsev composite");
    }

    ReflectionResult r;
    try {
      r.pi1 = InternalGroupoid::make(x->level(0), Q.algebra, *d0, *d1, s0, m);
    } catch (Error const& e) {
      fail(Errc::property_violation, x->name() + ": reflection is not a groupoid: " + e.what());
    }
    Nerve nv = nerve_levels(r.pi1, N, budget);
    r.nerve  = nv.object;
    r.paths  = nv.paths;

    std::vector<Homomorphism> comps{Homomorphism::identity(x->level(0)),
                                    Homomorphism::trusted(x->level(1), Q.algebra, eta1.map())};
    for (unsigned n = 2; n <= N; ++n) {
      std::vector<Elem> map(x->level(n)->size());
      std::vector<Elem> t(n);
      for (Elem e = 0; e < map.size(); ++e) {
        for (unsigned k = 1; k <= n; ++k) {
          t[k - 1] = eta1(edge(x, n, k, e));
        }
        size_t pos = nv.paths[n]->find(t);
        if (pos == TupleIndex::npos) {
          fail(Errc::property_violation, x->name() + ": edges of a simplex are not composable");
        }
        map[e] = static_cast<Elem>(pos);
      }
      comps.push_back(Homomorphism::trusted(x->level(n), r.nerve->level(n), std::move(map)));
    }
    r.eta = SimplicialMorphism::trusted(x, r.nerve, std::move(comps));
    if (auto w = r.eta.commutation_failure()) {
      fail(Errc::property_violation, x->name() + ": unit is not simplicial: " + *w);
    }
    r.h.push_back(Congruence::identity(x->level(0)));
    r.h.push_back(H1);
    for (unsigned n = 2; n <= N; ++n) {
      if (!r.eta[n].is_surjective()) {
        fail(Errc::property_violation,
             x->name() + ": eta_" + std::to_string(n) + " is not onto");
      }
      Congruence k = kernel_pair(r.eta[n]);
      if (!(k == hn(x, n))) {
        fail(Errc::property_violation,
             x->name() + ": Eq[eta_" + std::to_string(n) + "] differs from the join formula");
      }
      r.h.push_back(std::move(k));
    }
    return r;
  }

  Factorization1 universal_property_check(ReflectionResult const& r, SimplicialMorphism const& f) {
    if (f.dom() != r.eta.dom()) {
      fail(Errc::precondition_unmet, "morphism does not start at the reflected object");
    }
    Factorization1            out;
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      Homomorphism const& eta = r.eta[n];
      std::vector<Elem>   map(eta.cod()->size(), UINT32_MAX);
      std::vector<Elem>   rep(eta.cod()->size(), 0);
      for (Elem e = 0; e < eta.dom()->size(); ++e) {
        Elem& slot = map[eta(e)];
        if (slot == UINT32_MAX) {
          slot        = f[n](e);
          rep[eta(e)] = e;
        } else if (slot != f[n](e)) {
          out.witness = "level " + std::to_string(n) + ": " + std::to_string(rep[eta(e)])
                        + " and " + std::to_string(e)
                        + " have the same image under eta but not under f";
          return out;
        }
      }
      comps.push_back(Homomorphism::trusted(eta.cod(), f.cod()->level(n), std::move(map)));
    }
    auto g = SimplicialMorphism::trusted(r.nerve, f.cod(), std::move(comps));
    if (auto w = g.commutation_failure()) {
      out.witness = "induced map is not simplicial: " + *w;
      return out;
    }
    out.factors = true;
    out.g       = std::move(g);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool is_homomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b, std::vector<Elem> const& f) {
      std::vector<Elem> args, img;
      for (size_t op = 0; op < a.signature().size(); ++op) {
        unsigned r     = a.signature()[op].arity;
        size_t   total = checked_power(a.size(), r);
        args.assign(r, 0);
        img.assign(r, 0);
        for (size_t idx = 0; idx < total; ++idx) {
          size_t rem = idx;
          for (unsigned p = r; p-- > 0;) {
            args[p] = static_cast<Elem>(rem % a.size());
            img[p]  = f[args[p]];
            rem /= a.size();
          }
          if (f[a.table(op)[idx]] != b.apply(op, img)) {
            return false;
          }
        }
      }
      return true;
    }

    // Assigns images to 0, 1, .. in order from the candidate lists, pruning
    // on table entries whose arguments and value are already assigned.
    class MapSearch {
     public:
      MapSearch(AlgebraPtr a, AlgebraPtr b, std::vector<std::vector<Elem>> cand)
          : _a(std::move(a)), _b(std::move(b)), _cand(std::move(cand)),
            _f(_a->size(), UINT32_MAX) {}

      template <class F>
      void run(F&& found) {
        if (_a->size() == 0) {
          if (is_homomorphism(*_a, *_b, _f)) {
            found(_f);
          }
          return;
        }
        step(0, found);
      }

     private:
      bool consistent(Elem k) const {
        std::vector<Elem> args, img;
        for (size_t op = 0; op < _a->signature().size(); ++op) {
          unsigned r = _a->signature()[op].arity;
          if (r == 0) {
            continue;
          }
          size_t total = checked_power(k + 1, r);
          args.assign(r, 0);
          img.assign(r, 0);
          for (size_t idx = 0; idx < total; ++idx) {
            size_t rem = idx;
            bool   hit = false;
            for (unsigned p = r; p-- > 0;) {
              args[p] = static_cast<Elem>(rem % (k + 1));
              rem /= (k + 1);
              hit |= args[p] == k;
              img[p] = _f[args[p]];
            }
            if (!hit) {
              continue;
            }
            Elem v = _a->apply(op, args);
            if (v > k) {
              continue;
            }
            if (_f[v] != _b->apply(op, img)) {
              return false;
            }
          }
        }
        return true;
      }

      template <class F>
      bool step(Elem k, F&& found) {
        for (Elem c : _cand[k]) {
          _f[k] = c;
          if (!consistent(k)) {
            continue;
          }
          if (k + 1 == _a->size()) {
            if (is_homomorphism(*_a, *_b, _f) && !found(_f)) {
              return false;
            }
          } else if (!step(k + 1, found)) {
            return false;
          }
        }
        _f[k] = UINT32_MAX;
        return true;
      }

      AlgebraPtr                     _a, _b;
      std::vector<std::vector<Elem>> _cand;
      std::vector<Elem>              _f;
    };

    std::vector<std::vector<Elem>> constant_candidates(AlgebraPtr const& a, AlgebraPtr const& b) {
      std::vector<Elem> all(b->size());
      for (Elem v = 0; v < b->size(); ++v) {
        all[v] = v;
      }
      std::vector<std::vector<Elem>> cand(a->size(), all);
      for (size_t op = 0; op < a->signature().size(); ++op) {
        if (a->signature()[op].arity == 0) {
          Elem ca = a->table(op)[0], cb = b->table(op)[0];
          bool ok = std::find(cand[ca].begin(), cand[ca].end(), cb) != cand[ca].end();
          cand[ca] = ok ? std::vector<Elem>{cb} : std::vector<Elem>{};
        }
      }
      return cand;
    }

  }  // namespace

  std::vector<Homomorphism> enumerate_homomorphisms(AlgebraPtr const& a,
                                                    AlgebraPtr const& b,
                                                    size_t            limit) {
    if (!(a->signature() == b->signature())) {
      fail(Errc::signature_mismatch, "homomorphisms need a shared signature");
    }
    std::vector<Homomorphism> out;
    MapSearch(a, b, constant_candidates(a, b)).run([&](std::vector<Elem> const& f) {
      if (out.size() >= limit) {
        fail(Errc::budget_exceeded, "more than " + std::to_string(limit) + " homomorphisms");
      }
      out.push_back(Homomorphism::trusted(a, b, f));
      return true;
    });
    return out;
  }

  std::vector<SimplicialMorphism> enumerate_simplicial_morphisms(SimplicialPtr const& x,
                                                                 SimplicialPtr const& y,
                                                                 size_t               limit) {
    if (x->truncation() != y->truncation()) {
      fail(Errc::precondition_unmet, "morphisms need equal truncations");
    }
    unsigned const                  N = x->truncation();
    std::vector<SimplicialMorphism> out;

    // faces of every element of Y_n, grouped
    std::vector<std::map<std::vector<Elem>, std::vector<Elem>>> by_faces(N + 1);
    for (unsigned n = 1; n <= N; ++n) {
      for (Elem c = 0; c < y->level(n)->size(); ++c) {
        std::vector<Elem> key;
        for (unsigned i = 0; i <= n; ++i) {
          key.push_back(y->d(n, i)(c));
        }
        by_faces[n][key].push_back(c);
      }
    }

    std::vector<Homomorphism> comps;
    std::function<void(unsigned)> extend = [&](unsigned n) {
      if (n > N) {
        if (out.size() >= limit) {
          fail(Errc::budget_exceeded,
               "more than " + std::to_string(limit) + " simplicial morphisms");
        }
        out.push_back(SimplicialMorphism::trusted(x, y, comps));
        return;
      }
      std::vector<std::vector<Elem>> cand;
      if (n == 0) {
        cand = constant_candidates(x->level(0), y->level(0));
      } else {
        cand.resize(x->level(n)->size());
        for (Elem e = 0; e < cand.size(); ++e) {
          std::vector<Elem> key;
          for (unsigned i = 0; i <= n; ++i) {
            key.push_back(comps[n - 1](x->d(n, i)(e)));
          }
          auto it = by_faces[n].find(key);
          if (it != by_faces[n].end()) {
            cand[e] = it->second;
          }
        }
        for (unsigned i = 0; i < n; ++i) {
          for (Elem v = 0; v < x->level(n - 1)->size(); ++v) {
            Elem  e    = x->s(n - 1, i)(v);
            Elem  want = y->s(n - 1, i)(comps[n - 1](v));
            auto& c    = cand[e];
            bool  ok   = std::find(c.begin(), c.end(), want) != c.end();
            c          = ok ? std::vector<Elem>{want} : std::vector<Elem>{};
          }
        }
        for (unsigned op = 0; op < x->signature().size(); ++op) {
          if (x->signature()[op].arity == 0) {
            Elem  e    = x->level(n)->table(op)[0];
            Elem  want = y->level(n)->table(op)[0];
            auto& c    = cand[e];
            bool  ok   = std::find(c.begin(), c.end(), want) != c.end();
            c          = ok ? std::vector<Elem>{want} : std::vector<Elem>{};
          }
        }
      }
      MapSearch(x->level(n), y->level(n), std::move(cand)).run([&](std::vector<Elem> const& f) {
        comps.push_back(Homomorphism::trusted(x->level(n), y->level(n), f));
        extend(n + 1);
        comps.pop_back();
        return true;
      });
    };
    extend(0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflexive graphs
  ////////////////////////////////////////////////////////////////////////

  GraphReflection graph_reflection(SimplicialPtr const& graph) {
    SimplicialPtr g  = truncate(graph, 1);
    Congruence    D0 = face_kernel(g, 1, 0), D1 = face_kernel(g, 1, 1);
    Congruence    C  = tc_commutator(D0, D1);
    if (!C.leq(meet(D0, D1))) {
      fail(Errc::property_violation, graph->name() + ": commutator exceeds D0 ^ D1");
    }
    Quotient Q  = quotient(g->level(1), C);
    auto     d0 = induce(Q.projection, g->d(1, 0), g->level(0));
    auto     d1 = induce(Q.projection, g->d(1, 1), g->level(0));
    auto     s0 = Homomorphism::trusted(g->level(0), Q.algebra, compose(Q.projection, g->s(0, 0)).map());
    GraphReflection r{C, Q.projection, {}};
    try {
      r.groupoid = InternalGroupoid::from_graph(g->level(0), Q.algebra, *d0, *d1, s0);
    } catch (Error const& e) {
      fail(Errc::property_violation,
           graph->name() + ": commutator quotient is not a groupoid: " + e.what());
    }
    return r;
  }

  bool graph_factors(GraphReflection const& r, SimplicialMorphism const& f) {
    return induce(r.eta1, f[1], f.cod()->level(1)).has_value();
  }

  CommutatorChain commutator_chain_check(SimplicialPtr const& x) {
    CommutatorChain c;
    Congruence      D0 = face_kernel(x, 1, 0), D1 = face_kernel(x, 1, 1);
    c.commutator       = tc_commutator(D0, D1);
    c.h1               = h1(x);
    c.meet             = meet(D0, D1);
    c.holds            = c.commutator.leq(c.h1) && c.h1.leq(c.meet);
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Images of meets
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> image_of_meet_failure(SimplicialPtr const& x) {
    auto D = all_face_kernels(x);
    for (unsigned m = 3; m <= x->truncation(); ++m) {
      for (unsigned k = 2; k <= m; ++k) {
        for (unsigned j = 1; j < k; ++j) {
          for (unsigned i = 0; i < j; ++i) {
            auto const& L = D[m - 1];
            std::string at = " at level " + std::to_string(m) + " for (" + std::to_string(i)
                             + "," + std::to_string(j) + "," + std::to_string(k) + ")";
            if (!(image_congruence(x->d(m, k), meet(D[m][i], D[m][j])) == meet(L[i], L[j]))) {
              return "d_k(D_i^D_j) != D_i^D_j" + at;
            }
            if (!(image_congruence(x->d(m, j), meet(D[m][i], D[m][k]))
                  == meet(L[i], L[k - 1]))) {
              return "d_j(D_i^D_k) != D_i^D_{k-1}" + at;
            }
            if (!(image_congruence(x->d(m, i), meet(D[m][j], D[m][k]))
                  == meet(L[j - 1], L[k - 1]))) {
              return "d_i(D_j^D_k) != D_{j-1}^D_{k-1}" + at;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> image_of_meet_failure(SimplicialMorphism const& f) {
    auto DX = all_face_kernels(f.dom());
    auto DY = all_face_kernels(f.cod());
    for (unsigned n = 2; n <= f.truncation(); ++n) {
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          if (!(image_congruence(f[n], meet(DX[n][i], DX[n][j])) == meet(DY[n][i], DY[n][j]))) {
            return "f(D_" + std::to_string(i) + "^D_" + std::to_string(j) + ") differs at level "
                   + std::to_string(n);
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace simal
