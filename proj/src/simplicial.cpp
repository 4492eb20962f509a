#include "simal/simplicial.hpp"

#include <algorithm>

#include "simal/error.hpp"

namespace simal {

  std::string IdentityViolation::describe() const {
    return which + " fails at level " + std::to_string(level) + " for i="
           + std::to_string(i) + ", j=" + std::to_string(j) + " on element "
           + std::to_string(witness);
  }

  ////////////////////////////////////////////////////////////////////////
  // TruncatedSimplicialAlgebra
  ////////////////////////////////////////////////////////////////////////

  SimplicialPtr TruncatedSimplicialAlgebra::trusted(std::string             name,
                                                    std::vector<AlgebraPtr> levels,
                                                    Maps                    faces,
                                                    Maps degeneracies) {
    auto* x          = new TruncatedSimplicialAlgebra();
    x->_name         = std::move(name);
    x->_levels       = std::move(levels);
    x->_faces        = std::move(faces);
    x->_degeneracies = std::move(degeneracies);
    return SimplicialPtr(x);
  }

  SimplicialPtr TruncatedSimplicialAlgebra::make(std::string             name,
                                                 std::vector<AlgebraPtr> levels,
                                                 Maps                    faces,
                                                 Maps degeneracies) {
    if (levels.size() < 2) {
      fail(Errc::precondition_unmet, name + ": truncation must be at least 1");
    }
    size_t const N = levels.size() - 1;
    if (faces.size() != N + 1 || degeneracies.size() != N) {
      fail(Errc::malformed_table, name + ": wrong number of face or degeneracy levels");
    }
    for (size_t n = 0; n <= N; ++n) {
      if (!(levels[n]->signature() == levels[0]->signature())) {
        fail(Errc::signature_mismatch, name + ": levels have different signatures");
      }
    }
    for (size_t n = 1; n <= N; ++n) {
      if (faces[n].size() != n + 1) {
        fail(Errc::malformed_table,
             name + ": level " + std::to_string(n) + " needs "
                 + std::to_string(n + 1) + " faces");
      }
      for (auto const& d : faces[n]) {
        if (d.dom() != levels[n] || d.cod() != levels[n - 1]) {
          fail(Errc::malformed_table,
               name + ": a face out of level " + std::to_string(n)
                   + " has the wrong endpoints");
        }
      }
    }
    for (size_t n = 0; n < N; ++n) {
      if (degeneracies[n].size() != n + 1) {
        fail(Errc::malformed_table,
             name + ": level " + std::to_string(n) + " needs "
                 + std::to_string(n + 1) + " degeneracies");
      }
      for (auto const& s : degeneracies[n]) {
        if (s.dom() != levels[n] || s.cod() != levels[n + 1]) {
          fail(Errc::malformed_table,
               name + ": a degeneracy out of level " + std::to_string(n)
                   + " has the wrong endpoints");
        }
      }
    }
    auto x = trusted(std::move(name),
                     std::move(levels),
                     std::move(faces),
                     std::move(degeneracies));
    if (auto v = x->check_identities()) {
      fail(Errc::identity_violated, x->name() + ": " + v->describe());
    }
    return x;
  }

  size_t TruncatedSimplicialAlgebra::max_level_size() const {
    size_t m = 0;
    for (auto const& l : _levels) {
      m = std::max(m, l->size());
    }
    return m;
  }

  std::optional<IdentityViolation> TruncatedSimplicialAlgebra::check_identities() const {
    unsigned const N = truncation();
    for (unsigned n = 0; n <= N; ++n) {
      size_t const sz = _levels[n]->size();
      if (n >= 2) {
        for (unsigned j = 1; j <= n; ++j) {
          for (unsigned i = 0; i < j; ++i) {
            auto const &a = d(n - 1, i), &b = d(n, j), &c = d(n - 1, j - 1),
                       &e = d(n, i);
            for (Elem x = 0; x < sz; ++x) {
              if (a(b(x)) != c(e(x))) {
                return IdentityViolation{n, "d_i d_j = d_{j-1} d_i", i, j, x};
              }
            }
          }
        }
      }
      if (n + 2 <= N) {
        for (unsigned j = 0; j <= n; ++j) {
          for (unsigned i = 0; i <= j; ++i) {
            auto const &a = s(n + 1, i), &b = s(n, j), &c = s(n + 1, j + 1),
                       &e = s(n, i);
            for (Elem x = 0; x < sz; ++x) {
              if (a(b(x)) != c(e(x))) {
                return IdentityViolation{n, "s_i s_j = s_{j+1} s_i", i, j, x};
              }
            }
          }
        }
      }
      if (n + 1 <= N) {
        for (unsigned j = 0; j <= n; ++j) {
          auto const& sj = s(n, j);
          for (unsigned i = 0; i <= n + 1; ++i) {
            auto const& di = d(n + 1, i);
            for (Elem x = 0; x < sz; ++x) {
              Elem lhs = di(sj(x));
              Elem rhs;
              char const* which;
              if (i < j) {
                rhs   = s(n - 1, j - 1)(d(n, i)(x));
                which = "d_i s_j = s_{j-1} d_i";
              } else if (i == j || i == j + 1) {
                rhs   = x;
                which = "d_j s_j = d_{j+1} s_j = 1";
              } else {
                rhs   = s(n - 1, j)(d(n, i - 1)(x));
                which = "d_i s_j = s_j d_{i-1}";
              }
              if (lhs != rhs) {
                return IdentityViolation{n, which, i, j, x};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  SimplicialPtr validate_simplicial(std::string                      name,
                                    std::vector<AlgebraPtr>          levels,
                                    TruncatedSimplicialAlgebra::Maps faces,
                                    TruncatedSimplicialAlgebra::Maps degeneracies) {
    return TruncatedSimplicialAlgebra::make(std::move(name),
                                            std::move(levels),
                                            std::move(faces),
                                            std::move(degeneracies));
  }

  SimplicialPtr make_graph(std::string  name,
                           AlgebraPtr   x0,
                           AlgebraPtr   x1,
                           Homomorphism d0,
                           Homomorphism d1,
                           Homomorphism s0) {
    TruncatedSimplicialAlgebra::Maps faces(2), degs(1);
    faces[1] = {std::move(d0), std::move(d1)};
    degs[0]  = {std::move(s0)};
    return TruncatedSimplicialAlgebra::make(
        std::move(name), {std::move(x0), std::move(x1)}, std::move(faces), std::move(degs));
  }

  SimplicialPtr constant_object(AlgebraPtr a, unsigned truncation) {
    auto                             id = Homomorphism::identity(a);
    std::vector<AlgebraPtr>          levels(truncation + 1, a);
    TruncatedSimplicialAlgebra::Maps faces(truncation + 1), degs(truncation);
    for (unsigned n = 1; n <= truncation; ++n) {
      faces[n].assign(n + 1, id);
    }
    for (unsigned n = 0; n < truncation; ++n) {
      degs[n].assign(n + 1, id);
    }
    return TruncatedSimplicialAlgebra::make(
        "const(" + a->name() + ")", std::move(levels), std::move(faces), std::move(degs));
  }

  SimplicialPtr truncate(SimplicialPtr const& x, unsigned truncation) {
    if (truncation > x->truncation()) {
      fail(Errc::precondition_unmet, "cannot truncate above the existing truncation");
    }
    if (truncation == x->truncation()) {
      return x;
    }
    std::vector<AlgebraPtr> levels(x->levels().begin(),
                                   x->levels().begin() + truncation + 1);
    auto faces = x->faces();
    auto degs  = x->degeneracies();
    faces.resize(truncation + 1);
    degs.resize(truncation);
    return TruncatedSimplicialAlgebra::trusted(
        x->name(), std::move(levels), std::move(faces), std::move(degs));
  }

  ////////////////////////////////////////////////////////////////////////
  // SimplicialMorphism
  ////////////////////////////////////////////////////////////////////////

  SimplicialMorphism SimplicialMorphism::trusted(SimplicialPtr             dom,
                                                 SimplicialPtr             cod,
                                                 std::vector<Homomorphism> c) {
    return SimplicialMorphism(std::move(dom), std::move(cod), std::move(c));
  }

  SimplicialMorphism SimplicialMorphism::create(SimplicialPtr             dom,
                                                SimplicialPtr             cod,
                                                std::vector<Homomorphism> c) {
    if (dom->truncation() != cod->truncation()) {
      fail(Errc::precondition_unmet, "morphism between objects of different truncation");
    }
    if (c.size() != dom->truncation() + 1) {
      fail(Errc::malformed_table, "morphism needs one component per level");
    }
    for (unsigned n = 0; n < c.size(); ++n) {
      if (c[n].dom()->size() != dom->level(n)->size()
          || c[n].cod()->size() != cod->level(n)->size()) {
        fail(Errc::malformed_table,
             "component " + std::to_string(n) + " has the wrong endpoints");
      }
    }
    SimplicialMorphism f(std::move(dom), std::move(cod), std::move(c));
    if (auto w = f.commutation_failure()) {
      fail(Errc::not_commuting, *w);
    }
    return f;
  }

  SimplicialMorphism SimplicialMorphism::identity(SimplicialPtr x) {
    std::vector<Homomorphism> c;
    for (auto const& l : x->levels()) {
      c.push_back(Homomorphism::identity(l));
    }
    return SimplicialMorphism(x, x, std::move(c));
  }

  std::optional<std::string> SimplicialMorphism::commutation_failure() const {
    unsigned const N = _dom->truncation();
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        auto const &dx = _dom->d(n, i), &dy = _cod->d(n, i);
        for (Elem x = 0; x < _dom->level(n)->size(); ++x) {
          if (_components[n - 1](dx(x)) != dy(_components[n](x))) {
            return "component " + std::to_string(n) + " does not commute with d_"
                   + std::to_string(i) + " at " + std::to_string(x);
          }
        }
      }
    }
    for (unsigned n = 0; n < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        auto const &sx = _dom->s(n, i), &sy = _cod->s(n, i);
        for (Elem x = 0; x < _dom->level(n)->size(); ++x) {
          if (_components[n + 1](sx(x)) != sy(_components[n](x))) {
            return "component " + std::to_string(n) + " does not commute with s_"
                   + std::to_string(i) + " at " + std::to_string(x);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool SimplicialMorphism::levelwise_surjective() const {
    return std::all_of(_components.begin(), _components.end(), [](auto const& h) {
      return h.is_surjective();
    });
  }

  bool SimplicialMorphism::levelwise_injective() const {
    return std::all_of(_components.begin(), _components.end(), [](auto const& h) {
      return h.is_injective();
    });
  }

  bool SimplicialMorphism::levelwise_bijective() const {
    return std::all_of(_components.begin(), _components.end(), [](auto const& h) {
      return h.is_bijective();
    });
  }

  SimplicialMorphism compose(SimplicialMorphism const& g, SimplicialMorphism const& f) {
    std::vector<Homomorphism> c;
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      c.push_back(compose(g[n], f[n]));
    }
    return SimplicialMorphism::trusted(f.dom(), g.cod(), std::move(c));
  }

  SimplicialMorphism truncate(SimplicialMorphism const& f,
                              SimplicialPtr const&      dom,
                              SimplicialPtr const&      cod) {
    std::vector<Homomorphism> c;
    for (unsigned n = 0; n <= dom->truncation(); ++n) {
      c.push_back(Homomorphism::trusted(dom->level(n), cod->level(n), f[n].map()));
    }
    return SimplicialMorphism::trusted(dom, cod, std::move(c));
  }

  SimplicialMorphism to_terminal(SimplicialPtr const& x) {
    Signature const&               sig = x->signature();
    std::vector<std::vector<Elem>> tables;
    for (auto const& op : sig) {
      (void) op;
      tables.push_back({0});
    }
    auto one = FiniteAlgebra::make_trusted(
        "1", sig, 1, std::move(tables), x->level(0)->maltsev_term());
    auto                      t = constant_object(one, x->truncation());
    std::vector<Homomorphism> c;
    for (unsigned n = 0; n <= x->truncation(); ++n) {
      c.push_back(Homomorphism::trusted(
          x->level(n), one, std::vector<Elem>(x->level(n)->size(), 0)));
    }
    return SimplicialMorphism::trusted(x, t, std::move(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // Simplicial congruences
  ////////////////////////////////////////////////////////////////////////

  SimplicialCongruence kernel_pairs(SimplicialMorphism const& f) {
    SimplicialCongruence out;
    for (auto const& c : f.components()) {
      out.push_back(kernel_pair(c));
    }
    return out;
  }

  SimplicialCongruence identity_congruence(SimplicialPtr const& x) {
    SimplicialCongruence out;
    for (auto const& l : x->levels()) {
      out.push_back(Congruence::identity(l));
    }
    return out;
  }

  bool is_simplicial_congruence(SimplicialPtr const& x, SimplicialCongruence const& t) {
    unsigned const N = x->truncation();
    for (unsigned n = 0; n <= N; ++n) {
      Congruence const& th = t[n];
      for (Elem a = 0; a < th.size(); ++a) {
        Elem b = th.block(a);
        if (n >= 1) {
          for (unsigned i = 0; i <= n; ++i) {
            if (!t[n - 1].related(x->d(n, i)(a), x->d(n, i)(b))) {
              return false;
            }
          }
        }
        if (n < N) {
          for (unsigned i = 0; i <= n; ++i) {
            if (!t[n + 1].related(x->s(n, i)(a), x->s(n, i)(b))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool leq(SimplicialCongruence const& a, SimplicialCongruence const& b) {
    for (size_t n = 0; n < a.size(); ++n) {
      if (!a[n].leq(b[n])) {
        return false;
      }
    }
    return true;
  }

  SimplicialCongruence join(SimplicialCongruence const& a, SimplicialCongruence const& b) {
    SimplicialCongruence out;
    for (size_t n = 0; n < a.size(); ++n) {
      out.push_back(join(a[n], b[n]));
    }
    return out;
  }

  SimplicialCongruence meet(SimplicialCongruence const& a, SimplicialCongruence const& b) {
    SimplicialCongruence out;
    for (size_t n = 0; n < a.size(); ++n) {
      out.push_back(meet(a[n], b[n]));
    }
    return out;
  }

  SimplicialCongruence simplicial_congruence_generated(
      SimplicialPtr const&                                   x,
      std::vector<std::vector<std::pair<Elem, Elem>>> const& pairs) {
    unsigned const                 N = x->truncation();
    std::vector<CongruenceBuilder> b;
    for (auto const& l : x->levels()) {
      b.emplace_back(l);
    }
    for (unsigned n = 0; n < pairs.size() && n <= N; ++n) {
      for (auto [u, v] : pairs[n]) {
        b[n].add(u, v);
      }
    }
    // every pair that merged two classes is pushed along faces and
    // degeneracies until nothing changes
    bool changed = true;
    while (changed) {
      changed = false;
      for (unsigned n = 0; n <= N; ++n) {
        auto fresh = b[n].take_new_unions();
        if (fresh.empty()) {
          continue;
        }
        changed = true;
        for (auto [u, v] : fresh) {
          if (n >= 1) {
            for (unsigned i = 0; i <= n; ++i) {
              b[n - 1].add(x->d(n, i)(u), x->d(n, i)(v));
            }
          }
          if (n < N) {
            for (unsigned i = 0; i <= n; ++i) {
              b[n + 1].add(x->s(n, i)(u), x->s(n, i)(v));
            }
          }
        }
      }
    }
    SimplicialCongruence out;
    for (auto& bb : b) {
      out.push_back(bb.result());
    }
    return out;
  }

  SimplicialQuotient levelwise_quotient(SimplicialPtr const& x, SimplicialCongruence const& t) {
    unsigned const            N = x->truncation();
    std::vector<Quotient>     q;
    std::vector<AlgebraPtr>   levels;
    std::vector<Homomorphism> proj;
    for (unsigned n = 0; n <= N; ++n) {
      q.push_back(quotient(x->level(n), t[n]));
      levels.push_back(q.back().algebra);
      proj.push_back(q.back().projection);
    }
    auto induce = [&](Homomorphism const& h, unsigned from, unsigned to) {
      std::vector<Elem> map(levels[from]->size(), UINT32_MAX);
      for (Elem a = 0; a < x->level(from)->size(); ++a) {
        Elem qa = proj[from](a);
        Elem v  = proj[to](h(a));
        if (map[qa] == UINT32_MAX) {
          map[qa] = v;
        } else if (map[qa] != v) {
          fail(Errc::precondition_unmet,
               x->name() + ": levelwise congruence is not simplicial at level "
                   + std::to_string(from));
        }
      }
      return Homomorphism::trusted(levels[from], levels[to], std::move(map));
    };
    TruncatedSimplicialAlgebra::Maps faces(N + 1), degs(N);
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        faces[n].push_back(induce(x->d(n, i), n, n - 1));
      }
    }
    for (unsigned n = 0; n < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        degs[n].push_back(induce(x->s(n, i), n, n + 1));
      }
    }
    auto obj = TruncatedSimplicialAlgebra::make(
        x->name() + "/~", std::move(levels), std::move(faces), std::move(degs));
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= N; ++n) {
      comps.push_back(
          Homomorphism::trusted(x->level(n), obj->level(n), proj[n].map()));
    }
    return {obj, SimplicialMorphism::trusted(x, obj, std::move(comps))};
  }

  SimplicialMorphism induced_map(SimplicialQuotient const& q, SimplicialMorphism const& f) {
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      std::vector<Elem> map(q.object->level(n)->size(), UINT32_MAX);
      for (Elem a = 0; a < f.dom()->level(n)->size(); ++a) {
        Elem qa = q.projection[n](a);
        Elem v  = f[n](a);
        if (map[qa] != UINT32_MAX && map[qa] != v) {
          fail(Errc::precondition_unmet,
               "map is not constant on the classes at level " + std::to_string(n));
        }
        map[qa] = v;
      }
      comps.push_back(
          Homomorphism::trusted(q.object->level(n), f.cod()->level(n), std::move(map)));
    }
    return SimplicialMorphism::trusted(q.object, f.cod(), std::move(comps));
  }

  SimplicialSubobject simplicial_subobject_generated(
      SimplicialPtr const& x, std::vector<std::vector<Elem>> const& gens) {
    unsigned const                 N = x->truncation();
    std::vector<std::vector<Elem>> members(N + 1);
    for (unsigned n = 0; n < gens.size() && n <= N; ++n) {
      members[n] = gens[n];
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (unsigned n = 0; n <= N; ++n) {
        auto sub  = subalgebra_generated(x->level(n), members[n]);
        auto list = sub.inclusion.map();
        if (list.size() != members[n].size()) {
          changed = true;
        }
        members[n] = list;
      }
      for (unsigned n = 0; n <= N; ++n) {
        std::vector<char> in_lo(n >= 1 ? x->level(n - 1)->size() : 0, 0);
        std::vector<char> in_hi(n < N ? x->level(n + 1)->size() : 0, 0);
        if (n >= 1) {
          for (Elem m : members[n - 1]) {
            in_lo[m] = 1;
          }
        }
        if (n < N) {
          for (Elem m : members[n + 1]) {
            in_hi[m] = 1;
          }
        }
        for (Elem a : std::vector<Elem>(members[n])) {
          if (n >= 1) {
            for (unsigned i = 0; i <= n; ++i) {
              Elem v = x->d(n, i)(a);
              if (!in_lo[v]) {
                in_lo[v] = 1;
                members[n - 1].push_back(v);
                changed = true;
              }
            }
          }
          if (n < N) {
            for (unsigned i = 0; i <= n; ++i) {
              Elem v = x->s(n, i)(a);
              if (!in_hi[v]) {
                in_hi[v] = 1;
                members[n + 1].push_back(v);
                changed = true;
              }
            }
          }
        }
      }
    }
    std::vector<Subalgebra> subs;
    std::vector<AlgebraPtr> levels;
    for (unsigned n = 0; n <= N; ++n) {
      subs.push_back(subalgebra_on(x->level(n), members[n]));
      levels.push_back(subs.back().algebra);
    }
    auto restrict = [&](Homomorphism const& h, unsigned from, unsigned to) {
      std::vector<Elem> rank(x->level(to)->size(), UINT32_MAX);
      auto const&       to_list = subs[to].inclusion.map();
      for (Elem r = 0; r < to_list.size(); ++r) {
        rank[to_list[r]] = r;
      }
      auto const&       from_list = subs[from].inclusion.map();
      std::vector<Elem> map(from_list.size());
      for (Elem r = 0; r < from_list.size(); ++r) {
        map[r] = rank[h(from_list[r])];
      }
      return Homomorphism::trusted(levels[from], levels[to], std::move(map));
    };
    TruncatedSimplicialAlgebra::Maps faces(N + 1), degs(N);
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        faces[n].push_back(restrict(x->d(n, i), n, n - 1));
      }
    }
    for (unsigned n = 0; n < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        degs[n].push_back(restrict(x->s(n, i), n, n + 1));
      }
    }
    auto obj = TruncatedSimplicialAlgebra::make(
        x->name() + "_sub", levels, std::move(faces), std::move(degs));
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= N; ++n) {
      comps.push_back(Homomorphism::trusted(
          obj->level(n), x->level(n), subs[n].inclusion.map()));
    }
    return {obj, SimplicialMorphism::trusted(obj, x, std::move(comps))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Levelwise limits
  ////////////////////////////////////////////////////////////////////////

  SimplicialLimit simplicial_limit(std::string                        name,
                                   std::vector<SimplicialPtr> const&  factors,
                                   std::vector<SimplicialLink> const& links,
                                   size_t                             budget) {
    unsigned const N = factors.at(0)->truncation();
    for (auto const& f : factors) {
      if (f->truncation() != N) {
        fail(Errc::precondition_unmet, "levelwise limit of objects with different truncations");
      }
    }
    size_t const            w = factors.size();
    std::vector<LimitPtr>   lims;
    std::vector<AlgebraPtr> levels;
    for (unsigned n = 0; n <= N; ++n) {
      std::vector<size_t>         sizes;
      std::vector<AlgebraPtr>     algs;
      std::vector<LinkConstraint> cs;
      for (auto const& f : factors) {
        sizes.push_back(f->level(n)->size());
        algs.push_back(f->level(n));
      }
      for (auto const& l : links) {
        cs.push_back({l.left,
                      l.left_map ? &(*l.left_map)[n] : nullptr,
                      l.right,
                      l.right_map ? &(*l.right_map)[n] : nullptr});
      }
      lims.push_back(make_limit(name + "_" + std::to_string(n),
                                algs,
                                compatible_tuples(sizes, cs, budget)));
      levels.push_back(lims.back()->algebra);
    }
    auto componentwise = [&](unsigned from, unsigned to, auto&& pick) {
      LimitAlgebra const& src = *lims[from];
      LimitAlgebra const& dst = *lims[to];
      std::vector<Elem>   map(src.tuples.size()), tmp(w);
      for (Elem a = 0; a < map.size(); ++a) {
        Elem const* t = src.tuple(a);
        for (size_t c = 0; c < w; ++c) {
          tmp[c] = pick(c)(t[c]);
        }
        size_t pos = dst.find(tmp);
        if (pos == TupleIndex::npos) {
          fail(Errc::property_violation, name + ": componentwise map leaves the limit");
        }
        map[a] = static_cast<Elem>(pos);
      }
      return Homomorphism::trusted(levels[from], levels[to], std::move(map));
    };
    TruncatedSimplicialAlgebra::Maps faces(N + 1), degs(N);
    for (unsigned n = 1; n <= N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        faces[n].push_back(componentwise(n, n - 1, [&](size_t c) -> Homomorphism const& {
          return factors[c]->d(n, i);
        }));
      }
    }
    for (unsigned n = 0; n < N; ++n) {
      for (unsigned i = 0; i <= n; ++i) {
        degs[n].push_back(componentwise(n, n + 1, [&](size_t c) -> Homomorphism const& {
          return factors[c]->s(n, i);
        }));
      }
    }
    SimplicialLimit out;
    out.object = TruncatedSimplicialAlgebra::make(
        name, levels, std::move(faces), std::move(degs));
    out.levels = lims;
    for (size_t c = 0; c < w; ++c) {
      std::vector<Homomorphism> comps;
      for (unsigned n = 0; n <= N; ++n) {
        comps.push_back(Homomorphism::trusted(
            levels[n], factors[c]->level(n), lims[n]->projections[c].map()));
      }
      out.projections.push_back(
          SimplicialMorphism::trusted(out.object, factors[c], std::move(comps)));
    }
    return out;
  }

  SimplicialLimit simplicial_pullback(SimplicialMorphism const& f,
                                      SimplicialMorphism const& g,
                                      size_t                    budget) {
    return simplicial_limit(f.dom()->name() + "x" + g.dom()->name(),
                            {f.dom(), g.dom()},
                            {{0, &f, 1, &g}},
                            budget);
  }

  SimplicialLimit simplicial_product(SimplicialPtr const& x,
                                     SimplicialPtr const& y,
                                     size_t               budget) {
    return simplicial_limit(x->name() + "x" + y->name(), {x, y}, {}, budget);
  }

  SimplicialLimit kernel_pair_object(SimplicialMorphism const& f, size_t budget) {
    return simplicial_pullback(f, f, budget);
  }

}  // namespace simal
