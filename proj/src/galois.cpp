#include "simal/galois.hpp"

#include <algorithm>
#include <set>

#include "simal/error.hpp"
#include "simal/kan.hpp"

namespace simal {

  namespace {

    std::vector<std::vector<Congruence>> face_kernels(SimplicialPtr const& x) {
      std::vector<std::vector<Congruence>> D(x->truncation() + 1);
      for (unsigned n = 1; n <= x->truncation(); ++n) {
        for (unsigned i = 0; i <= n; ++i) {
          D[n].push_back(face_kernel(x, n, i));
        }
      }
      return D;
    }

    std::optional<std::pair<Elem, Elem>> witness(Congruence const& c) {
      for (Elem e = 0; e < c.size(); ++e) {
        if (c.block(e) != e) {
          return std::pair{c.block(e), e};
        }
      }
      return std::nullopt;
    }

    ConditionWitness delta_condition(std::string text, unsigned level, Congruence const& c) {
      auto w = witness(c);
      return {std::move(text), level, !w, w};
    }

    // H_1 = h1(X), H_n the join formula above.
    std::vector<Congruence> homotopy_kernels(SimplicialPtr const& x) {
      std::vector<Congruence> H{Congruence::identity(x->level(0)), h1(x)};
      for (unsigned n = 2; n <= x->truncation(); ++n) {
        H.push_back(hn(x, n));
      }
      return H;
    }

    bool relation_equals(std::vector<std::pair<Elem, Elem>> pairs, Congruence const& c) {
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (auto [a, b] : pairs) {
        if (!c.related(a, b)) {
          return false;
        }
      }
      return pairs.size() == c.pair_count();
    }

    std::vector<char> image_mask(Homomorphism const& h) {
      std::vector<char> in(h.cod()->size(), 0);
      for (Elem x = 0; x < h.dom()->size(); ++x) {
        in[h(x)] = 1;
      }
      return in;
    }

    void require_extension(SimplicialMorphism const& f) {
      if (!f.levelwise_surjective()) {
        fail(Errc::not_levelwise_surjective, f.dom()->name() + " -> " + f.cod()->name());
      }
      if (f.truncation() < 2) {
        fail(Errc::precondition_unmet, "extensions are classified from truncation 2");
      }
    }

  }  // namespace

  std::vector<std::string> ExtensionReport::violations() const {
    std::vector<std::string> v;
    if (central != central_definitional) {
      v.push_back("centrality routes disagree");
    }
    if (trivial && !central) {
      v.push_back("trivial but not central");
    }
    if (central && !normal) {
      v.push_back("central but not normal");
    }
    if (central && !exact_fibration) {
      v.push_back("central but some theta^n_k is not bijective");
    }
    for (size_t k = 0; k < horn_squares.size(); ++k) {
      if (horn_squares[k].first != horn_squares[k].second) {
        v.push_back("horn square k=" + std::to_string(k) + " disagrees with its meet");
      }
    }
    return v;
  }

  bool is_trivial_extension(SimplicialMorphism const& f) {
    auto F = kernel_pairs(f);
    auto H = homotopy_kernels(f.dom());
    for (unsigned n = 1; n <= f.truncation(); ++n) {
      if (!meet(F[n], H[n]).is_identity()) {
        return false;
      }
    }
    return true;
  }

  bool is_central_extension(SimplicialMorphism const& f) {
    auto F = kernel_pairs(f);
    auto D = face_kernels(f.dom());
    for (unsigned n = 2; n <= f.truncation(); ++n) {
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          if (!meet({F[n], D[n][i], D[n][j]}).is_identity()) {
            return false;
          }
        }
      }
    }
    return image_congruence(f.dom()->d(2, 1), meet({F[2], D[2][0], D[2][2]})).is_identity();
  }

  ExtensionReport classify_extension(SimplicialMorphism const& f, std::string name) {
    require_extension(f);
    SimplicialPtr const& x = f.dom();
    unsigned const       N = f.truncation();
    ExtensionReport      r;
    r.morphism             = name.empty() ? x->name() + " -> " + f.cod()->name() : name;
    r.levelwise_surjective = true;

    auto F = kernel_pairs(f);
    auto D = face_kernels(x);
    auto H = homotopy_kernels(x);

    r.trivial = true;
    for (unsigned n = 1; n <= N; ++n) {
      r.witnesses.push_back(delta_condition("F_n ^ H_n = Delta", n, meet(F[n], H[n])));
      r.trivial &= r.witnesses.back().holds;
    }

    r.central = true;
    for (unsigned n = 2; n <= N; ++n) {
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          r.witnesses.push_back(delta_condition(
              "F_n ^ D_" + std::to_string(i) + " ^ D_" + std::to_string(j) + " = Delta", n,
              meet({F[n], D[n][i], D[n][j]})));
          r.central &= r.witnesses.back().holds;
        }
      }
    }
    r.witnesses.push_back(delta_condition(
        "d_1(F_2 ^ D_0 ^ D_2) = Delta", 1,
        image_congruence(x->d(2, 1), meet({F[2], D[2][0], D[2][2]}))));
    r.central &= r.witnesses.back().holds;

    // the kernel pair object serves both the definitional route and normality
    SimplicialLimit kp = kernel_pair_object(f);
    bool const      p0 = is_trivial_extension(kp.projections[0]);
    bool const      p1 = is_trivial_extension(kp.projections[1]);
    r.central_definitional = p0;
    r.normal               = p0 && p1;

    KanReport fib     = kan_fibration_check(f);
    r.exact_fibration = true;
    for (auto const& e : fib.entries) {
      r.exact_fibration &= e.bijective;
      if (e.n == 2) {
        unsigned i = e.k == 0 ? 1 : 0, j = e.k == 2 ? 1 : 2;
        bool meet_trivial = meet({F[2], D[2][i], D[2][j]}).is_identity();
        r.horn_squares.emplace_back(e.bijective, meet_trivial);
      }
    }
    return r;
  }

  bool pi1_inverts(SimplicialMorphism const& h) {
    if (!h[0].is_surjective() || !h[1].is_surjective()) {
      fail(Errc::not_levelwise_surjective, "pi1_inverts needs a surjection on levels 0 and 1");
    }
    if (!h[0].is_bijective()) {
      return false;
    }
    return preimage_congruence(h[1], h1(h.cod())) == h1(h.dom());
  }

  ////////////////////////////////////////////////////////////////////////
  // EM factorization
  ////////////////////////////////////////////////////////////////////////

  Factorization em_factorization(SimplicialMorphism const& f) {
    require_extension(f);
    SimplicialPtr const& x  = f.dom();
    ReflectionResult     RX = pi1(x);
    ReflectionResult     RY = pi1(f.cod());
    Factorization1       g  = universal_property_check(RX, compose(RY.eta, f));
    if (!g.factors) {
      fail(Errc::property_violation, "eta_Y f does not factor through eta_X: " + g.witness);
    }
    SimplicialLimit P = simplicial_pullback(RY.eta, *g.g);

    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      std::vector<Elem> map(x->level(n)->size());
      for (Elem a = 0; a < map.size(); ++a) {
        Elem   t[2] = {f[n](a), RX.eta[n](a)};
        size_t pos  = P.levels[n]->find(t);
        if (pos == TupleIndex::npos) {
          fail(Errc::property_violation, "<f, eta_X> leaves the pullback");
        }
        map[a] = static_cast<Elem>(pos);
      }
      comps.push_back(Homomorphism::trusted(x->level(n), P.object->level(n), std::move(map)));
    }
    Factorization out;
    out.mode = FactorizationMode::em;
    out.e    = SimplicialMorphism::create(x, P.object, std::move(comps));
    out.m    = P.projections[0];
    out.composite_matches = true;
    auto me               = compose(out.m, out.e);
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      out.composite_matches &= same_map(me[n], f[n]);
    }
    if (!out.e.levelwise_surjective()) {
      fail(Errc::property_violation, "reflection square of an extension is not a double extension");
    }
    out.m_in_class = is_trivial_extension(out.m);
    out.e_inverted = pi1_inverts(out.e);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monotone-light factorization by lattice search
  ////////////////////////////////////////////////////////////////////////

  std::vector<SimplicialCongruence> ml_atoms(SimplicialMorphism const& f) {
    SimplicialPtr const& x  = f.dom();
    unsigned const       N  = f.truncation();
    Congruence           FN = kernel_pair(f[N]);
    std::set<std::vector<Elem>>       seen;
    std::vector<SimplicialCongruence> atoms;
    for (Elem a = 0; a < FN.size(); ++a) {
      for (Elem b = a + 1; b < FN.size(); ++b) {
        if (!FN.related(a, b)) {
          continue;
        }
        std::vector<std::vector<std::pair<Elem, Elem>>> pairs(N + 1);
        pairs[N].emplace_back(a, b);
        auto theta = simplicial_congruence_generated(x, pairs);
        if (seen.insert(theta[N].blocks()).second) {
          atoms.push_back(std::move(theta));
        }
      }
    }
    return atoms;
  }

  std::vector<SimplicialCongruence> simplicial_congruences_below(SimplicialMorphism const& f,
                                                                 size_t                    budget) {
    unsigned const                    N = f.truncation();
    auto                              atoms = ml_atoms(f);
    std::vector<SimplicialCongruence> all{identity_congruence(f.dom())};
    std::set<std::vector<Elem>>       seen{all[0][N].blocks()};
    auto                              add = [&](SimplicialCongruence t) {
      if (seen.insert(t[N].blocks()).second) {
        if (all.size() >= budget) {
          fail(Errc::budget_exceeded,
               "more than " + std::to_string(budget) + " simplicial congruences below Eq[f]");
        }
        all.push_back(std::move(t));
      }
    };
    for (auto& a : atoms) {
      add(a);
    }
    // a simplicial congruence is determined by its top level, and every one
    // is a join of atoms
    for (size_t i = 1; i < all.size(); ++i) {
      for (auto const& a : atoms) {
        if (!leq(a, all[i])) {
          add(join(all[i], a));
        }
      }
    }
    return all;
  }

  bool central_over(SimplicialMorphism const& f, SimplicialCongruence const& theta) {
    SimplicialPtr const& x = f.dom();
    auto                 F = kernel_pairs(f);
    for (unsigned n = 2; n <= f.truncation(); ++n) {
      std::vector<Congruence> E;
      for (unsigned i = 0; i <= n; ++i) {
        E.push_back(preimage_congruence(x->d(n, i), theta[n - 1]));
      }
      for (unsigned j = 1; j <= n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          if (!(meet({F[n], E[i], E[j]}) == theta[n])) {
            return false;
          }
        }
      }
      if (n == 2 && !meet({F[2], E[0], E[2]}).leq(E[1])) {
        return false;
      }
    }
    return true;
  }

  std::vector<SimplicialMorphism> sample_extensions_into(SimplicialPtr const& x) {
    std::vector<SimplicialMorphism> out{SimplicialMorphism::identity(x)};
    out.push_back(simplicial_product(x, constant_object(x->level(0), x->truncation()))
                      .projections[0]);
    ReflectionResult r = pi1(x);
    out.push_back(kernel_pair_object(r.eta).projections[0]);
    return out;
  }

  Factorization ml_factorization(SimplicialMorphism const& f, size_t budget) {
    require_extension(f);
    auto lattice = simplicial_congruences_below(f, budget);

    std::vector<size_t> succ;
    for (size_t i = 0; i < lattice.size(); ++i) {
      if (central_over(f, lattice[i])) {
        succ.push_back(i);
      }
    }
    if (succ.empty()) {
      fail(Errc::no_central_quotient, "no central quotient below Eq[f]");
    }
    std::vector<size_t> minimal;
    for (size_t s : succ) {
      bool is_min = true;
      for (size_t t : succ) {
        if (t != s && leq(lattice[t], lattice[s])) {
          is_min = false;
          break;
        }
      }
      if (is_min) {
        minimal.push_back(s);
      }
    }

    SimplicialCongruence const& theta = lattice[minimal.front()];
    SimplicialQuotient          q     = levelwise_quotient(f.dom(), theta);
    Factorization out;
    out.mode           = FactorizationMode::ml;
    out.e              = q.projection;
    out.m              = induced_map(q, f);
    out.theta          = theta;
    out.lattice_size   = lattice.size();
    out.central_count  = succ.size();
    out.unique_minimum = minimal.size() == 1;
    // meets of successes stay successes, checked on a bounded number of pairs
    size_t checked = 0;
    for (size_t a = 0; a < succ.size() && out.unique_minimum && checked < 4096; ++a) {
      for (size_t b = a + 1; b < succ.size() && checked < 4096; ++b, ++checked) {
        if (!central_over(f, meet(lattice[succ[a]], lattice[succ[b]]))) {
          out.unique_minimum = false;
          break;
        }
      }
    }

    out.composite_matches = true;
    auto me               = compose(out.m, out.e);
    for (unsigned n = 0; n <= f.truncation(); ++n) {
      out.composite_matches &= same_map(me[n], f[n]);
    }
    out.m_in_class = is_central_extension(out.m);
    out.e_inverted = pi1_inverts(out.e);
    for (auto const& p : sample_extensions_into(q.object)) {
      SimplicialLimit P = simplicial_pullback(out.e, p);
      ++out.samples;
      out.samples_inverted += pi1_inverts(P.projections[1]) ? 1 : 0;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homotopy relations
  ////////////////////////////////////////////////////////////////////////

  Congruence homotopy_relation(SimplicialPtr const& x) {
    if (x->truncation() < 2) {
      fail(Errc::precondition_unmet, "homotopy relation needs truncation at least 2");
    }
    auto                               degenerate = image_mask(x->s(0, 0));
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem a = 0; a < x->level(2)->size(); ++a) {
      if (degenerate[x->d(2, 2)(a)]) {
        pairs.emplace_back(x->d(2, 0)(a), x->d(2, 1)(a));
      }
    }
    Congruence H = h1(x);
    if (!relation_equals(std::move(pairs), H)) {
      fail(Errc::homotopy_mismatch, x->name() + ": image of (d0, d1) pi1 differs from H1");
    }
    return H;
  }

  RelativeHomotopy relative_homotopy_relation(SimplicialMorphism const& f) {
    require_extension(f);
    SimplicialPtr const &x = f.dom(), &y = f.cod();
    auto                 F = kernel_pairs(f);
    auto                 D = face_kernels(x);
    RelativeHomotopy     r;

    auto                               y_deg1 = image_mask(y->s(0, 0));
    std::vector<std::pair<Elem, Elem>> lemma;
    for (Elem a = 0; a < x->level(1)->size(); ++a) {
      if (y_deg1[f[1](a)]) {
        lemma.emplace_back(x->d(1, 0)(a), x->d(1, 1)(a));
      }
    }
    r.lemma_formula = image_congruence(x->d(1, 0), meet(D[1][1], F[1]));
    r.lemma_matches = relation_equals(std::move(lemma), r.lemma_formula);

    auto                               x_deg1 = image_mask(x->s(0, 0));
    auto                               y_deg2 = image_mask(y->s(1, 0));
    std::vector<std::pair<Elem, Elem>> limit;
    for (Elem a = 0; a < x->level(2)->size(); ++a) {
      if (x_deg1[x->d(2, 2)(a)] && y_deg2[f[2](a)]) {
        limit.emplace_back(x->d(2, 0)(a), x->d(2, 1)(a));
      }
    }
    r.construction_formula = image_congruence(x->d(2, 0), meet({D[2][1], D[2][2], F[2]}));
    r.statement_formula    = image_congruence(x->d(2, 1), meet({F[2], D[2][0], D[2][2]}));
    r.construction_matches = relation_equals(limit, r.construction_formula);
    r.statement_matches    = relation_equals(std::move(limit), r.statement_formula);
    return r;
  }

  ExactnessLemma exactness_lemma_check(SimplicialMorphism const& f) {
    require_extension(f);
    if (f.truncation() < 3) {
      fail(Errc::precondition_unmet, "the exactness lemma needs truncation at least 3");
    }
    if (!exactness_check(f.cod(), 3)) {
      fail(Errc::precondition_unmet, f.cod()->name() + ": kappa_3 is not surjective");
    }
    SimplicialPtr const& x  = f.dom();
    Congruence           D1 = face_kernel(x, 2, 1), D2 = face_kernel(x, 2, 2);
    Congruence           F1 = kernel_pair(f[1]), F2 = kernel_pair(f[2]);
    ExactnessLemma       r;
    r.lhs   = meet(image_congruence(x->d(2, 0), meet(D1, D2)), F1);
    r.rhs   = image_congruence(x->d(2, 0), meet({D1, D2, F2}));
    r.holds = r.lhs == r.rhs;
    return r;
  }

  StabilizingProbe stabilizing_probe(SimplicialMorphism const&              f,
                                     std::vector<SimplicialMorphism> const& samples) {
    Factorization    em = em_factorization(f);
    StabilizingProbe out;
    for (auto const& p : samples) {
      if (p.cod() != f.cod()) {
        fail(Errc::precondition_unmet, "sample does not land in the codomain");
      }
      SimplicialLimit Q = simplicial_pullback(em.m, p);
      SimplicialLimit E = simplicial_pullback(em.e, Q.projections[0]);
      ++out.samples;
      if (pi1_inverts(E.projections[1])) {
        ++out.inverted;
      } else {
        out.failures.push_back(p.dom()->name() + " -> " + p.cod()->name());
      }
    }
    return out;
  }

}  // namespace simal
