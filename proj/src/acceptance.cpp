#include "simal/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "simal/commutator.hpp"
#include "simal/constructions.hpp"
#include "simal/galois.hpp"
#include "simal/kan.hpp"
#include "simal/reflection.hpp"
#include "simal/squares.hpp"

namespace simal::acceptance {

  namespace {

    using corpus::Corpus;
    using corpus::Rng;

    // A check either passes, fails with a witness, or is skipped because a
    // size limit was hit.
    template <class F>
    void check(CriterionResult& r, std::string const& property, std::string const& subject,
               F&& body) {
      try {
        std::optional<std::string> w = body();
        ++r.checks;
        if (w) {
          r.failures.push_back({property, subject + ": " + *w});
        }
      } catch (Error const& e) {
        if (e.error_class() == ErrorClass::budget) {
          ++r.skipped;
        } else {
          ++r.checks;
          r.failures.push_back({property, subject + ": " + e.what()});
        }
      }
    }

    std::optional<std::string> expect(bool ok, std::string const& what) {
      if (ok) {
        return std::nullopt;
      }
      return what;
    }

    std::string blocks_text(Congruence const& c) {
      std::ostringstream s;
      s << "[";
      for (size_t i = 0; i < c.size(); ++i) {
        s << (i ? "," : "") << c.block(static_cast<Elem>(i));
      }
      s << "]";
      return s.str();
    }

    struct Context {
      Corpus const&  corpus;
      Options const& opt;

      std::map<std::string, std::optional<ReflectionResult>> reflections;
      std::map<std::string, std::string>                     reflection_errors;

      // Throws the original error again on later calls.
      ReflectionResult const& reflection(corpus::Object const& o) {
        auto it = reflections.find(o.name);
        if (it == reflections.end()) {
          try {
            it = reflections.emplace(o.name, pi1(o.x, opt.budget)).first;
          } catch (Error const& e) {
            reflections.emplace(o.name, std::nullopt);
            reflection_errors.emplace(o.name, e.what());
            throw;
          }
        }
        if (!it->second) {
          fail(reflection_error_code(o.name), reflection_errors.at(o.name));
        }
        return *it->second;
      }

      Errc reflection_error_code(std::string const& name) {
        std::string const& what = reflection_errors.at(name);
        for (Errc c : {Errc::level_too_large, Errc::budget_exceeded}) {
          if (what.rfind(std::string(errc_name(c)), 0) == 0) {
            return c;
          }
        }
        return Errc::property_violation;
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // 1. congruence lattices
    ////////////////////////////////////////////////////////////////////////

    void lattice_suite(Context& ctx, CriterionResult& r) {
      Rng    rng(ctx.opt.seed);
      size_t algebras = 0, pairs = 0, triples = 0;
      for (auto const& a : ctx.corpus.algebras) {
        if (a->size() > 12) {
          continue;
        }
        ++algebras;
        auto const   cons = corpus::enumerate_congruences(a);
        size_t const L    = cons.size();
        std::vector<std::vector<std::optional<Congruence>>> joins(
            L, std::vector<std::optional<Congruence>>(L));
        for (size_t i = 0; i < L; ++i) {
          for (size_t j = 0; j < L; ++j) {
            ++pairs;
            check(r, "join_is_composite", a->name(), [&]() -> std::optional<std::string> {
              Congruence j_lib = join(cons[i], cons[j]);
              auto       j_ref = equivalence_join(cons[i].blocks(), cons[j].blocks());
              joins[i][j]      = j_lib;
              return expect(j_lib.blocks() == j_ref, "join of " + blocks_text(cons[i]) + " and "
                                                         + blocks_text(cons[j])
                                                         + " differs from the closure");
            });
          }
        }
        auto join_of = [&](size_t i, Congruence const& s) {
          return Congruence::trusted(a, equivalence_join(cons[i].blocks(), s.blocks()));
        };
        // (R, S, T) with R <= T; exhaustive below 4096 triples, sampled above
        std::vector<std::array<size_t, 3>> all;
        for (size_t R = 0; R < L; ++R) {
          for (size_t T = 0; T < L; ++T) {
            if (!cons[R].leq(cons[T])) {
              continue;
            }
            for (size_t S = 0; S < L; ++S) {
              all.push_back({R, S, T});
            }
          }
        }
        std::vector<std::array<size_t, 3>> picked;
        if (all.size() <= 4096) {
          picked = all;
        } else {
          for (size_t k = 0; k < 4096; ++k) {
            picked.push_back(all[rng.below(all.size())]);
          }
        }
        for (auto const& [R, S, T] : picked) {
          ++triples;
          check(r, "modular_law", a->name(), [&]() -> std::optional<std::string> {
            Congruence lhs = join_of(R, meet(cons[S], cons[T]));
            Congruence rhs = meet(joins[R][S] ? *joins[R][S] : join_of(R, cons[S]), cons[T]);
            return expect(lhs == rhs, "R=" + blocks_text(cons[R]) + " S=" + blocks_text(cons[S])
                                          + " T=" + blocks_text(cons[T]));
          });
        }
      }
      r.details = {{"algebras", algebras}, {"pairs", pairs}, {"triples", triples}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 2. face squares
    ////////////////////////////////////////////////////////////////////////

    void face_square_suite(Context& ctx, CriterionResult& r) {
      size_t squares = 0;
      for (auto const& o : ctx.corpus.objects) {
        auto const& x = o.x;
        if (x->max_level_size() > 4096) {
          ++r.skipped;
          continue;
        }
        unsigned const top = std::min(x->truncation(), 3u);
        for (unsigned n = 2; n <= top; ++n) {
          for (unsigned j = 1; j <= n; ++j) {
            for (unsigned i = 0; i < j; ++i) {
              ++squares;
              std::string where = o.name + " level " + std::to_string(n) + " d" + std::to_string(i)
                                + "d" + std::to_string(j);
              check(r, "face_square_double_extension", where, [&]() -> std::optional<std::string> {
                auto rep = is_double_extension(x->d(n, j), x->d(n, i), x->d(n - 1, i),
                                               x->d(n - 1, j - 1));
                return expect(rep.comparison_surjective && rep.image_criterion,
                              "comparison image " + std::to_string(rep.comparison_image) + " of "
                                  + std::to_string(rep.pullback_size));
              });
            }
          }
        }
      }
      r.details = {{"squares", squares}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 3. H1 candidates and images of meets
    ////////////////////////////////////////////////////////////////////////

    void h1_suite(Context& ctx, CriterionResult& r) {
      size_t triple = 0, truncation2 = 0;
      for (auto const& o : ctx.corpus.objects) {
        if (o.x->truncation() >= 3) {
          ++triple;
          check(r, "h1_triple_equality", o.name, [&]() -> std::optional<std::string> {
            auto c = h1_candidates(o.x);
            return expect(c.all_equal(), "d0 " + blocks_text(c.via_d0) + " d1 "
                                             + blocks_text(c.via_d1) + " d2 "
                                             + blocks_text(c.via_d2));
          });
        } else {
          ++truncation2;
        }
        check(r, "image_of_meet", o.name, [&] { return image_of_meet_failure(o.x); });
      }
      for (auto const& e : ctx.corpus.extensions) {
        check(r, "image_of_meet", e.name, [&] { return image_of_meet_failure(e.f); });
      }
      r.details = {{"triple_equality_objects", triple},
                   {"truncation_2_objects", truncation2},
                   {"extensions", ctx.corpus.extensions.size()}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 4. reflection
    ////////////////////////////////////////////////////////////////////////

    bool small_source(SimplicialPtr const& x) {
      if (x->truncation() < 2) {
        return false;
      }
      for (unsigned n = 0; n <= 2; ++n) {
        if (x->level(n)->size() > 8) {
          return false;
        }
      }
      return true;
    }

    void reflection_suite(Context& ctx, CriterionResult& r) {
      size_t kernel_checks = 0, sources = 0, morphisms = 0;
      for (auto const& o : ctx.corpus.objects) {
        for (unsigned n = 2; n <= std::min(o.x->truncation(), 3u); ++n) {
          ++kernel_checks;
          check(r, "eta_kernel_is_hn", o.name + " level " + std::to_string(n),
                [&]() -> std::optional<std::string> {
                  auto const& R  = ctx.reflection(o);
                  Congruence  kp = kernel_pair(R.eta[n]);
                  Congruence  hj = hn(o.x, n);
                  return expect(kp == hj && R.h[n] == hj,
                                "Eq[eta] " + blocks_text(kp) + " vs " + blocks_text(hj));
                });
        }
      }

      std::set<std::string> seen;
      for (auto const& o : ctx.corpus.objects) {
        if (!small_source(o.x)) {
          continue;
        }
        SimplicialPtr src = truncate(o.x, 2);
        ++sources;
        std::optional<ReflectionResult> R;
        check(r, "reflection_of_source", o.name, [&]() -> std::optional<std::string> {
          R = pi1(src, ctx.opt.budget);
          return std::nullopt;
        });
        if (!R) {
          continue;
        }
        for (auto const& t : ctx.corpus.small_nerves) {
          if (!same_signature(*src->level(0), *t.x->level(0))) {
            continue;
          }
          std::string where = o.name + " -> " + t.name;
          check(r, "universal_property", where, [&]() -> std::optional<std::string> {
            auto homs = enumerate_simplicial_morphisms(src, t.x);
            morphisms += homs.size();
            for (auto const& f : homs) {
              auto fac = universal_property_check(*R, f);
              if (!fac.factors) {
                return "no factorization: " + fac.witness;
              }
            }
            // precomposition with eta is a bijection of hom-sets
            auto from_nerve = enumerate_simplicial_morphisms(R->nerve, t.x);
            return expect(from_nerve.size() == homs.size(),
                          std::to_string(homs.size()) + " maps from the object, "
                              + std::to_string(from_nerve.size()) + " from its reflection");
          });
        }
      }
      r.details = {{"kernel_pair_checks", kernel_checks},
                   {"universal_sources", sources},
                   {"morphisms_checked", morphisms}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 5. groupoid characterisation
    ////////////////////////////////////////////////////////////////////////

    void groupoid_suite(Context& ctx, CriterionResult& r) {
      Rng    rng(ctx.opt.seed ^ 0x5u);
      size_t quotients = 0, subobjects = 0;
      for (auto const& o : ctx.corpus.objects) {
        check(r, "groupoid_conditions_agree", o.name, [&]() -> std::optional<std::string> {
          auto g = is_internal_groupoid(o.x);
          if (o.nerve && !g.groupoid) {
            return std::string("a nerve is not recognised as a groupoid");
          }
          return expect(g.conditions_agree(), "conditions disagree");
        });
        if (!o.nerve || o.x->max_level_size() > 1024) {
          continue;
        }
        unsigned const N = o.x->truncation();
        for (int k = 0; k < 3; ++k) {
          unsigned n = static_cast<unsigned>(rng.below(N + 1));
          size_t   m = o.x->level(n)->size();
          Elem     a = static_cast<Elem>(rng.below(m)), b = static_cast<Elem>(rng.below(m));
          std::vector<std::vector<std::pair<Elem, Elem>>> pairs(N + 1);
          pairs[n].push_back({a, b});
          ++quotients;
          check(r, "quotient_of_groupoid", o.name, [&]() -> std::optional<std::string> {
            auto q = levelwise_quotient(o.x, simplicial_congruence_generated(o.x, pairs));
            return expect(is_internal_groupoid(q.object).groupoid,
                          "quotient by (" + std::to_string(a) + "," + std::to_string(b)
                              + ") at level " + std::to_string(n));
          });
          std::vector<std::vector<Elem>> gens(N + 1);
          gens[n].push_back(a);
          ++subobjects;
          check(r, "subobject_of_groupoid", o.name, [&]() -> std::optional<std::string> {
            auto s = simplicial_subobject_generated(o.x, gens);
            return expect(is_internal_groupoid(s.object).groupoid,
                          "subobject on " + std::to_string(a) + " at level " + std::to_string(n));
          });
        }
      }
      r.details = {{"objects", ctx.corpus.objects.size()},
                   {"quotients", quotients},
                   {"subobjects", subobjects}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 6. Kan
    ////////////////////////////////////////////////////////////////////////

    void kan_suite(Context& ctx, CriterionResult& r) {
      size_t horns = 0;
      for (auto const& o : ctx.corpus.objects) {
        check(r, "kan_condition", o.name, [&]() -> std::optional<std::string> {
          auto k = kan_check(o.x, ctx.opt.budget);
          horns += k.entries.size();
          for (auto const& e : k.entries) {
            if (!e.surjective) {
              return "horn (" + std::to_string(e.n) + "," + std::to_string(e.k) + ") not filled";
            }
          }
          return std::nullopt;
        });
      }
      for (auto const& e : ctx.corpus.extensions) {
        check(r, "kan_fibration", e.name, [&]() -> std::optional<std::string> {
          auto k = kan_fibration_check(e.f, ctx.opt.budget);
          horns += k.entries.size();
          return expect(k.holds(), "a relative horn is not filled");
        });
      }
      r.details = {{"objects", ctx.corpus.objects.size()},
                   {"extensions", ctx.corpus.extensions.size()},
                   {"horns", horns}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 7. centrality, both routes
    ////////////////////////////////////////////////////////////////////////

    void centrality_suite(Context& ctx, CriterionResult& r) {
      size_t trivial = 0, central = 0, normal = 0;
      check(r, "extension_count", "corpus", [&] {
        return expect(ctx.corpus.extensions.size() >= 30,
                      "only " + std::to_string(ctx.corpus.extensions.size()) + " extensions");
      });
      for (auto const& e : ctx.corpus.extensions) {
        check(r, "classification_consistent", e.name, [&]() -> std::optional<std::string> {
          auto rep = classify_extension(e.f, e.name);
          trivial += rep.trivial;
          central += rep.central;
          normal += rep.normal;
          auto v = rep.violations();
          if (v.empty()) {
            return std::nullopt;
          }
          std::string w;
          for (auto const& s : v) {
            w += (w.empty() ? "" : "; ") + s;
          }
          return w;
        });
      }
      r.details = {{"extensions", ctx.corpus.extensions.size()},
                   {"trivial", trivial},
                   {"central", central},
                   {"normal", normal}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 8. homotopy relations
    ////////////////////////////////////////////////////////////////////////

    void homotopy_suite(Context& ctx, CriterionResult& r) {
      for (auto const& o : ctx.corpus.objects) {
        check(r, "homotopy_relation_is_h1", o.name, [&]() -> std::optional<std::string> {
          Congruence hr = homotopy_relation(o.x);
          return expect(hr == h1(o.x), "relation " + blocks_text(hr));
        });
      }
      for (auto const& e : ctx.corpus.extensions) {
        check(r, "relative_homotopy_formulas", e.name, [&]() -> std::optional<std::string> {
          auto rh = relative_homotopy_relation(e.f);
          if (!rh.lemma_matches) {
            return "level 0 relation differs from d0(D1 ^ F1)";
          }
          if (!rh.construction_matches) {
            return "L-limit relation differs from d0(D1 ^ D2 ^ F2)";
          }
          return expect(rh.statement_matches, "L-limit relation differs from d1(F2 ^ D0 ^ D2)");
        });
      }
      r.details = {{"objects", ctx.corpus.objects.size()},
                   {"extensions", ctx.corpus.extensions.size()}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 9. exactness lemma, monotone-light, stabilisation
    ////////////////////////////////////////////////////////////////////////

    void factorization_suite(Context& ctx, CriterionResult& r) {
      size_t lemma = 0, not_qualifying = 0, ml = 0, probes = 0;
      for (auto const& e : ctx.corpus.extensions) {
        try {
          auto ex = exactness_lemma_check(e.f);
          ++lemma;
          ++r.checks;
          if (!ex.holds) {
            r.failures.push_back({"exactness_lemma", e.name + ": " + blocks_text(ex.lhs) + " vs "
                                                         + blocks_text(ex.rhs)});
          }
        } catch (Error const& err) {
          if (err.code() == Errc::precondition_unmet) {
            ++not_qualifying;
          } else if (err.error_class() == ErrorClass::budget) {
            ++r.skipped;
          } else {
            ++r.checks;
            r.failures.push_back({"exactness_lemma", e.name + ": " + err.what()});
          }
        }
      }

      for (auto const& e : ctx.corpus.extensions) {
        if (ml == 10) {
          break;
        }
        if (e.f.dom()->max_level_size() > 128) {
          continue;
        }
        ++ml;
        check(r, "monotone_light", e.name, [&]() -> std::optional<std::string> {
          auto fz = ml_factorization(e.f);
          if (!fz.composite_matches) {
            return std::string("m e differs from f");
          }
          if (!fz.unique_minimum) {
            return std::string("no least central quotient");
          }
          if (!fz.m_in_class) {
            return std::string("m is not central");
          }
          if (!fz.e_inverted) {
            return std::string("Pi_1 does not invert e");
          }
          return expect(fz.samples_inverted == fz.samples,
                        std::to_string(fz.samples - fz.samples_inverted)
                            + " pullbacks of e not inverted");
        });
      }

      for (auto const& e : ctx.corpus.extensions) {
        if (e.name.rfind("counit ", 0) != 0) {
          continue;
        }
        ++probes;
        check(r, "stabilizing_probe", e.name, [&]() -> std::optional<std::string> {
          auto p = stabilizing_probe(e.f, sample_extensions_into(e.f.cod()));
          if (p.holds()) {
            return std::nullopt;
          }
          return "not inverted along " + p.failures.front();
        });
      }
      r.details = {{"exactness_lemma", lemma},
                   {"exactness_not_applicable", not_qualifying},
                   {"monotone_light", ml},
                   {"stabilizing_probes", probes}};
    }

    ////////////////////////////////////////////////////////////////////////
    // 10. commutators, graphs, Heyting
    ////////////////////////////////////////////////////////////////////////

    bool has_implication(SimplicialPtr const& x) {
      return x->signature().find("imp").has_value();
    }

    void commutator_suite(Context& ctx, CriterionResult& r) {
      size_t coskeletal = 0, graphs = 0, graph_maps = 0, heyting = 0;
      for (auto const& o : ctx.corpus.objects) {
        check(r, "commutator_chain", o.name, [&]() -> std::optional<std::string> {
          auto c = commutator_chain_check(o.x);
          return expect(c.holds, "[D0,D1] " + blocks_text(c.commutator) + " H1 "
                                     + blocks_text(c.h1) + " D0^D1 " + blocks_text(c.meet));
        });

        bool cosk1 = false;
        try {
          cosk1 = coskeleton_comparison(o.x, 1, ctx.opt.budget).levelwise_bijective();
        } catch (Error const& e) {
          if (e.error_class() != ErrorClass::budget) {
            throw;
          }
        }
        if (cosk1) {
          ++coskeletal;
          check(r, "coskeletal_h1", o.name, [&]() -> std::optional<std::string> {
            Congruence d01 = meet(face_kernel(o.x, 1, 0), face_kernel(o.x, 1, 1));
            return expect(h1(o.x) == d01 && h1_candidates(o.x).via_d0 == d01,
                          "H1 " + blocks_text(h1(o.x)) + " D0^D1 " + blocks_text(d01));
          });
        }

        if (has_implication(o.x)) {
          ++heyting;
          check(r, "heyting_reflection", o.name, [&]() -> std::optional<std::string> {
            Congruence d01 = meet(face_kernel(o.x, 1, 0), face_kernel(o.x, 1, 1));
            if (h1(o.x) != d01) {
              return "H1 " + blocks_text(h1(o.x)) + " D0^D1 " + blocks_text(d01);
            }
            auto const&                   g = ctx.reflection(o).pi1;
            std::set<std::pair<Elem, Elem>> ends;
            for (Elem a = 0; a < g.x1->size(); ++a) {
              if (!ends.insert({g.d1(a), g.d0(a)}).second) {
                return "two arrows with the same ends";
              }
            }
            return std::nullopt;
          });
        }
      }

      std::set<std::string> seen;
      for (auto const& o : ctx.corpus.objects) {
        if (o.x->level(1)->size() > 64) {
          continue;
        }
        SimplicialPtr graph = truncate(o.x, 1);
        ++graphs;
        std::optional<GraphReflection> R;
        check(r, "graph_reflection_groupoid", o.name, [&]() -> std::optional<std::string> {
          R = graph_reflection(graph);
          if (auto f = R->groupoid.failure()) {
            return *f;
          }
          return expect(is_internal_groupoid(nerve(R->groupoid, 3)).groupoid,
                        "nerve of the reflection is not a groupoid");
        });
        if (!R) {
          continue;
        }
        SimplicialPtr reflected = underlying_graph(R->groupoid, o.name + " reflected");
        for (auto const& t : ctx.corpus.small_nerves) {
          if (!same_signature(*graph->level(0), *t.x->level(0))) {
            continue;
          }
          SimplicialPtr target = truncate(t.x, 1);
          check(r, "graph_universal_property", o.name + " -> " + t.name,
                [&]() -> std::optional<std::string> {
                  auto homs = enumerate_simplicial_morphisms(graph, target);
                  graph_maps += homs.size();
                  for (auto const& f : homs) {
                    if (!graph_factors(*R, f)) {
                      return std::string("a graph morphism does not factor");
                    }
                  }
                  auto from_reflection = enumerate_simplicial_morphisms(reflected, target);
                  return expect(from_reflection.size() == homs.size(),
                                std::to_string(homs.size()) + " maps from the graph, "
                                    + std::to_string(from_reflection.size())
                                    + " from its reflection");
                });
        }
      }
      r.details = {{"coskeletal_objects", coskeletal},
                   {"graphs", graphs},
                   {"graph_morphisms", graph_maps},
                   {"heyting_objects", heyting}};
    }

    using Suite = void (*)(Context&, CriterionResult&);

    Suite const suites[] = {lattice_suite,  face_square_suite, h1_suite,
                            reflection_suite, groupoid_suite,  kan_suite,
                            centrality_suite, homotopy_suite,  factorization_suite,
                            commutator_suite};

  }  // namespace

  std::vector<std::string> const& criterion_titles() {
    static std::vector<std::string> const titles = {
        "congruence joins and modular law",
        "face squares are double extensions",
        "h1 triple equality and images of meets",
        "reflection kernels and universal property",
        "groupoid conditions, quotients and subobjects",
        "kan condition and kan fibrations",
        "centrality by both routes",
        "homotopy relations",
        "exactness lemma, monotone-light factorization, stabilisation",
        "commutator chain, graph reflection, heyting",
    };
    return titles;
  }

  std::vector<Elem> equivalence_join(std::vector<Elem> const& a, std::vector<Elem> const& b) {
    std::vector<Elem> parent(a.size());
    std::iota(parent.begin(), parent.end(), Elem{0});
    auto find = [&](Elem x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y : {a[x], b[x]}) {
        Elem rx = find(x), ry = find(y);
        if (rx != ry) {
          parent[std::max(rx, ry)] = std::min(rx, ry);
        }
      }
    }
    std::vector<Elem> out(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      out[x] = find(x);
    }
    return out;
  }

  io::Json CriterionResult::json() const {
    io::Json f = io::Json::array();
    for (auto const& v : failures) {
      f.push_back({{"property", v.property}, {"witness", v.witness}});
    }
    return {{"id", id},          {"title", title},     {"passed", passed()},
            {"checks", checks},  {"skipped", skipped}, {"details", details},
            {"failures", f}};
  }

  std::string summary_line(CriterionResult const& r) {
    std::ostringstream s;
    s << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.checks
      << " checks";
    if (r.skipped) {
      s << ", " << r.skipped << " skipped at the size limit";
    }
    if (!r.failures.empty()) {
      s << ", " << r.failures.size() << " failed";
    }
    s << ")";
    return s.str();
  }

  std::vector<CriterionResult> run(Corpus const& c, Options const& opt,
                                   std::function<void(CriterionResult const&)> const& progress) {
    Context                      ctx{c, opt, {}, {}};
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) {
      if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) {
        continue;
      }
      CriterionResult r;
      r.id         = id;
      r.title      = criterion_titles()[id - 1];
      auto const t = std::chrono::steady_clock::now();
      try {
        suites[id - 1](ctx, r);
      } catch (Error const& e) {
        r.failures.push_back({"suite_aborted", e.what()});
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
      if (progress) {
        progress(r);
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<CriterionResult> run(Options const& opt,
                                   std::function<void(CriterionResult const&)> const& progress) {
    Corpus c = corpus::default_corpus(opt.profile, opt.seed);
    return run(c, opt, progress);
  }

}  // namespace simal::acceptance
