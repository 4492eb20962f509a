#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simal/acceptance.hpp"
#include "simal/commutator.hpp"
#include "simal/constructions.hpp"
#include "simal/corpus.hpp"
#include "simal/galois.hpp"
#include "simal/io.hpp"
#include "simal/kan.hpp"
#include "simal/reflection.hpp"
#include "simal/report.hpp"

namespace fs = std::filesystem;
using namespace simal;
using io::Json;

namespace {

  struct Settings {
    std::optional<size_t>   budget;
    std::uint64_t           seed = 7;
    std::string             out;
    bool                    json = false;
    std::string             profile = "desk";
    std::string             mode    = "em";
    unsigned                level   = 3;
    std::string             file;
    std::string             kind;
    std::vector<std::string> params;
    std::vector<int>        only;
  };

  size_t limit_budget(Settings const& s) {
    if (s.budget) {
      return *s.budget;
    }
    if (char const* env = std::getenv("SIMAL_BUDGET")) {
      try {
        return std::stoull(env);
      } catch (std::exception const&) {
        fail(Errc::invalid_parameters, std::string("SIMAL_BUDGET is not a number: ") + env);
      }
    }
    return default_limit_budget;
  }

  fs::path base_of(std::string const& file) {
    return fs::path(file).parent_path();
  }

  SimplicialPtr load_simplicial(std::string const& file) {
    return io::simplicial_from_json(io::read_json(file), base_of(file));
  }

  SimplicialMorphism load_morphism(std::string const& file) {
    return io::morphism_from_json(io::read_json(file), base_of(file));
  }

  Json level_sizes(SimplicialPtr const& x) {
    Json s = Json::array();
    for (auto const& l : x->levels()) {
      s.push_back(l->size());
    }
    return s;
  }

  void validate(Settings const& s, RunReport& rep) {
    Json        doc  = io::read_json(s.file);
    fs::path    base = base_of(s.file);
    Json&       res  = rep.results();
    switch (io::detect(doc)) {
      case io::DocKind::algebra: {
        auto a      = io::algebra_from_json(doc);
        res["kind"] = "algebra";
        res["name"] = a->name();
        res["size"] = a->size();
        break;
      }
      case io::DocKind::homomorphism: {
        auto h         = io::homomorphism_from_json(doc, base);
        res["kind"]    = "homomorphism";
        res["dom"]     = h.dom()->name();
        res["cod"]     = h.cod()->name();
        res["surjective"] = h.is_surjective();
        break;
      }
      case io::DocKind::simplicial: {
        auto x            = io::simplicial_from_json(doc, base);
        res["kind"]       = "simplicial";
        res["name"]       = x->name();
        res["truncation"] = x->truncation();
        res["levels"]     = level_sizes(x);
        break;
      }
      case io::DocKind::morphism: {
        auto f                      = io::morphism_from_json(doc, base);
        res["kind"]                 = "morphism";
        res["dom"]                  = level_sizes(f.dom());
        res["cod"]                  = level_sizes(f.cod());
        res["levelwise_surjective"] = f.levelwise_surjective();
        break;
      }
    }
    res["valid"] = true;
  }

  void gen(Settings const& s, RunReport& rep) {
    corpus::GeneratorSpec spec{s.kind, s.params, s.seed};
    corpus::Artifact      art = corpus::generate(spec);
    Json                  doc;
    std::visit(
        [&](auto const& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, SimplicialMorphism>) {
            doc = io::to_json(a);
          } else {
            doc = io::to_json(*a);
          }
        },
        art);
    doc["generator"] = {{"kind", s.kind}, {"params", s.params}, {"seed", s.seed}, {"rng", "mt19937_64 mod n"}};
    rep.results()["generator"] = doc["generator"];
    rep.results()["sha256"]    = sha256_hex(doc.dump());
    if (!s.out.empty()) {
      io::write_json(s.out, doc);
      rep.results()["written"] = s.out;
    } else if (!s.json) {
      std::cout << doc.dump(2) << "\n";
    }
  }

  void reflect(Settings const& s, RunReport& rep) {
    auto             x = load_simplicial(s.file);
    ReflectionResult r = pi1(x, limit_budget(s));
    Json&            res = rep.results();
    res["object"]        = x->name();
    res["groupoid"]      = {{"objects", r.pi1.x0->size()}, {"arrows", r.pi1.x1->size()}};
    Json eta             = Json::array();
    for (auto const& c : r.eta.components()) {
      eta.push_back({{"dom", c.dom()->size()},
                     {"cod", c.cod()->size()},
                     {"surjective", c.is_surjective()},
                     {"bijective", c.is_bijective()}});
    }
    res["eta"]                  = eta;
    res["eta_levelwise_bijective"] = r.eta.levelwise_bijective();
    Json h                      = Json::array();
    for (unsigned n = 1; n < r.h.size(); ++n) {
      h.push_back({{"n", n}, {"classes", r.h[n].num_blocks()}});
    }
    res["H"] = h;
    for (unsigned n = 2; n < r.h.size(); ++n) {
      if (!(r.h[n] == hn(x, n))) {
        rep.violation("eta_kernel_is_hn", "level " + std::to_string(n));
      }
    }
    if (!s.out.empty()) {
      fs::path dir = s.out;
      io::write_json(dir / "groupoid.json", io::to_json(r.pi1));
      io::write_json(dir / "nerve.json", io::to_json(*r.nerve));
      io::write_json(dir / "eta.json", io::to_json(r.eta));
      Json hj = Json::array();
      for (unsigned n = 1; n < r.h.size(); ++n) {
        hj.push_back({{"n", n}, {"congruence", io::to_json(r.h[n])}});
      }
      io::write_json(dir / "h.json", hj);
      res["written"] = dir.generic_string();
    }
  }

  void groupoid_check(Settings const& s, RunReport& rep) {
    auto g                 = is_internal_groupoid(load_simplicial(s.file));
    rep.results()["check"] = io::to_json(g);
    if (!g.conditions_agree()) {
      rep.violation("groupoid_conditions_agree", "the three characterisations disagree");
    }
  }

  void commutators(Settings const& s, RunReport& rep) {
    auto x = load_simplicial(s.file);
    auto c = commutator_chain_check(x);
    rep.results()["chain"] = {{"commutator", io::to_json(c.commutator)},
                              {"h1", io::to_json(c.h1)},
                              {"meet", io::to_json(c.meet)},
                              {"holds", c.holds}};
    if (!c.holds) {
      rep.violation("commutator_chain", "[D0,D1] <= H1 <= D0^D1 fails");
    }
    if (!s.json) {
      std::cout << "[D0,D1]: " << c.commutator.num_blocks() << " classes\n"
                << "H1:      " << c.h1.num_blocks() << " classes\n"
                << "D0^D1:   " << c.meet.num_blocks() << " classes\n";
    }
  }

  void classify(Settings const& s, RunReport& rep) {
    auto f = load_morphism(s.file);
    auto r = classify_extension(f, fs::path(s.file).filename().string());
    rep.results()["report"] = io::to_json(r);
    for (auto const& v : r.violations()) {
      rep.violation("classification_consistent", v);
    }
  }

  void factorize(Settings const& s, RunReport& rep) {
    auto          f = load_morphism(s.file);
    Factorization fz;
    if (s.mode == "em") {
      fz = em_factorization(f);
    } else if (s.mode == "ml") {
      fz = ml_factorization(f, s.budget.value_or(20000));
      if (!fz.unique_minimum) {
        rep.violation("ml_unique_minimum", "several minimal central quotients");
      }
    } else {
      fail(Errc::invalid_parameters, "mode is em or ml");
    }
    rep.results()["factorization"] = io::to_json(fz);
    if (!fz.composite_matches) {
      rep.violation("factorization_composite", "m e differs from f");
    }
    if (!fz.m_in_class) {
      rep.violation("factorization_m_class", s.mode == "em" ? "m not trivial" : "m not central");
    }
    if (!fz.e_inverted) {
      rep.violation("factorization_e_inverted", "Pi_1(e) is not an isomorphism");
    }
    if (fz.samples_inverted != fz.samples) {
      rep.violation("factorization_stable", "a sampled pullback of e is not inverted");
    }
  }

  void kan(Settings const& s, RunReport& rep) {
    Json doc = io::read_json(s.file);
    if (io::detect(doc) == io::DocKind::morphism) {
      auto k                  = kan_fibration_check(io::morphism_from_json(doc, base_of(s.file)),
                                   limit_budget(s));
      rep.results()["fibration"] = io::to_json(k);
      if (!k.holds()) {
        rep.violation("kan_fibration", "a relative horn is not filled");
      }
    } else {
      auto k                 = kan_check(io::simplicial_from_json(doc, base_of(s.file)),
                         limit_budget(s));
      rep.results()["kan"] = io::to_json(k);
      if (!k.holds()) {
        rep.violation("kan_condition", "a horn is not filled");
      }
    }
  }

  void cosk(Settings const& s, RunReport& rep) {
    auto x = load_simplicial(s.file);
    auto y = coskeleton(x, s.level, limit_budget(s));
    rep.results()["levels"] = level_sizes(y);
    if (!s.out.empty()) {
      io::write_json(s.out, io::to_json(*y));
      rep.results()["written"] = s.out;
    }
  }

  void suite(Settings const& s, RunReport& rep) {
    acceptance::Options opt;
    opt.profile = corpus::parse_profile(s.profile);
    opt.seed    = s.seed;
    opt.budget  = limit_budget(s);
    opt.only    = s.only;
    Json crit   = Json::array();
    auto runs   = acceptance::run(opt, [&](acceptance::CriterionResult const& r) {
      if (!s.json) {
        std::cout << acceptance::summary_line(r) << std::endl;
      }
    });
    for (auto const& r : runs) {
      crit.push_back(r.json());
      for (auto const& f : r.failures) {
        rep.violation("criterion " + std::to_string(r.id) + " " + f.property, f.witness);
      }
      if (r.checks == 0) {
        rep.violation("criterion " + std::to_string(r.id), "no checks ran");
      }
    }
    rep.results()["profile"]  = s.profile;
    rep.results()["seed"]     = s.seed;
    rep.results()["criteria"] = crit;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial objects in finite Mal'tsev algebras"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--budget", s.budget, "limit size (lattice size for factorize --mode ml)");
  app.add_option("--seed", s.seed, "seed for randomised choices");
  app.add_option("--out", s.out, "output file or directory");
  app.add_flag("--json", s.json, "print the run report as JSON");
  app.add_option("--profile", s.profile, "desk or deep")->check(CLI::IsMember({"desk", "deep"}));

  using Handler = void (*)(Settings const&, RunReport&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto with_file = [&](char const* name, char const* help, Handler h) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", s.file, "input JSON")->required();
    commands.push_back({c, h});
    return c;
  };
  with_file("validate", "check an algebra, homomorphism, simplicial object or morphism", validate);
  with_file("reflect", "groupoid reflection, units and H_n", reflect);
  with_file("groupoid-check", "the three groupoid characterisations", groupoid_check);
  with_file("commutators", "[D0,D1] <= H1 <= D0^D1", commutators);
  with_file("classify", "trivial / central / normal extension report", classify);
  with_file("factorize", "relative factorization of a morphism", factorize)
      ->add_option("--mode", s.mode, "em or ml")
      ->check(CLI::IsMember({"em", "ml"}));
  with_file("kan", "Kan condition of an object or Kan fibration of a morphism", kan);
  with_file("cosk", "extend by iterated simplicial kernels", cosk)
      ->add_option("--level", s.level, "target level");
  auto* g = app.add_subcommand("gen", "generate a corpus artifact");
  g->add_option("kind", s.kind, "generator kind")->required();
  g->add_option("params", s.params, "kind-specific parameters");
  commands.push_back({g, gen});
  auto* su = app.add_subcommand("suite", "run the acceptance criteria over the default corpus");
  su->add_option("--only", s.only, "criteria to run");
  commands.push_back({su, suite});
  for (auto& [c, h] : commands) {
    c->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string command;
  Handler     handler = nullptr;
  for (auto& [c, h] : commands) {
    if (c->parsed()) {
      command = c->get_name();
      handler = h;
    }
  }
  RunReport rep(command);
  try {
    if (s.kind == "" && command == "gen") {
      fail(Errc::invalid_parameters, "gen needs a kind");
    }
    handler(s, rep);
  } catch (Error const& e) {
    rep.set_error(e);
  } catch (std::exception const& e) {
    rep.set_error(Error(Errc::io_error, e.what()));
  }
  for (auto const& p : io::take_files_read()) {
    try {
      rep.add_input(p);
    } catch (Error const&) {
      // missing files are already reported as the run's error
    }
  }
  io::take_files_read();

  Json out = rep.to_json();
  bool report_file = !s.out.empty() && command != "gen" && command != "reflect" && command != "cosk";
  if (report_file) {
    io::write_json(s.out, out);
  }
  if (s.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto const& v : rep.violations()) {
      std::cerr << "violation " << v.property << ": " << v.witness << "\n";
    }
    if (out.contains("error")) {
      std::cerr << out["error"]["message"].get<std::string>() << "\n";
    } else if (command != "suite" && command != "commutators" && !(command == "gen" && s.out.empty())) {
      std::cout << out["results"].dump(2) << "\n";
    }
  }
  return rep.exit_code();
}
