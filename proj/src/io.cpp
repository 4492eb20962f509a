#include "simal/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "simal/error.hpp"

namespace simal::io {

  namespace {

    Json nest(std::vector<Elem> const& table, size_t n, unsigned arity, size_t offset) {
      if (arity == 0) {
        return Json(table[offset]);
      }
      Json   arr    = Json::array();
      size_t stride = checked_power(n, arity - 1);
      for (size_t i = 0; i < n; ++i) {
        arr.push_back(nest(table, n, arity - 1, offset + i * stride));
      }
      return arr;
    }

    void flatten(Json const& j, size_t n, unsigned arity, std::vector<Elem>& out,
                 std::string const& where) {
      if (arity == 0) {
        if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
          fail(Errc::malformed_table, where + ": table entries must be non-negative integers");
        }
        out.push_back(j.get<Elem>());
        return;
      }
      if (!j.is_array() || j.size() != n) {
        fail(Errc::malformed_table,
             where + ": expected a nested array of length " + std::to_string(n));
      }
      for (auto const& e : j) {
        flatten(e, n, arity - 1, out, where);
      }
    }

    template <class T>
    T field(Json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        fail(Errc::parse_error, where + ": missing field \"" + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        fail(Errc::parse_error, where + ": field \"" + key + "\": " + e.what());
      }
    }

    Json const& sub(Json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        fail(Errc::parse_error, where + ": missing field \"" + key + "\"");
      }
      return j.at(key);
    }

    // Algebra names unique within one document.
    class NameTable {
     public:
      std::string const& name(AlgebraPtr const& a) {
        auto it = _by_ptr.find(a.get());
        if (it != _by_ptr.end()) {
          return it->second;
        }
        std::string n = a->name();
        for (int k = 2; _used.count(n); ++k) {
          n = a->name() + "#" + std::to_string(k);
        }
        _used.insert(n);
        _order.push_back(a);
        return _by_ptr.emplace(a.get(), n).first->second;
      }
      std::vector<AlgebraPtr> const& order() const {
        return _order;
      }

     private:
      std::map<FiniteAlgebra const*, std::string> _by_ptr;
      std::set<std::string>                       _used;
      std::vector<AlgebraPtr>                     _order;
    };

    Json map_json(Homomorphism const& h) {
      return Json{{"map", h.map()}};
    }

    Json simplicial_json(TruncatedSimplicialAlgebra const& x, NameTable& names) {
      Json levels = Json::array();
      for (auto const& l : x.levels()) {
        levels.push_back(names.name(l));
      }
      Json faces = Json::array(), degs = Json::array();
      for (unsigned n = 0; n <= x.truncation(); ++n) {
        Json fl = Json::array();
        for (auto const& f : x.faces()[n]) {
          fl.push_back(map_json(f));
        }
        faces.push_back(fl);
      }
      for (unsigned n = 0; n < x.truncation(); ++n) {
        Json dl = Json::array();
        for (auto const& s : x.degeneracies()[n]) {
          dl.push_back(map_json(s));
        }
        degs.push_back(dl);
      }
      Json algs = Json::array();
      for (auto const& a : names.order()) {
        Json aj    = to_json(*a);
        aj["name"] = names.name(a);
        algs.push_back(aj);
      }
      Json j;
      j["name"]         = x.name();
      j["truncation"]   = x.truncation();
      j["algebras"]     = algs;
      j["levels"]       = levels;
      j["faces"]        = faces;
      j["degeneracies"] = degs;
      return j;
    }

    Json resolve(Json const& j, std::filesystem::path const& base) {
      if (j.is_string()) {
        return read_json(base / j.get<std::string>());
      }
      return j;
    }

    std::vector<Elem> map_from(Json const& j, std::filesystem::path const& base,
                               std::string const& where) {
      Json m = resolve(j, base);
      return field<std::vector<Elem>>(m, "map", where);
    }

  }  // namespace

  Json to_json(FiniteAlgebra const& a) {
    Json ops = Json::array();
    for (size_t op = 0; op < a.signature().size(); ++op) {
      auto const& o = a.signature()[op];
      ops.push_back({{"name", o.name},
                     {"arity", o.arity},
                     {"table", o.arity == 0 ? Json::array({a.table(op)[0]})
                                            : nest(a.table(op), a.size(), o.arity, 0)}});
    }
    return {{"name", a.name()},
            {"size", a.size()},
            {"operations", ops},
            {"maltsev", {{"term", a.maltsev_term()}}}};
  }

  AlgebraPtr algebra_from_json(Json const& j) {
    std::string const name = field<std::string>(j, "name", "algebra");
    size_t const      size = field<size_t>(j, "size", name);
    Json const&       ops  = sub(j, "operations", name);
    if (!ops.is_array()) {
      fail(Errc::parse_error, name + ": operations must be an array");
    }
    std::vector<Operation>         sig;
    std::vector<std::vector<Elem>> tables;
    for (auto const& o : ops) {
      Operation op{field<std::string>(o, "name", name), field<unsigned>(o, "arity", name)};
      std::string const where = name + "." + op.name;
      Json const&       t     = sub(o, "table", where);
      std::vector<Elem> flat;
      if (op.arity == 0) {
        if (!t.is_array() || t.size() != 1) {
          fail(Errc::malformed_table, where + ": a constant is a one-element array");
        }
        flatten(t[0], size, 0, flat, where);
      } else {
        flatten(t, size, op.arity, flat, where);
      }
      sig.push_back(op);
      tables.push_back(std::move(flat));
    }
    std::string term = field<std::string>(sub(j, "maltsev", name), "term", name);
    return FiniteAlgebra::make(name, Signature(sig), size, std::move(tables), term);
  }

  Json to_json(Homomorphism const& h) {
    return {{"dom", h.dom()->name()}, {"cod", h.cod()->name()}, {"map", h.map()}};
  }

  Homomorphism homomorphism_from_json(Json const& doc, std::filesystem::path const& base) {
    Json const j   = resolve(doc, base);
    auto       alg = [&](char const* key) {
      return algebra_from_json(resolve(sub(j, key, "homomorphism"), base));
    };
    AlgebraPtr dom = alg("dom");
    AlgebraPtr cod = alg("cod");
    return Homomorphism::create(dom, cod, map_from(j, base, "homomorphism"));
  }

  Json to_json(TruncatedSimplicialAlgebra const& x) {
    NameTable names;
    return simplicial_json(x, names);
  }

  SimplicialPtr simplicial_from_json(Json const& doc, std::filesystem::path const& base) {
    Json const        j    = resolve(doc, base);
    std::string const name = j.value("name", std::string("X"));
    unsigned const    N    = field<unsigned>(j, "truncation", name);

    std::map<std::string, AlgebraPtr> named;
    if (j.contains("algebras")) {
      for (auto const& a : j.at("algebras")) {
        auto alg = algebra_from_json(resolve(a, base));
        named.emplace(alg->name(), alg);
      }
    }
    Json const& lv = sub(j, "levels", name);
    if (!lv.is_array() || lv.size() != N + 1) {
      fail(Errc::malformed_table, name + ": levels must list truncation + 1 algebras");
    }
    std::vector<AlgebraPtr> levels;
    for (auto const& l : lv) {
      if (l.is_string() && named.count(l.get<std::string>())) {
        levels.push_back(named.at(l.get<std::string>()));
      } else if (l.is_string()) {
        levels.push_back(algebra_from_json(read_json(base / l.get<std::string>())));
      } else {
        levels.push_back(algebra_from_json(l));
      }
    }

    TruncatedSimplicialAlgebra::Maps faces(N + 1), degs(N);
    Json const&                      fj = sub(j, "faces", name);
    Json const&                      dj = sub(j, "degeneracies", name);
    size_t const                     skip = fj.size() == N ? 1 : 0;
    if (fj.size() + skip != N + 1 || dj.size() != N) {
      fail(Errc::malformed_table, name + ": wrong number of face or degeneracy levels");
    }
    for (unsigned n = 1; n <= N; ++n) {
      for (auto const& m : fj.at(n - skip)) {
        faces[n].push_back(Homomorphism::create(
            levels[n], levels[n - 1], map_from(m, base, name + " face at " + std::to_string(n))));
      }
    }
    for (unsigned n = 0; n < N; ++n) {
      for (auto const& m : dj.at(n)) {
        degs[n].push_back(Homomorphism::create(
            levels[n], levels[n + 1],
            map_from(m, base, name + " degeneracy at " + std::to_string(n))));
      }
    }
    return TruncatedSimplicialAlgebra::make(name, std::move(levels), std::move(faces),
                                            std::move(degs));
  }

  Json to_json(SimplicialMorphism const& f) {
    Json comps = Json::array();
    for (auto const& c : f.components()) {
      comps.push_back(map_json(c));
    }
    return {{"dom", to_json(*f.dom())}, {"cod", to_json(*f.cod())}, {"components", comps}};
  }

  SimplicialMorphism morphism_from_json(Json const& doc, std::filesystem::path const& base) {
    Json const    j   = resolve(doc, base);
    SimplicialPtr dom = simplicial_from_json(sub(j, "dom", "morphism"), base);
    SimplicialPtr cod = simplicial_from_json(sub(j, "cod", "morphism"), base);
    Json const&   cj  = sub(j, "components", "morphism");
    if (!cj.is_array() || cj.size() != dom->truncation() + 1
        || dom->truncation() != cod->truncation()) {
      fail(Errc::malformed_table, "morphism needs one component per level of equal truncations");
    }
    std::vector<Homomorphism> comps;
    for (unsigned n = 0; n <= dom->truncation(); ++n) {
      comps.push_back(Homomorphism::create(dom->level(n), cod->level(n),
                                           map_from(cj[n], base, "component " + std::to_string(n))));
    }
    return SimplicialMorphism::create(dom, cod, std::move(comps));
  }

  Json to_json(Congruence const& c) {
    return {{"algebra", c.algebra()->name()},
            {"classes", c.num_blocks()},
            {"blocks", c.blocks()}};
  }

  Json to_json(InternalGroupoid const& g) {
    Json pairs = Json::array();
    for (Elem c = 0; c < g.composable->tuples.size(); ++c) {
      pairs.push_back({g.composable->tuple(c)[0], g.composable->tuple(c)[1]});
    }
    Json x1    = to_json(*g.x1);
    x1["name"] = g.x1->name() == g.x0->name() ? g.x1->name() + "#arrows" : g.x1->name();
    return {{"objects", to_json(*g.x0)},
            {"arrows", x1},
            {"d0", g.d0.map()},
            {"d1", g.d1.map()},
            {"s0", g.s0.map()},
            {"composable", pairs},
            {"composition", g.m.map()}};
  }

  Json to_json(GroupoidCheck const& g) {
    Json levels = Json::array();
    for (auto const& l : g.levels) {
      levels.push_back({{"level", l.n},
                        {"all_pairs_trivial", l.all_pairs_trivial},
                        {"outer_pair_trivial", l.outer_pair_trivial},
                        {"some_pair_trivial", l.some_pair_trivial},
                        {"square_is_pullback", l.square_is_pullback}});
    }
    Json j{{"groupoid", g.groupoid}, {"conditions_agree", g.conditions_agree()}};
    if (g.failing_level) {
      j["failing_level"] = *g.failing_level;
      j["witness"]       = {g.witness.first, g.witness.second};
    }
    j["levels"] = levels;
    return j;
  }

  Json to_json(KanReport const& k) {
    Json entries = Json::array();
    for (auto const& e : k.entries) {
      entries.push_back({{"n", e.n},
                         {"k", e.k},
                         {"horn_size", e.horn_size},
                         {"image_size", e.image_size},
                         {"surjective", e.surjective},
                         {"bijective", e.bijective}});
    }
    return {{"holds", k.holds()}, {"entries", entries}};
  }

  Json to_json(ExtensionReport const& r) {
    Json w = Json::array();
    for (auto const& c : r.witnesses) {
      Json e{{"condition", c.condition}, {"level", c.level}, {"holds", c.holds}};
      if (c.pair) {
        e["pair"] = {c.pair->first, c.pair->second};
      }
      w.push_back(e);
    }
    Json horns = Json::array();
    for (size_t k = 0; k < r.horn_squares.size(); ++k) {
      horns.push_back({{"k", k},
                       {"theta_bijective", r.horn_squares[k].first},
                       {"meet_trivial", r.horn_squares[k].second}});
    }
    return {{"morphism", r.morphism},
            {"levelwise_surjective", r.levelwise_surjective},
            {"trivial", r.trivial},
            {"central", r.central},
            {"central_definitional", r.central_definitional},
            {"normal", r.normal},
            {"exact_fibration", r.exact_fibration},
            {"horn_squares", horns},
            {"witnesses", w},
            {"violations", r.violations()}};
  }

  Json to_json(Factorization const& f) {
    auto sizes = [](SimplicialPtr const& x) {
      Json s = Json::array();
      for (auto const& l : x->levels()) {
        s.push_back(l->size());
      }
      return s;
    };
    Json j{{"mode", f.mode == FactorizationMode::em ? "em" : "ml"},
           {"middle_level_sizes", sizes(f.e.cod())},
           {"composite_matches", f.composite_matches},
           {"m_in_class", f.m_in_class},
           {"e_inverted", f.e_inverted},
           {"samples", f.samples},
           {"samples_inverted", f.samples_inverted},
           {"e", to_json(f.e)},
           {"m", to_json(f.m)}};
    if (f.mode == FactorizationMode::ml) {
      Json theta = Json::array();
      for (auto const& c : f.theta) {
        theta.push_back(to_json(c));
      }
      j["theta"]          = theta;
      j["lattice_size"]   = f.lattice_size;
      j["central_count"]  = f.central_count;
      j["unique_minimum"] = f.unique_minimum;
    }
    return j;
  }

  DocKind detect(Json const& j) {
    if (j.is_object()) {
      if (j.contains("components")) {
        return DocKind::morphism;
      }
      if (j.contains("truncation")) {
        return DocKind::simplicial;
      }
      if (j.contains("operations")) {
        return DocKind::algebra;
      }
      if (j.contains("map")) {
        return DocKind::homomorphism;
      }
    }
    fail(Errc::parse_error, "unrecognised document");
  }

  namespace {
    std::vector<std::filesystem::path>& files_read() {
      static std::vector<std::filesystem::path> files;
      return files;
    }
  }  // namespace

  std::vector<std::filesystem::path> take_files_read() {
    return std::exchange(files_read(), {});
  }

  std::string read_text(std::filesystem::path const& p) {
    auto& log = files_read();
    if (std::find(log.begin(), log.end(), p) == log.end()) {
      log.push_back(p);
    }
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      fail(Errc::io_error, "cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Json read_json(std::filesystem::path const& p) {
    std::string text = read_text(p);
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      fail(Errc::parse_error, p.string() + ": " + e.what());
    }
  }

  void write_json(std::filesystem::path const& p, Json const& j) {
    if (p.has_parent_path()) {
      std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
      fail(Errc::io_error, "cannot write " + p.string());
    }
    out << j.dump(2) << "\n";
  }

}  // namespace simal::io
