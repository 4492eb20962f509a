#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "simal/algebra.hpp"
#include "simal/congruence.hpp"
#include "simal/galois.hpp"
#include "simal/groupoid.hpp"
#include "simal/kan.hpp"
#include "simal/reflection.hpp"
#include "simal/simplicial.hpp"

namespace simal::io {

  using Json = nlohmann::ordered_json;

  // Algebra: {"name", "size", "operations": [{"name", "arity", "table"}],
  // "maltsev": {"term"}} with tables nested to depth = arity.
  Json       to_json(FiniteAlgebra const& a);
  AlgebraPtr algebra_from_json(Json const& j);

  // Homomorphism: {"dom", "cod", "map"} with algebra names.  When read, dom
  // and cod are inline algebras or paths to algebra files.
  Json         to_json(Homomorphism const& h);
  Homomorphism homomorphism_from_json(Json const& j, std::filesystem::path const& base = {});

  // Simplicial object: {"name", "truncation", "algebras": [...],
  // "levels": [names], "faces": [[{"map"}...] per level, level 0 empty],
  // "degeneracies": [[...] per level]}.  A level may also be an inline
  // algebra, a face list may omit level 0, and a map may be a path to a
  // homomorphism file relative to base.
  Json          to_json(TruncatedSimplicialAlgebra const& x);
  SimplicialPtr simplicial_from_json(Json const& j, std::filesystem::path const& base = {});

  // Morphism: {"dom": simplicial, "cod": simplicial, "components": [{"map"}]}.
  // dom and cod may be paths.
  Json               to_json(SimplicialMorphism const& f);
  SimplicialMorphism morphism_from_json(Json const& j, std::filesystem::path const& base = {});

  Json to_json(Congruence const& c);
  Json to_json(InternalGroupoid const& g);
  Json to_json(GroupoidCheck const& g);
  Json to_json(KanReport const& k);
  Json to_json(ExtensionReport const& r);
  Json to_json(Factorization const& f);

  enum class DocKind { algebra, homomorphism, simplicial, morphism };
  DocKind detect(Json const& j);

  // Throws IoError or ParseError.
  Json        read_json(std::filesystem::path const& p);
  std::string read_text(std::filesystem::path const& p);
  void        write_json(std::filesystem::path const& p, Json const& j);

  // Every file read so far, in order, without repeats; clears the list.
  std::vector<std::filesystem::path> take_files_read();

}  // namespace simal::io
