#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simal/term.hpp"

namespace simal {

  using Elem = std::uint32_t;

  struct Operation {
    std::string name;
    unsigned    arity = 0;

    bool operator==(Operation const&) const = default;
  };

  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<Operation> ops);

    size_t size() const noexcept {
      return _ops.size();
    }

    Operation const& operator[](size_t i) const {
      return _ops[i];
    }

    auto begin() const noexcept {
      return _ops.begin();
    }

    auto end() const noexcept {
      return _ops.end();
    }

    std::optional<size_t> find(std::string_view name) const;

    bool has_constants() const noexcept;

    bool operator==(Signature const&) const = default;

   private:
    std::vector<Operation> _ops;
  };

  class FiniteAlgebra;
  using AlgebraPtr = std::shared_ptr<FiniteAlgebra const>;

  // Carrier {0, ..., size - 1}.  The table of an operation of arity k is
  // flattened row-major, so f(a_0, ..., a_{k-1}) sits at
  // ((a_0 * n + a_1) * n + ...) + a_{k-1}.
  class FiniteAlgebra {
   public:
    // Checks ranges, table sizes and the Mal'tsev identities.  Throws
    // MalformedTable or NotMaltsev.
    static AlgebraPtr make(std::string                    name,
                           Signature                      sig,
                           size_t                         size,
                           std::vector<std::vector<Elem>> tables,
                           std::string const&             maltsev_term);

    // No checks at all.  Used for algebras built from validated ones
    // (quotients, limits, subalgebras).  A zero size is permitted here.
    static AlgebraPtr make_trusted(std::string                    name,
                                   Signature                      sig,
                                   size_t                         size,
                                   std::vector<std::vector<Elem>> tables,
                                   std::string const&             maltsev_term);

    std::string const& name() const noexcept {
      return _name;
    }

    size_t size() const noexcept {
      return _size;
    }

    Signature const& signature() const noexcept {
      return _sig;
    }

    std::vector<Elem> const& table(size_t op) const {
      return _tables[op];
    }

    std::string const& maltsev_term() const noexcept {
      return _term_text;
    }

    Elem apply(size_t op, Elem const* args) const {
      unsigned k   = _sig[op].arity;
      size_t   idx = 0;
      for (unsigned i = 0; i < k; ++i) {
        idx = idx * _size + args[i];
      }
      return _tables[op][idx];
    }

    Elem apply(size_t op, std::vector<Elem> const& args) const {
      return apply(op, args.data());
    }

    Elem maltsev(Elem x, Elem y, Elem z) const;

    Elem eval(TermProgram const& prog, Elem x, Elem y, Elem z) const;

    TermProgram compile(TermNode const& t) const;

    // First triple violating p(x,y,y)=x or p(x,x,y)=y, if any.
    std::optional<std::array<Elem, 3>> maltsev_violation() const;

   private:
    FiniteAlgebra() = default;

    std::string                    _name;
    Signature                      _sig;
    size_t                         _size = 0;
    std::vector<std::vector<Elem>> _tables;
    std::string                    _term_text;
    TermProgram                    _program;
  };

  // n^k, or SIZE_MAX on overflow.
  size_t checked_power(size_t n, unsigned k) noexcept;

  bool same_signature(FiniteAlgebra const& a, FiniteAlgebra const& b);

}  // namespace simal
