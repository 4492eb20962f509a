#include "simal/algebra.hpp"

#include <limits>
#include <set>

#include "simal/error.hpp"

namespace simal {

  Signature::Signature(std::vector<Operation> ops) : _ops(std::move(ops)) {
    std::set<std::string> seen;
    for (auto const& op : _ops) {
      if (op.name.empty()) {
        fail(Errc::parse_error, "operation with empty name");
      }
      if (!seen.insert(op.name).second) {
        fail(Errc::parse_error, "duplicate operation name " + op.name);
      }
    }
  }

  std::optional<size_t> Signature::find(std::string_view name) const {
    for (size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool Signature::has_constants() const noexcept {
    for (auto const& op : _ops) {
      if (op.arity == 0) {
        return true;
      }
    }
    return false;
  }

  size_t checked_power(size_t n, unsigned k) noexcept {
    size_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (n != 0 && r > std::numeric_limits<size_t>::max() / n) {
        return std::numeric_limits<size_t>::max();
      }
      r *= n;
    }
    return r;
  }

  bool same_signature(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    return a.signature() == b.signature();
  }

  TermProgram FiniteAlgebra::compile(TermNode const& t) const {
    TermProgram prog;
    auto        rec = [&](auto&& self, TermNode const& node) -> void {
      if (node.is_var()) {
        prog.push_back({TermInstr::Kind::var, static_cast<uint32_t>(node.var)});
        return;
      }
      auto op = _sig.find(node.head);
      if (!op) {
        fail(Errc::parse_error,
             "term uses unknown operation or variable '" + node.head + "'");
      }
      if (_sig[*op].arity != node.args.size()) {
        fail(Errc::parse_error,
             "operation " + node.head + " has arity "
                 + std::to_string(_sig[*op].arity) + " but is applied to "
                 + std::to_string(node.args.size()) + " arguments");
      }
      for (auto const& a : node.args) {
        self(self, a);
      }
      prog.push_back({TermInstr::Kind::op, static_cast<uint32_t>(*op)});
    };
    rec(rec, t);
    return prog;
  }

  Elem FiniteAlgebra::eval(TermProgram const& prog,
                           Elem               x,
                           Elem               y,
                           Elem               z) const {
    Elem   stack[64];
    Elem   vars[3] = {x, y, z};
    size_t top     = 0;
    for (auto const& ins : prog) {
      if (ins.kind == TermInstr::Kind::var) {
        stack[top++] = vars[ins.index];
      } else {
        unsigned k = _sig[ins.index].arity;
        top -= k;
        stack[top] = apply(ins.index, stack + top);
        ++top;
      }
    }
    return stack[0];
  }

  Elem FiniteAlgebra::maltsev(Elem x, Elem y, Elem z) const {
    return eval(_program, x, y, z);
  }

  std::optional<std::array<Elem, 3>> FiniteAlgebra::maltsev_violation() const {
    for (Elem x = 0; x < _size; ++x) {
      for (Elem y = 0; y < _size; ++y) {
        if (maltsev(x, y, y) != x) {
          return std::array<Elem, 3>{x, y, y};
        }
        if (maltsev(x, x, y) != y) {
          return std::array<Elem, 3>{x, x, y};
        }
      }
    }
    return std::nullopt;
  }

  namespace {
    size_t stack_depth(TermProgram const& prog, Signature const& sig) {
      size_t top = 0, best = 0;
      for (auto const& ins : prog) {
        if (ins.kind == TermInstr::Kind::var) {
          ++top;
        } else {
          top = top - sig[ins.index].arity + 1;
        }
        best = std::max(best, top);
      }
      return best;
    }
  }  // namespace

  AlgebraPtr FiniteAlgebra::make_trusted(std::string                    name,
                                         Signature                      sig,
                                         size_t                         size,
                                         std::vector<std::vector<Elem>> tables,
                                         std::string const& maltsev_term) {
    auto* a       = new FiniteAlgebra();
    a->_name      = std::move(name);
    a->_sig       = std::move(sig);
    a->_size      = size;
    a->_tables    = std::move(tables);
    a->_term_text = maltsev_term;
    AlgebraPtr result(a);
    a->_program = a->compile(parse_term(maltsev_term));
    if (stack_depth(a->_program, a->_sig) > 64) {
      fail(Errc::parse_error, "Mal'tsev term nests too deeply");
    }
    return result;
  }

  AlgebraPtr FiniteAlgebra::make(std::string                    name,
                                 Signature                      sig,
                                 size_t                         size,
                                 std::vector<std::vector<Elem>> tables,
                                 std::string const&             maltsev_term) {
    if (size == 0) {
      fail(Errc::malformed_table, name + ": carrier must be nonempty");
    }
    if (tables.size() != sig.size()) {
      fail(Errc::malformed_table,
           name + ": expected " + std::to_string(sig.size()) + " tables, got "
               + std::to_string(tables.size()));
    }
    for (size_t op = 0; op < sig.size(); ++op) {
      size_t expect = checked_power(size, sig[op].arity);
      if (expect == std::numeric_limits<size_t>::max()
          || expect > (size_t(1) << 28)) {
        fail(Errc::malformed_table,
             name + ": table of " + sig[op].name + " is too large");
      }
      if (tables[op].size() != expect) {
        fail(Errc::malformed_table,
             name + ": table of " + sig[op].name + " has "
                 + std::to_string(tables[op].size()) + " entries, expected "
                 + std::to_string(expect));
      }
      for (size_t i = 0; i < tables[op].size(); ++i) {
        if (tables[op][i] >= size) {
          fail(Errc::malformed_table,
               name + ": table of " + sig[op].name + " has entry "
                   + std::to_string(tables[op][i]) + " at position "
                   + std::to_string(i) + ", outside the carrier of size "
                   + std::to_string(size));
        }
      }
    }
    auto a = make_trusted(
        std::move(name), std::move(sig), size, std::move(tables), maltsev_term);
    if (auto w = a->maltsev_violation()) {
      fail(Errc::not_maltsev,
           a->name() + ": p(" + std::to_string((*w)[0]) + ","
               + std::to_string((*w)[1]) + "," + std::to_string((*w)[2])
               + ") violates the Mal'tsev identities");
    }
    return a;
  }

}  // namespace simal
