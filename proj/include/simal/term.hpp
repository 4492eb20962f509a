#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simal {

  // A term over the variables x, y, z in prefix notation, for example
  // "mul(mul(x,inv(y)),z)".  A bare identifier other than x, y, z is read as
  // a constant, as is "name()".
  struct TermNode {
    std::string           head;
    std::vector<TermNode> args;
    int                   var = -1;  // 0, 1, 2 for x, y, z; -1 otherwise

    bool is_var() const noexcept {
      return var >= 0;
    }
  };

  TermNode parse_term(std::string_view text);

  std::string to_string(TermNode const& t);

  // Postfix program for a term, resolved against an operation list.
  struct TermInstr {
    enum class Kind : std::uint8_t { var, op } kind;
    std::uint32_t index;  // variable number or operation index
  };

  using TermProgram = std::vector<TermInstr>;

}  // namespace simal
