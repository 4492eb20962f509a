#include "simal/term.hpp"

#include <cctype>

#include "simal/error.hpp"

namespace simal {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view s) : _s(s) {}

      TermNode parse() {
        TermNode t = term();
        skip_ws();
        if (_pos != _s.size()) {
          error("trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void error(std::string const& msg) const {
        fail(Errc::parse_error,
             "term \"" + std::string(_s) + "\" at offset " + std::to_string(_pos)
                 + ": " + msg);
      }

      void skip_ws() {
        while (_pos < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_ws();
        if (_pos < _s.size() && _s[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      std::string ident() {
        skip_ws();
        size_t start = _pos;
        while (_pos < _s.size()
               && (std::isalnum(static_cast<unsigned char>(_s[_pos]))
                   || _s[_pos] == '_')) {
          ++_pos;
        }
        if (start == _pos) {
          error("expected identifier");
        }
        return std::string(_s.substr(start, _pos - start));
      }

      TermNode term() {
        TermNode t;
        t.head = ident();
        if (accept('(')) {
          if (!accept(')')) {
            do {
              t.args.push_back(term());
            } while (accept(','));
            if (!accept(')')) {
              error("expected ')'");
            }
          }
          return t;
        }
        if (t.head == "x") {
          t.var = 0;
        } else if (t.head == "y") {
          t.var = 1;
        } else if (t.head == "z") {
          t.var = 2;
        }
        return t;
      }

      std::string_view _s;
      size_t           _pos = 0;
    };

  }  // namespace

  TermNode parse_term(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(TermNode const& t) {
    if (t.is_var() || t.args.empty()) {
      return t.head;
    }
    std::string out = t.head + "(";
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += to_string(t.args[i]);
    }
    return out + ")";
  }

}  // namespace simal
