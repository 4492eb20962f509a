#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simal {

  // Every failure raised by the library carries one of these codes.  The code
  // also fixes the exit class used by the command line tool.
  enum class Errc {
    // input / validation errors (exit 1)
    parse_error,
    io_error,
    malformed_table,
    not_maltsev,
    signature_mismatch,
    not_homomorphism,
    not_surjective,
    not_commuting,
    not_regular_epi,
    identity_violated,
    inconsistent_constants,
    unsupported_variety,
    not_levelwise_surjective,
    precondition_unmet,
    invalid_parameters,
    // internal cross-checks that failed (exit 2)
    join_not_composite,
    not_transitive,
    triple_equality_violated,
    composition_ill_defined,
    homotopy_mismatch,
    property_violation,
    // size limits (exit 3)
    level_too_large,
    budget_exceeded,
    no_central_quotient,
  };

  enum class ErrorClass { input = 1, property = 2, budget = 3 };

  constexpr ErrorClass error_class(Errc c) noexcept {
    switch (c) {
      case Errc::join_not_composite:
      case Errc::not_transitive:
      case Errc::triple_equality_violated:
      case Errc::composition_ill_defined:
      case Errc::homotopy_mismatch:
      case Errc::property_violation:
        return ErrorClass::property;
      case Errc::level_too_large:
      case Errc::budget_exceeded:
      case Errc::no_central_quotient:
        return ErrorClass::budget;
      default:
        return ErrorClass::input;
    }
  }

  constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
      case Errc::parse_error: return "ParseError";
      case Errc::io_error: return "IoError";
      case Errc::malformed_table: return "MalformedTable";
      case Errc::not_maltsev: return "NotMaltsev";
      case Errc::signature_mismatch: return "SignatureMismatch";
      case Errc::not_homomorphism: return "NotHomomorphism";
      case Errc::not_surjective: return "NotSurjective";
      case Errc::not_commuting: return "NotCommuting";
      case Errc::not_regular_epi: return "NotRegularEpi";
      case Errc::identity_violated: return "IdentityViolated";
      case Errc::inconsistent_constants: return "InconsistentConstants";
      case Errc::unsupported_variety: return "UnsupportedVariety";
      case Errc::not_levelwise_surjective: return "NotLevelwiseSurjective";
      case Errc::precondition_unmet: return "PreconditionUnmet";
      case Errc::invalid_parameters: return "InvalidParameters";
      case Errc::join_not_composite: return "JoinNotComposite";
      case Errc::not_transitive: return "NotTransitive";
      case Errc::triple_equality_violated: return "TripleEqualityViolated";
      case Errc::composition_ill_defined: return "CompositionIllDefined";
      case Errc::homotopy_mismatch: return "HomotopyMismatch";
      case Errc::property_violation: return "PropertyViolation";
      case Errc::level_too_large: return "LevelTooLarge";
      case Errc::budget_exceeded: return "BudgetExceeded";
      case Errc::no_central_quotient: return "NoCentralQuotient";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

    ErrorClass error_class() const noexcept {
      return simal::error_class(_code);
    }

   private:
    Errc _code;
  };

  [[noreturn]] inline void fail(Errc code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace simal
