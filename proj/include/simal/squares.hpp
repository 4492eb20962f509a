#pragma once

#include <string>

#include "simal/homomorphism.hpp"

namespace simal {

  //     f
  //  A ---> B
  //  |      |
  // g|      |h
  //  v      v
  //  C ---> D
  //     j
  struct DoubleExtensionReport {
    bool   comparison_surjective = false;  // <f,g> : A -> B x_D C
    bool   image_criterion       = false;  // f(Eq[g]) == Eq[h]
    size_t pullback_size         = 0;
    size_t comparison_image      = 0;

    bool holds() const noexcept {
      return comparison_surjective;
    }
  };

  // Throws NotCommuting if h f != j g, NotRegularEpi if a side is not
  // surjective, PropertyViolation if the two criteria disagree.
  DoubleExtensionReport is_double_extension(Homomorphism const& f,
                                            Homomorphism const& g,
                                            Homomorphism const& h,
                                            Homomorphism const& j);

}  // namespace simal
