#pragma once

// Text form of Renner elements, with 1-based vertex labels:
//   face=[1,2,3];images=[2,3,1]     or     zero

#include <string>
#include <string_view>

#include "renner/monoid.hpp"

namespace renner {

  std::string format_element(RennerMonoid const& R, RennerElement a);

  //! Throws Error(BadElement) naming the failed check.
  RennerElement parse_element(RennerMonoid const& R, std::string_view text);

}  // namespace renner
