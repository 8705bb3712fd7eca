// Copyright 2026 The coregames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COREGAMES_CARDINAL_HPP
#define COREGAMES_CARDINAL_HPP

#include <cstddef>
#include <string>

#include "coregames/errors.hpp"

namespace coregames {

// A finite count or "infinity", totally ordered with every finite value
// below the infinite one.  The codomain of the Nakamura and kappa numbers.
class ExtendedCardinal {
 public:
  static constexpr ExtendedCardinal finite(std::size_t k) {
    return ExtendedCardinal(k, true);
  }
  static constexpr ExtendedCardinal infinite() {
    return ExtendedCardinal(0, false);
  }

  constexpr bool is_finite() const { return finite_; }

  std::size_t finite_value() const {
    if (!finite_) throw PreconditionError("cardinal is infinite");
    return value_;
  }

  friend constexpr bool operator==(ExtendedCardinal a, ExtendedCardinal b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtendedCardinal a, ExtendedCardinal b) {
    return !(a == b);
  }
  friend constexpr bool operator<(ExtendedCardinal a, ExtendedCardinal b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(ExtendedCardinal a, ExtendedCardinal b) {
    return a < b || a == b;
  }
  friend constexpr bool operator>(ExtendedCardinal a, ExtendedCardinal b) {
    return b < a;
  }
  friend constexpr bool operator>=(ExtendedCardinal a, ExtendedCardinal b) {
    return b <= a;
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : "inf";
  }

 private:
  constexpr ExtendedCardinal(std::size_t value, bool finite)
      : value_(value), finite_(finite) {}

  std::size_t value_;
  bool finite_;
};

}  // namespace coregames

#endif  // COREGAMES_CARDINAL_HPP
