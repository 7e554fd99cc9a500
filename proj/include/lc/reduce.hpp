// Copyright 2026 The lcgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LC_REDUCE_HPP_
#define LC_REDUCE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "lc/term.hpp"

namespace lc {

enum class Strategy { WHNF, DNF };
enum class Renaming { VR, NVR };

std::string_view to_string(Strategy s);
std::string_view to_string(Renaming r);

inline constexpr std::size_t kDefaultFuel = 10000;

struct ReductionResult {
  Term normal_form;
  std::size_t steps = 0;
  Strategy strategy = Strategy::WHNF;
  Renaming renaming = Renaming::NVR;
};

// Thrown when a reduction needs more steps than its fuel allows.
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::size_t fuel);
  std::size_t fuel() const { return fuel_; }

 private:
  std::size_t fuel_;
};

// Normal-order reduction of either calculus. One step is one beta
// contraction, one ite selection or one foldr rule.
//
// WHNF reduces only the head: the result is a lambda, a data constructor,
// a literal, or a stuck spine. Cons fields and lambda bodies are left alone.
// DNF reduces to WHNF and then recurses into every immediate subterm; its
// step count includes all subterm reductions.
//
// NVR keeps binder names except where capture avoidance forces a fresh one.
// VR renumbers binders x0, x1, ... in preorder.
ReductionResult reduce(const Term& t, Strategy strategy, Renaming renaming,
                       std::size_t fuel = kDefaultFuel);

inline ReductionResult reduce_whnf(const Term& t, std::size_t fuel = kDefaultFuel) {
  return reduce(t, Strategy::WHNF, Renaming::NVR, fuel);
}
inline ReductionResult reduce_dnf(const Term& t, std::size_t fuel = kDefaultFuel) {
  return reduce(t, Strategy::DNF, Renaming::NVR, fuel);
}

// Renumbers every binder by its preorder position. Free variables are left
// untouched, so the result is only meaningful for closed terms.
Term rename_vr(const Term& t);

}  // namespace lc

#endif  // LC_REDUCE_HPP_
