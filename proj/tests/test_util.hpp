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

#ifndef LC_TESTS_TEST_UTIL_HPP_
#define LC_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "lc/generator.hpp"
#include "lc/random.hpp"

namespace lc::testing {

// `n` well-typed sugared programs from stream `seed`, skipping draws whose
// goal type has no inhabitant within the depth budget.
inline std::vector<std::pair<Term, Type>> generated_programs(std::size_t n, std::uint64_t seed,
                                                             const GenConfig& cfg = GenConfig{}) {
  std::vector<std::pair<Term, Type>> out;
  for (std::uint64_t k = 0; out.size() < n; ++k) {
    Rng rng = Rng::stream(seed, k);
    const Type ty = generate_type(cfg, rng);
    try {
      out.emplace_back(generate_term(ty, cfg, rng), ty);
    } catch (const GenerationFailure&) {
    }
  }
  return out;
}

}  // namespace lc::testing

#endif  // LC_TESTS_TEST_UTIL_HPP_
