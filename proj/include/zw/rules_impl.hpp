// Copyright 2026 The zwcalc Authors
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

#pragma once

#include <numbers>
#include <random>

namespace zw {

template <typename Rng>
PhaseVector random_phase(int d, Rng& rng) {
  std::uniform_real_distribution<double> modulus(0.5, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<Complex> e;
  e.reserve(d - 1);
  for (int k = 1; k < d; ++k) {
    const double r = modulus(rng);
    e.push_back(std::polar(r, angle(rng)));
  }
  return PhaseVector(d, std::move(e));
}

}  // namespace zw
