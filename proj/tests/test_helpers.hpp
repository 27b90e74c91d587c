// Copyright 2026 The qdeph authors
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

#include "qdeph/mathcore.hpp"
#include "qdeph/rng.hpp"

namespace qdeph::testing {

inline CMat random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

inline CMat random_hermitian(Eigen::Index n, Rng& rng) {
  const CMat g = random_matrix(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

inline CMat random_psd(Eigen::Index n, Rng& rng) {
  const CMat g = random_matrix(n, n, rng);
  return g * g.adjoint();
}

inline CMat sigma_x() {
  CMat s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

inline CMat sigma_z() {
  CMat s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

}  // namespace qdeph::testing
