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

#include <stdexcept>
#include <string>

namespace qdeph {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QDEPH_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

QDEPH_DEFINE_ERROR(DimensionError);      // shape mismatch between operands
QDEPH_DEFINE_ERROR(HermiticityError);    // input not Hermitian within tolerance
QDEPH_DEFINE_ERROR(ConvergenceError);    // eigensolver failed to converge
QDEPH_DEFINE_ERROR(TPError);             // Kraus family not trace preserving
QDEPH_DEFINE_ERROR(CorrelationError);    // dephasing kernel invariant violated
QDEPH_DEFINE_ERROR(MeasureError);        // invalid atomic circle measure
QDEPH_DEFINE_ERROR(StateError);          // density-matrix invariant violated
QDEPH_DEFINE_ERROR(NormalizationError);  // vector/amplitude normalization violated
QDEPH_DEFINE_ERROR(SupportError);        // support inclusion precondition violated
QDEPH_DEFINE_ERROR(IsometryError);       // columns not orthonormal
QDEPH_DEFINE_ERROR(ConfigError);         // invalid campaign configuration
QDEPH_DEFINE_ERROR(IOError);             // file or JSON parse failure

#undef QDEPH_DEFINE_ERROR

}  // namespace qdeph
