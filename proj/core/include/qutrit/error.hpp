// Copyright 2026 The qutrit Authors
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

#ifndef QUTRIT_ERROR_HPP
#define QUTRIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qutrit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define QUTRIT_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
       public:                               \
        using Error::Error;                  \
    };

QUTRIT_DEFINE_ERROR(ZeroDivision)
QUTRIT_DEFINE_ERROR(ModeMismatch)
QUTRIT_DEFINE_ERROR(DimensionMismatch)
QUTRIT_DEFINE_ERROR(NotHermitian)
QUTRIT_DEFINE_ERROR(IndexOutOfRange)
QUTRIT_DEFINE_ERROR(ZeroMatrix)
QUTRIT_DEFINE_ERROR(UnknownLabel)
QUTRIT_DEFINE_ERROR(NotNormalized)
QUTRIT_DEFINE_ERROR(NegativeEigenvalue)
QUTRIT_DEFINE_ERROR(NotDiagonalizedByBasis)
QUTRIT_DEFINE_ERROR(ShotsZero)
QUTRIT_DEFINE_ERROR(ParseError)

#undef QUTRIT_DEFINE_ERROR

}  // namespace qutrit

#endif  // QUTRIT_ERROR_HPP
