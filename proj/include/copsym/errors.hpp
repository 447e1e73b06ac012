// SPDX-License-Identifier: Apache-2.0
//
// copsym: visualization and nonparametric testing of bivariate copula symmetry
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace copsym {

/// A model parameter or configuration value lies outside its admissible range.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numeric routine (quadrature, root finding) failed to converge.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data is unusable (degenerate column, too few rows, non-finite value).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem or parse failure in the I/O layer.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace copsym
