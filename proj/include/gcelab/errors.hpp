// Copyright 2026 The gcelab Authors
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

#ifndef GCELAB_ERRORS_HPP
#define GCELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcelab {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the failure modes that callers (notably the CLI) map to distinct exit
// codes.

/// A circuit or estimator was requested for a copy count that is not prime.
/// The permutation-test estimator of Tr(rho^K) is only sound for prime K.
class UnsupportedOrderError : public std::runtime_error {
 public:
  explicit UnsupportedOrderError(int order)
      : std::runtime_error("unsupported order K=" + std::to_string(order) +
                           ": Tr(D^(z) rho^(xK)) = Tr(rho^K) holds for every z "
                           "if and only if K is prime"),
        order_(order) {}

  int order() const noexcept { return order_; }

 private:
  int order_;
};

/// A simulation would exceed the configured memory guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A measurement outcome with zero probability was used as if it occurred.
class DegenerateOutcomeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (statevector JSON, gate list, CSV table).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcelab

#endif  // GCELAB_ERRORS_HPP
