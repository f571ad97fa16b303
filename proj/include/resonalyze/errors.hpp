// Copyright 2026 The Resonalyze Authors
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

#include <complex>
#include <stdexcept>
#include <string>

namespace resonalyze {

// Bad caller input: zero denominators, non-positive periods, malformed forcings.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A float could not be matched to q*pi^e within the caller's tolerance.
class NoExactRepresentation : public std::runtime_error {
 public:
  NoExactRepresentation(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class AccuracyFailure : public std::runtime_error {
 public:
  AccuracyFailure(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// The requested quantity is undefined for this classification case (e.g. the L-infinity
// bound for integer period ratios).
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Operation called on an object in the wrong state (witness on a bounded system).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Forcing frequency equals the natural frequency where a beat was requested.
class ResonantCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point sits on (or within 1e-12 of) a pole of a transform.
class PoleProximity : public std::runtime_error {
 public:
  PoleProximity(const std::string& what, std::complex<double> numerator)
      : std::runtime_error(what), numerator_(numerator) {}
  std::complex<double> numerator() const noexcept { return numerator_; }

 private:
  std::complex<double> numerator_;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace resonalyze
