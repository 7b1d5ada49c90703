// Copyright 2026 The finicode Authors
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

#ifndef FINICODE_ERRORS_HPP
#define FINICODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finicode {

/// Base class for the library's domain errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability is not an exact power of one half.
class NonDyadicProbability : public Error {
 public:
  using Error::Error;
};

/// A window holds a symbol outside the coder's input alphabet.
class InvalidSymbol : public Error {
 public:
  using Error::Error;
};

/// A coder needs a matching level beyond the configured ladder cap.
class LadderUnavailable : public Error {
 public:
  using Error::Error;
};

/// Too many censored observations for the requested estimate.
class InsufficientCoverage : public Error {
 public:
  using Error::Error;
};

/// The Markov chain is not irreducible.
class Reducible : public Error {
 public:
  using Error::Error;
};

}  // namespace finicode

#endif  // FINICODE_ERRORS_HPP
