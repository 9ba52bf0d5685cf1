/*
 * Copyright 2026 The SCP-ABE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SCPABE_ERRORS_H_
#define SCPABE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace scpabe {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-supplied input violates a documented precondition: bad attribute
// labels, invalid lattices, non-subset delegation requests.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bytes that do not decode: wrong length, non-canonical or off-curve
// encodings, unknown format versions, malformed documents.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Objects produced by different group instantiations were combined.
class ProviderMismatchError : public Error {
 public:
  using Error::Error;
};

// A user key lacks the structural attributes a ciphertext requires.
class KeyMismatchError : public Error {
 public:
  using Error::Error;
};

// AEAD verification failed on data the caller was entitled to open.
class AuthenticationError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A bounded deterministic randomness source ran out of bytes.
class RandomnessExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace scpabe

#endif  // SCPABE_ERRORS_H_
