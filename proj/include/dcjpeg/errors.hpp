// Copyright 2026 The dcjpeg Authors
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

namespace dcjpeg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed image file (bad header, unsupported depth or maxval).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible or unsupported dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input too small for the requested transform.
class SizeError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// JPEG marker or segment structure is invalid.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Entropy-coded data contains a code that is not in the Huffman table.
class HuffmanError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Stream ended before the scan or a segment was complete.
class TruncationError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A coefficient is outside what the baseline Huffman tables can represent.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// DC prediction was requested for a block without any recovered neighbour.
class NoNeighborError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcjpeg
