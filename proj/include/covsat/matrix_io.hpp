// covsat: constructing and verifying short covering codes and saturating sets.
//
// Copyright 2026 The covsat authors
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

#include <iosfwd>
#include <string>

#include "covsat/codes.hpp"

namespace covsat::io {

/// Plain-text matrix container:
///
///   covsat-matrix 1
///   field <p> <k> <c0> ... <ck>
///   size <r> <n>
///   provenance <free text, one line>
///   <n lines, each with the r entries of one column, top row first>
///
/// The field line carries the characteristic, the absolute degree, and the
/// canonical modulus coefficients (ascending, including the leading 1) as a
/// checksum: contexts are canonical, so the reader rebuilds GF(p^k) and
/// rejects a file whose modulus differs.  Only prime-rooted contexts are
/// serializable; tower contexts are an in-memory construction aid.
/// write(read(f)) reproduces f byte for byte.

struct MatrixFile {
  codes::ParityCheckMatrix H;
  std::string provenance;
};

/// Serializes H.  Throws invalid_argument_error when the field is a tower
/// context or the provenance contains a newline.
void write_matrix(std::ostream& os, const codes::ParityCheckMatrix& H,
                  const std::string& provenance);

/// Parses a matrix file.  Throws invalid_argument_error with a line-numbered
/// message on any structural defect.
[[nodiscard]] MatrixFile read_matrix(std::istream& is);

/// File-path convenience wrappers (throw invalid_argument_error when the
/// file cannot be opened or written).
void write_matrix_file(const std::string& path,
                       const codes::ParityCheckMatrix& H,
                       const std::string& provenance);
[[nodiscard]] MatrixFile read_matrix_file(const std::string& path);

}  // namespace covsat::io
