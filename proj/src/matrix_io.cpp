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

#include "covsat/matrix_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covsat/errors.hpp"
#include "covsat/field.hpp"

namespace covsat::io {

namespace {

constexpr const char* kMagic = "covsat-matrix";
constexpr int kVersion = 1;

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  throw invalid_argument_error("matrix file, line " + std::to_string(lineno) +
                               ": " + what);
}

/// Reads one line, counting it; throws on EOF.
std::string need_line(std::istream& is, std::size_t& lineno,
                      const char* what) {
  std::string line;
  if (!std::getline(is, line)) {
    throw invalid_argument_error(
        std::string("matrix file: unexpected end of file, expected ") + what);
  }
  ++lineno;
  return line;
}

/// Parses an unsigned decimal token; rejects junk and overflow.
std::uint64_t parse_u64(const std::string& tok, std::size_t lineno,
                        const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    bad_line(lineno, std::string("expected a decimal ") + what + ", got '" +
                         tok + "'");
  }
  std::uint64_t v = 0;
  for (char c : tok) {
    if (v > (std::uint64_t{1} << 62) / 10) {
      bad_line(lineno, std::string(what) + " out of range: '" + tok + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(std::move(t));
  return toks;
}

}  // namespace

void write_matrix(std::ostream& os, const codes::ParityCheckMatrix& H,
                  const std::string& provenance) {
  const gf::Field& F = H.field();
  if (F.is_tower()) {
    throw invalid_argument_error(
        "write_matrix: matrix files hold prime-rooted field contexts only; "
        "rebuild the matrix over GF(" +
        std::to_string(F.order()) + ") directly");
  }
  if (provenance.find('\n') != std::string::npos ||
      provenance.find('\r') != std::string::npos) {
    throw invalid_argument_error(
        "write_matrix: provenance must be a single line");
  }
  os << kMagic << ' ' << kVersion << '\n';
  os << "field " << F.characteristic() << ' ' << F.degree();
  for (const auto c : F.modulus()) os << ' ' << c;
  os << '\n';
  os << "size " << H.rows() << ' ' << H.cols() << '\n';
  os << "provenance";
  if (!provenance.empty()) os << ' ' << provenance;
  os << '\n';
  for (std::uint32_t j = 0; j < H.cols(); ++j) {
    for (std::uint32_t i = 0; i < H.rows(); ++i) {
      os << (i ? " " : "") << H.at(i, j);
    }
    os << '\n';
  }
  if (!os) {
    throw invalid_argument_error("write_matrix: stream write failed");
  }
}

MatrixFile read_matrix(std::istream& is) {
  std::size_t lineno = 0;

  {
    const std::string line = need_line(is, lineno, "the header");
    const auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != kMagic) {
      bad_line(lineno, "not a covsat matrix file");
    }
    const auto ver = parse_u64(toks[1], lineno, "format version");
    if (ver != static_cast<std::uint64_t>(kVersion)) {
      bad_line(lineno, "unsupported format version " + toks[1]);
    }
  }

  gf::Field F;
  {
    const std::string line = need_line(is, lineno, "the field line");
    const auto toks = split_ws(line);
    if (toks.size() < 3 || toks[0] != "field") {
      bad_line(lineno, "expected 'field <p> <k> <c0> ... <ck>'");
    }
    const std::uint64_t p = parse_u64(toks[1], lineno, "characteristic");
    const std::uint64_t k = parse_u64(toks[2], lineno, "degree");
    if (p < 2 || k < 1 || k > 63) {
      bad_line(lineno, "invalid field parameters");
    }
    if (toks.size() != 3 + k + 1) {
      bad_line(lineno, "expected " + std::to_string(k + 1) +
                           " modulus coefficients, got " +
                           std::to_string(toks.size() - 3));
    }
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      if (q > gf::kMaxFieldOrder / p) bad_line(lineno, "field order too large");
      q *= p;
    }
    F = gf::build_field(q);  // validates p prime, q a supported order
    std::vector<gf::elem_t> mod;
    mod.reserve(k + 1);
    for (std::size_t i = 3; i < toks.size(); ++i) {
      mod.push_back(static_cast<gf::elem_t>(
          parse_u64(toks[i], lineno, "modulus coefficient")));
    }
    if (mod != F.modulus()) {
      bad_line(lineno,
               "modulus does not match the canonical context for this order");
    }
  }

  std::uint64_t r = 0;
  std::uint64_t n = 0;
  {
    const std::string line = need_line(is, lineno, "the size line");
    const auto toks = split_ws(line);
    if (toks.size() != 3 || toks[0] != "size") {
      bad_line(lineno, "expected 'size <r> <n>'");
    }
    r = parse_u64(toks[1], lineno, "row count");
    n = parse_u64(toks[2], lineno, "column count");
    if (r < 1 || r > 250) bad_line(lineno, "row count out of range");
    if (n > std::uint64_t{1} << 31) bad_line(lineno, "column count out of range");
  }

  std::string provenance;
  {
    const std::string line = need_line(is, lineno, "the provenance line");
    if (line != "provenance" &&
        line.rfind("provenance ", 0) != 0) {
      bad_line(lineno, "expected 'provenance <text>'");
    }
    if (line.size() > 11) provenance = line.substr(11);
  }

  codes::ParityCheckMatrix H(F, static_cast<std::uint32_t>(r));
  const std::uint64_t q = F.order();
  std::vector<gf::elem_t> col(r);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::string line = need_line(is, lineno, "a column line");
    const auto toks = split_ws(line);
    if (toks.size() != r) {
      bad_line(lineno, "expected " + std::to_string(r) + " entries, got " +
                           std::to_string(toks.size()));
    }
    for (std::uint64_t i = 0; i < r; ++i) {
      const std::uint64_t e = parse_u64(toks[i], lineno, "entry");
      if (e >= q) {
        bad_line(lineno, "entry " + toks[i] + " is not an element of GF(" +
                             std::to_string(q) + ")");
      }
      col[i] = static_cast<gf::elem_t>(e);
    }
    H.append_column(col);
  }

  std::string tail;
  while (std::getline(is, tail)) {
    ++lineno;
    if (!split_ws(tail).empty()) {
      bad_line(lineno, "trailing content after the last column");
    }
  }
  return MatrixFile{std::move(H), std::move(provenance)};
}

void write_matrix_file(const std::string& path,
                       const codes::ParityCheckMatrix& H,
                       const std::string& provenance) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw invalid_argument_error("cannot open '" + path + "' for writing");
  }
  write_matrix(os, H, provenance);
  os.close();
  if (!os) {
    throw invalid_argument_error("failed writing '" + path + "'");
  }
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw invalid_argument_error("cannot open '" + path + "' for reading");
  }
  return read_matrix(is);
}

}  // namespace covsat::io
