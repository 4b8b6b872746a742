// Copyright 2026 The pbtsim Authors
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

#include "pbtsim/resource_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pbtsim {

namespace {

constexpr int kMaxFilePorts = 8;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string next_header(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return line;
  }
  throw std::invalid_argument(std::string("resource file: missing ") + what);
}

ComplexMatrix read_matrix(std::istream& in, std::int64_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) {
      double re = 0.0;
      double im = 0.0;
      if (!(in >> re >> im)) throw std::invalid_argument("resource file: truncated entries");
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g", m(r, c).real(), m(r, c).imag());
      out << (c ? "  " : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace

ResourceFile read_resource(std::istream& in) {
  if (next_header(in, "magic line") != "PBTRES 1") {
    throw std::invalid_argument("resource file: expected 'PBTRES 1'");
  }
  const std::string nline = next_header(in, "port count");
  if (!nline.starts_with("N=")) throw std::invalid_argument("resource file: expected N=<int>");
  int n = 0;
  const char* first = nline.data() + 2;
  const char* last = nline.data() + nline.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n < 1 || n > kMaxFilePorts) {
    throw std::invalid_argument("resource file: bad port count");
  }
  const std::string form = next_header(in, "form");
  const double tol = kResourceFileTolerance;
  if (form == "FORM=FULL") {
    FullResource full{n, read_matrix(in, dim_of(2 * n))};
    validate(full, tol, tol);
    return full;
  }
  if (form == "FORM=REDUCED") {
    ReducedResource reduced;
    reduced.n = n;
    for (auto& b : reduced.blocks) b = read_matrix(in, dim_of(n));
    validate(reduced, tol, tol);
    return reduced;
  }
  throw std::invalid_argument("resource file: expected FORM=FULL or FORM=REDUCED");
}

ResourceFile read_resource_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("resource file: cannot open '" + path + "'");
  return read_resource(in);
}

void write_resource(std::ostream& out, const FullResource& full) {
  out << "PBTRES 1\nN=" << full.n << "\nFORM=FULL\n";
  write_matrix(out, full.rho);
}

void write_resource(std::ostream& out, const ReducedResource& reduced) {
  out << "PBTRES 1\nN=" << reduced.n << "\nFORM=REDUCED\n";
  for (const auto& b : reduced.blocks) write_matrix(out, b);
}

}  // namespace pbtsim
