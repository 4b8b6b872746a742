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

#include "pbtsim/resource_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbtsim/resource_io.hpp"

namespace pbtsim {

namespace {

void check_density(const ComplexMatrix& m, double tol, double psd_tol, const char* what) {
  if (hermiticity_error(m) > tol) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) {
    throw std::invalid_argument(std::string(what) + ": trace is not 1");
  }
  if (hermitian_eigenvalues(m).minCoeff() < -psd_tol) {
    throw std::invalid_argument(std::string(what) + ": not positive semidefinite");
  }
}

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void validate(const FullResource& full, double tol, double psd_tol) {
  if (full.n < 1) throw std::invalid_argument("resource: need at least one port");
  const std::int64_t dim = dim_of(2 * full.n);
  if (full.rho.rows() != dim || full.rho.cols() != dim) {
    throw std::invalid_argument("resource: dimension does not match port count");
  }
  check_density(full.rho, tol, psd_tol, "resource");
}

void validate(const ReducedResource& reduced, double tol, double psd_tol) {
  if (reduced.n < 1) throw std::invalid_argument("reduced resource: need at least one port");
  const std::int64_t dim = dim_of(reduced.n);
  for (const auto& b : reduced.blocks) {
    if (b.rows() != dim || b.cols() != dim) {
      throw std::invalid_argument("reduced resource: block dimension does not match port count");
    }
  }
  const auto& r11 = reduced.block(BlockTag::k11);
  const auto& r22 = reduced.block(BlockTag::k22);
  if (max_abs_diff(reduced.block(BlockTag::k21), reduced.block(BlockTag::k12).adjoint()) > tol) {
    throw std::invalid_argument("reduced resource: r21 != r12^dagger");
  }
  if (hermiticity_error(r11) > tol || hermiticity_error(r22) > tol) {
    throw std::invalid_argument("reduced resource: diagonal blocks not Hermitian");
  }
  if (hermitian_eigenvalues(r11).minCoeff() < -psd_tol ||
      hermitian_eigenvalues(r22).minCoeff() < -psd_tol) {
    throw std::invalid_argument("reduced resource: diagonal blocks not PSD");
  }
  if (std::abs(r11.trace() + r22.trace() - Complex(1.0, 0.0)) > tol) {
    throw std::invalid_argument("reduced resource: trace is not 1");
  }
}

ReducedResource reduce(const FullResource& full) {
  const int n = full.n;
  if (n < 1 || full.rho.rows() != dim_of(2 * n) || full.rho.cols() != dim_of(2 * n)) {
    throw std::invalid_argument("reduce: dimension does not match port count");
  }
  std::vector<int> traced;
  for (int k = 1; k < n; ++k) traced.push_back(n + k);
  const ComplexMatrix kept = partial_trace(full.rho, 2 * n, traced);  // (A_1..A_N, B_1)

  std::vector<int> order;
  for (int k = 1; k < n; ++k) order.push_back(k);
  order.push_back(0);
  order.push_back(n);
  const ComplexMatrix m = permute_qubits(kept, order);  // (A_2..A_N, A_1, B_1)

  const std::int64_t dim = dim_of(n);
  ReducedResource out;
  out.n = n;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix b(dim, dim);
      for (std::int64_t r = 0; r < dim; ++r) {
        for (std::int64_t c = 0; c < dim; ++c) b(r, c) = m(2 * r + i, 2 * c + j);
      }
      out.blocks[static_cast<std::size_t>(2 * i + j)] = std::move(b);
    }
  }
  return out;
}

FullResource product_resource(const ComplexMatrix& port, int n) {
  if (port.rows() != 4 || port.cols() != 4) {
    throw std::invalid_argument("product_resource: port state must be 4x4");
  }
  if (n < 1) throw std::invalid_argument("product_resource: need at least one port");
  const ComplexMatrix interleaved = kron_power(port, n);  // (A_1, B_1, A_2, B_2, ...)
  std::vector<int> order(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    order[static_cast<std::size_t>(k)] = 2 * k;
    order[static_cast<std::size_t>(n + k)] = 2 * k + 1;
  }
  return FullResource{n, permute_qubits(interleaved, order)};
}

FullResource symmetrize(const FullResource& full) {
  const int n = full.n;
  if (n > kMaxSymmetrizePorts) {
    throw std::domain_error("symmetrize: port count above cap of " +
                            std::to_string(kMaxSymmetrizePorts));
  }
  if (n < 1 || full.rho.rows() != dim_of(2 * n)) {
    throw std::invalid_argument("symmetrize: dimension does not match port count");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> order(static_cast<std::size_t>(2 * n));
  ComplexMatrix acc = ComplexMatrix::Zero(full.rho.rows(), full.rho.cols());
  std::int64_t count = 0;
  do {
    for (int k = 0; k < n; ++k) {
      order[static_cast<std::size_t>(k)] = perm[static_cast<std::size_t>(k)];
      order[static_cast<std::size_t>(n + k)] = n + perm[static_cast<std::size_t>(k)];
    }
    acc += permute_qubits(full.rho, order);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FullResource{n, acc / static_cast<double>(count)};
}

ResourceFamily parse_family(std::string_view text) {
  auto number_after = [&](std::string_view prefix) {
    const std::string rest(text.substr(prefix.size()));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("resource: bad parameter in '" + std::string(text) + "'");
    }
    if (used != rest.size()) {
      throw std::invalid_argument("resource: bad parameter in '" + std::string(text) + "'");
    }
    return v;
  };
  if (text == "bell") return BellFamily{};
  if (text.starts_with("adchoi:")) return AdChoiFamily{number_after("adchoi:")};
  if (text.starts_with("alternate:")) return AlternateFamily{number_after("alternate:")};
  return FileFamily{std::string(text)};
}

ComplexMatrix port_state(const ResourceFamily& family) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  if (std::holds_alternative<BellFamily>(family)) {
    m(1, 1) = 0.5;
    m(1, 2) = -0.5;
    m(2, 1) = -0.5;
    m(2, 2) = 0.5;
  } else if (const auto* ad = std::get_if<AdChoiFamily>(&family)) {
    check_probability(ad->p, "damping probability");
    const double p = ad->p;
    const double off = -0.5 * std::sqrt(1.0 - p);
    m(0, 0) = 0.5 * p;
    m(1, 1) = 0.5 * (1.0 - p);
    m(1, 2) = off;
    m(2, 1) = off;
    m(2, 2) = 0.5;
  } else if (const auto* alt = std::get_if<AlternateFamily>(&family)) {
    check_probability(alt->a, "alternate parameter");
    const double a = alt->a;
    const double off = -std::sqrt(a * (1.0 - a));
    m(1, 1) = a;
    m(1, 2) = off;
    m(2, 1) = off;
    m(2, 2) = 1.0 - a;
  } else {
    throw std::invalid_argument("port_state: file resources have no single-port form");
  }
  return m;
}

ReducedResource make_family(const ResourceFamily& family, int n) {
  if (n < 1) throw std::invalid_argument("make_family: need at least one port");
  if (const auto* file = std::get_if<FileFamily>(&family)) {
    const ResourceFile loaded = read_resource_file(file->path);
    if (const auto* full = std::get_if<FullResource>(&loaded)) {
      if (full->n != n) throw std::invalid_argument("make_family: file port count mismatch");
      return reduce(symmetrize(*full));
    }
    const auto& reduced = std::get<ReducedResource>(loaded);
    if (reduced.n != n) throw std::invalid_argument("make_family: file port count mismatch");
    return reduced;
  }

  const ComplexMatrix port = port_state(family);
  // Conditional single-port blocks <i|_B port |j>_B acting on A.
  std::array<ComplexMatrix, 4> single;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix b(2, 2);
      for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) b(a, c) = port(2 * a + i, 2 * c + j);
      }
      single[static_cast<std::size_t>(2 * i + j)] = b;
    }
  }
  const ComplexMatrix rho_a = single[0] + single[3];
  const ComplexMatrix rest = kron_power(rho_a, n - 1);
  ReducedResource out;
  out.n = n;
  for (std::size_t k = 0; k < 4; ++k) out.blocks[k] = kron(rest, single[k]);
  return out;
}

SpinCoefficients::SpinCoefficients(std::shared_ptr<const SpinBasis> basis,
                                   std::array<ComplexMatrix, 4> tables)
    : basis_(std::move(basis)), tables_(std::move(tables)) {
  if (!basis_) throw std::invalid_argument("SpinCoefficients: null basis");
  const std::int64_t dim = dim_of(basis_->n());
  for (const auto& t : tables_) {
    if (t.rows() != dim || t.cols() != dim) {
      throw std::invalid_argument("SpinCoefficients: table dimension mismatch");
    }
  }
}

Complex SpinCoefficients::f(BlockTag t, const SpinLabel& x, const SpinLabel& y) const {
  const auto ix = basis_->index_of(x);
  if (!ix) return {0.0, 0.0};
  const auto iy = basis_->index_of(y);
  if (!iy) return {0.0, 0.0};
  return table(t)(*ix, *iy);
}

ReducedResource SpinCoefficients::to_blocks() const {
  const ComplexMatrix u = basis_->unitary();
  ReducedResource out;
  out.n = basis_->n();
  for (std::size_t k = 0; k < 4; ++k) out.blocks[k] = u * tables_[k] * u.adjoint();
  return out;
}

SpinCoefficients to_spin_coefficients(const ReducedResource& reduced,
                                      std::shared_ptr<const SpinBasis> basis) {
  if (!basis || basis->n() != reduced.n) {
    throw std::invalid_argument("to_spin_coefficients: basis size does not match resource");
  }
  const ComplexMatrix u = basis->unitary();
  std::array<ComplexMatrix, 4> tables;
  for (std::size_t k = 0; k < 4; ++k) tables[k] = u.adjoint() * reduced.blocks[k] * u;
  return SpinCoefficients(std::move(basis), std::move(tables));
}

SpinCoefficients to_spin_coefficients(const ReducedResource& reduced) {
  return to_spin_coefficients(reduced, cached_spin_basis(reduced.n));
}

Signs parse_signs(std::string_view text) {
  if (text.size() != 4) throw std::invalid_argument("parse_signs: need four signs");
  Signs s{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (text[k] == '+') {
      s[k] = 1;
    } else if (text[k] == '-') {
      s[k] = -1;
    } else {
      throw std::invalid_argument("parse_signs: expected '+' or '-'");
    }
  }
  return s;
}

Complex g_sum(const SpinCoefficients& coeffs, BlockTag a, SpinKind left, SpinKind right,
              const Signs& signs, HalfInt s, HalfInt m) {
  if (s.twice < 0) return {0.0, 0.0};
  const int count = static_cast<int>(degeneracy(coeffs.n() - 1, s));
  const HalfInt j1 = HalfInt::from_twice(s.twice + signs[0]);
  const HalfInt m1 = HalfInt::from_twice(m.twice + signs[1]);
  const HalfInt j2 = HalfInt::from_twice(s.twice + signs[2]);
  const HalfInt m2 = HalfInt::from_twice(m.twice + signs[3]);
  Complex acc{0.0, 0.0};
  for (int alpha = 1; alpha <= count; ++alpha) {
    acc += coeffs.f(a, SpinLabel{j1, m1, alpha, left}, SpinLabel{j2, m2, alpha, right});
  }
  return acc;
}

Complex g_boundary(const SpinCoefficients& coeffs, BlockTag a, const Signs& signs, HalfInt m) {
  const HalfInt j = HalfInt::from_twice(coeffs.n());
  const HalfInt m1 = HalfInt::from_twice(m.twice + signs[1]);
  const HalfInt m2 = HalfInt::from_twice(m.twice + signs[3]);
  return coeffs.f(a, SpinLabel{j, m1, 1, SpinKind::kTypeII}, SpinLabel{j, m2, 1, SpinKind::kTypeII});
}

}  // namespace pbtsim
