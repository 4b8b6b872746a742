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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pbtsim/channels.hpp"
#include "pbtsim/pbt_choi.hpp"
#include "test_support.hpp"

namespace pbtsim {
namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

TEST(QrCoeffs, Domain) {
  EXPECT_NO_THROW(qr_coeffs(h(1), h(1), 2));
  EXPECT_THROW(qr_coeffs(h(3), h(1), 2), std::domain_error);
  EXPECT_THROW(qr_coeffs(h(1), h(3), 4), std::domain_error);
  EXPECT_THROW(qr_coeffs(h(2), h(1), 5), std::domain_error);
}

TEST(QrCoeffs, ValuesAtTwoPorts) {
  // s = m = 1/2, n = 2: q- = 0, q+ = sqrt(2 / 4), r- = sqrt(2 / 12), r+ = sqrt(4 / 12).
  const QRCoeffs q = qr_coeffs(h(1), h(1), 2);
  EXPECT_DOUBLE_EQ(q.q_minus, 0.0);
  EXPECT_NEAR(q.q_plus, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(q.r_minus, std::sqrt(1.0 / 6.0), 1e-15);
  EXPECT_NEAR(q.r_plus, std::sqrt(1.0 / 3.0), 1e-15);
}

TEST(AssembleChoi, BellTwoPortsC11) {
  const ChoiMatrix c = pbt_choi(make_family(BellFamily{}, 2));
  EXPECT_NEAR(c(0, 0).real(), (6.0 + std::sqrt(3.0)) / 24.0, 1e-14);
}

TEST(AssembleChoi, BellIsDepolarising) {
  for (int n = 2; n <= 8; ++n) {
    const ChoiMatrix c = pbt_choi(make_family(BellFamily{}, n));
    EXPECT_LT(max_abs_diff(c.matrix(), depolarising_choi(xi(n)).matrix()), 1e-10) << n;
  }
}

TEST(AssembleChoi, AdFamilyMatchesClosedForm) {
  for (int n = 2; n <= 6; ++n) {
    for (double p1 : {0.0, 0.2, 0.55, 0.9, 1.0}) {
      const ChoiMatrix c = pbt_choi(make_family(AdChoiFamily{p1}, n));
      EXPECT_LT(max_abs_diff(c.matrix(), pbt_ad_closed_form(n, p1).matrix()), 1e-10)
          << n << " " << p1;
    }
  }
}

TEST(AssembleChoi, FullDampingLimit) {
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(2, 2) = 0.5;
  for (int n = 2; n <= 5; ++n) {
    EXPECT_LT(max_abs_diff(pbt_choi(make_family(AdChoiFamily{1.0}, n)).matrix(), expected), 1e-12);
  }
}

TEST(AssembleChoi, OutputIsValidChoi) {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const ChoiMatrix c = pbt_choi(reduce(testing::random_symmetric_resource(n, rng)));
      EXPECT_NO_THROW(c.validate());
    }
  }
}

TEST(AssembleChoi, VanishingCrossBlockKillsOffDiagonals) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    ReducedResource r = reduce(testing::random_symmetric_resource(n, rng));
    r.block(BlockTag::k12).setZero();
    r.block(BlockTag::k21).setZero();
    const ChoiMatrix c = pbt_choi(r);
    for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {1, 2}, {2, 3}}) {
      EXPECT_LT(std::abs(c(i, j)), 1e-14);
    }
  }
}

TEST(AssembleChoi, RejectsSinglePort) {
  EXPECT_THROW(pbt_choi(make_family(BellFamily{}, 1)), std::domain_error);
}

TEST(TwoPortChoi, BellEntries) {
  const ChoiMatrix c = two_port_choi(make_family(BellFamily{}, 2));
  const double k = 1.0 / (8.0 * std::sqrt(3.0));
  EXPECT_NEAR(c(0, 0).real(), 0.25 + k, 1e-15);
  EXPECT_NEAR(c(2, 2).real(), 0.25 - k, 1e-15);
  EXPECT_NEAR(c(2, 2).real(), (6.0 - std::sqrt(3.0)) / 24.0, 1e-15);
}

TEST(TwoPortChoi, AgreesWithGeneralAssembly) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const ReducedResource r = reduce(testing::random_symmetric_resource(2, rng));
    EXPECT_LT(max_abs_diff(two_port_choi(r).matrix(), pbt_choi(r).matrix()), 1e-13);
  }
  EXPECT_THROW(two_port_choi(make_family(BellFamily{}, 3)), std::invalid_argument);
}

TEST(ChoiMatrix, ValidationFlagsViolations) {
  EXPECT_THROW(ChoiMatrix(ComplexMatrix::Identity(3, 3)), std::invalid_argument);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;  // not trace preserving
  EXPECT_THROW(ChoiMatrix(m).validate(), std::domain_error);
  ComplexMatrix neg = depolarising_choi(0.0).matrix();
  neg(0, 0) -= 0.1;
  neg(1, 1) += 0.1;
  EXPECT_THROW(ChoiMatrix(neg).validate(), std::domain_error);
  EXPECT_NO_THROW(identity_choi().validate());
}

}  // namespace
}  // namespace pbtsim
