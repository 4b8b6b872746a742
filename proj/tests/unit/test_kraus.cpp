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

#include <algorithm>
#include <cmath>
#include <random>

#include "pbtsim/channels.hpp"
#include "pbtsim/kraus.hpp"
#include "pbtsim/oracle.hpp"
#include "test_support.hpp"

namespace pbtsim {
namespace {

TEST(ChoiToKraus, IdentityChannel) {
  const KrausSet k = choi_to_kraus(identity_choi());
  ASSERT_EQ(k.ops.size(), 1u);
  const Complex phase = k.ops[0](0, 0);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(k.ops[0] / phase, ComplexMatrix::Identity(2, 2)), 1e-14);
}

TEST(ChoiToKraus, DepolarisingGivesWeightedPaulis) {
  const double x = 0.3;
  const KrausSet k = choi_to_kraus(depolarising_choi(x));
  ASSERT_EQ(k.ops.size(), 4u);
  std::vector<double> weights;
  for (const auto& op : k.ops) weights.push_back(std::sqrt(0.5 * (op.adjoint() * op).trace().real()));
  std::sort(weights.begin(), weights.end());
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(weights[i], std::sqrt(x / 4), 1e-13);
  EXPECT_NEAR(weights[3], std::sqrt(1 - 3 * x / 4), 1e-13);
  EXPECT_LT(max_abs_diff(kraus_to_choi(k).matrix(), depolarising_choi(x).matrix()), 1e-14);
}

TEST(ChoiToKraus, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ChoiMatrix c = ChoiMatrix(testing::random_channel_choi(rng, 1 + trial % 4));
    const KrausSet k = choi_to_kraus(c);
    EXPECT_LE(k.ops.size(), 4u);
    EXPECT_LT(max_abs_diff(kraus_to_choi(k).matrix(), c.matrix()), 1e-12);
    EXPECT_LT(max_abs_diff(completeness_operator(k), ComplexMatrix::Identity(2, 2)), 1e-10);
  }
}

TEST(ChoiToKraus, RejectsNonPsd) {
  ComplexMatrix m = depolarising_choi(0.0).matrix();
  m(1, 1) = -0.01;
  m(0, 0) += 0.01;
  EXPECT_THROW(choi_to_kraus(ChoiMatrix(m)), std::domain_error);
}

TEST(ApplyKraus, IdentityAndErrors) {
  std::mt19937_64 rng(1);
  const ComplexMatrix rho = random_density_matrix(4, rng);
  const KrausSet id{4, 4, {ComplexMatrix::Identity(4, 4)}};
  EXPECT_EQ(max_abs_diff(apply_kraus(id, rho), rho), 0.0);
  EXPECT_THROW(apply_kraus(id, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
  const KrausSet bad{4, 2, {ComplexMatrix::Identity(4, 4)}};
  EXPECT_THROW(apply_kraus(bad, rho), std::invalid_argument);
}

TEST(ProtocolKraus, TwoPortLabels) {
  const ProtocolKraus pk = protocol_kraus(2);
  EXPECT_EQ(pk.k1.size(), 2u);
  EXPECT_EQ(pk.k2.size(), 4u);
  for (const auto& k : pk.as_set().ops) {
    EXPECT_EQ(k.rows(), 4);
    EXPECT_EQ(k.cols(), 8);
  }
  ASSERT_EQ(pk.labels.size(), 6u);
  EXPECT_TRUE(pk.labels[0].boundary);
  EXPECT_EQ(pk.labels[0].m.twice, -3);
  EXPECT_EQ(pk.labels[3].m.twice, 3);
  EXPECT_FALSE(pk.labels[4].boundary);
  EXPECT_EQ(pk.labels[4].s.twice, 1);
  EXPECT_EQ(pk.labels[4].m.twice, -1);
  EXPECT_EQ(pk.labels[5].m.twice, 1);
  EXPECT_EQ(pk.unreduced_count(), 12u);
  EXPECT_THROW(protocol_kraus(1), std::domain_error);
}

TEST(ProtocolKraus, Counts) {
  for (int n = 2; n <= 7; ++n) {
    const ProtocolKraus pk = protocol_kraus(n);
    EXPECT_EQ(pk.k2.size(), static_cast<std::size_t>(n + 2));
    EXPECT_EQ(pk.k1.size(), protocol_k1_count(n));
  }
  // The multiplets of n - 1 qubits span 2^{n-1} states.
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(protocol_k1_count(n), dim_of(n - 1)) << n;
}

TEST(ProtocolKraus, ReproducesAssembly) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 5; ++n) {
    const KrausSet set = protocol_kraus(n).as_set();
    std::vector<ReducedResource> cases = {make_family(BellFamily{}, n),
                                          make_family(AdChoiFamily{0.4}, n),
                                          make_family(AlternateFamily{0.8}, n)};
    if (n <= 3) cases.push_back(reduce(testing::random_symmetric_resource(n, rng)));
    for (const auto& r : cases) {
      const ComplexMatrix out = apply_kraus(set, reduced_state(r));
      EXPECT_LT(max_abs_diff(out, pbt_choi(r).matrix()), 1e-10) << n;
      EXPECT_NEAR(out.trace().real(), 1.0, 1e-10);
    }
    EXPECT_LT(max_abs_diff(apply_kraus(set, reduced_state(make_family(BellFamily{}, n))),
                           depolarising_choi(xi(n)).matrix()),
              1e-10);
  }
}

TEST(ProtocolKraus, CompletenessOperator) {
  // Trace preservation is only owed on symmetric inputs; the operator itself
  // is the identity at n = 2 and has unit mean eigenvalue beyond.
  EXPECT_LT(max_abs_diff(completeness_operator(protocol_kraus(2).as_set()),
                         ComplexMatrix::Identity(8, 8)),
            1e-12);
  for (int n = 3; n <= 5; ++n) {
    const ComplexMatrix c = completeness_operator(protocol_kraus(n).as_set());
    EXPECT_LT(hermiticity_error(c), 1e-12);
    EXPECT_NEAR(c.trace().real(), static_cast<double>(dim_of(n + 1)), 1e-9);
    EXPECT_GT(max_abs_diff(c, ComplexMatrix::Identity(c.rows(), c.cols())), 0.1);
  }
}

TEST(SqrtPi1, SquaresToFirstPovmElement) {
  for (int n = 2; n <= 5; ++n) {
    const ComplexMatrix s = sqrt_pi1(n);
    EXPECT_LT(hermiticity_error(s), 1e-13);
    const ComplexMatrix pi1 = s * s;
    const Eigen::VectorXd ev = hermitian_eigenvalues(pi1);
    EXPECT_GE(ev.minCoeff(), -1e-12);
    EXPECT_LE(ev.maxCoeff(), 1.0 + 1e-10);
    if (n <= 4) EXPECT_LT(max_abs_diff(pi1, build_povm(n).pi_1), 1e-10);
  }
}

}  // namespace
}  // namespace pbtsim
