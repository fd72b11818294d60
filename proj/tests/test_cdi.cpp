#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mhc/cdi.hpp"
#include "oracles.hpp"

using namespace mhc;

namespace {
using Vec = std::vector<double>;
}

TEST(CosineDistance, ReferenceValues) {
  EXPECT_DOUBLE_EQ(cosine_distance(Vec{1, 0}, Vec{0, 1}), 1.0);
  EXPECT_NEAR(cosine_distance(Vec{3, 4}, Vec{3, 4}), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(cosine_distance(Vec{1, 0}, Vec{-1, 0}), 2.0);
  // 1 - 1/sqrt(2), evaluated independently
  EXPECT_NEAR(cosine_distance(Vec{1, 1}, Vec{1, 0}), 0.29289321881345254, 1e-15);
}

TEST(CosineDistance, RejectsZeroNormAndLengthMismatch) {
  EXPECT_THROW(cosine_distance(Vec{0, 0}, Vec{1, 0}), ValidationError);
  EXPECT_THROW(cosine_distance(Vec{1, 0}, Vec{1, 0, 0}), ValidationError);
  EXPECT_THROW(cosine_distance(Vec{}, Vec{}), ValidationError);
}

TEST(ViewDistanceMatrix, IdentityRowsAreOrthogonal) {
  const DistanceMatrix d = view_distance_matrix(Matrix::Identity(2, 2));
  EXPECT_DOUBLE_EQ(d(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(d(1, 0), 1.0);
  EXPECT_TRUE(std::isinf(d(0, 0)) && d(0, 0) > 0);
  EXPECT_TRUE(std::isinf(d(1, 1)));
}

TEST(ViewDistanceMatrix, PositiveMultiplesAreAtZeroDistance) {
  Matrix view(4, 3);
  view << 1, 2, 3, 2, 4, 6, 0.5, 1, 1.5, 10, 20, 30;
  const DistanceMatrix d = view_distance_matrix(view);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (a != b) { EXPECT_NEAR(d(a, b), 0.0, 1e-15); }
    }
  }
}

TEST(ViewDistanceMatrix, MatchesNaiveOracle) {
  std::mt19937_64 rng(5);
  const Matrix view = oracle::random_matrix(rng, 5, 3);
  const auto expected = oracle::integrated_distances({view});
  const DistanceMatrix d = view_distance_matrix(view);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      if (a == b) continue;
      EXPECT_NEAR(d(a, b), expected[a][b], 1e-12);
    }
  }
}

TEST(ViewDistanceMatrix, SymmetricAndInRange) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix view = oracle::random_matrix(rng, 17, 1 + trial % 6);
    const DistanceMatrix d = view_distance_matrix(view);
    for (std::size_t a = 0; a < d.order(); ++a) {
      for (std::size_t b = 0; b < d.order(); ++b) {
        if (a == b) continue;
        EXPECT_EQ(d(a, b), d(b, a));
        EXPECT_GE(d(a, b), 0.0);
        EXPECT_LE(d(a, b), 2.0 + 1e-12);
      }
    }
  }
}

TEST(ViewDistanceMatrix, PerSampleScaleInvariance) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  Matrix view = oracle::random_matrix(rng, 12, 4);
  const DistanceMatrix before = view_distance_matrix(view);
  for (Eigen::Index r = 0; r < view.rows(); ++r) view.row(r) *= scale(rng);
  const DistanceMatrix after = view_distance_matrix(view);
  for (std::size_t a = 0; a < 12; ++a) {
    for (std::size_t b = 0; b < 12; ++b) {
      if (a != b) { EXPECT_NEAR(before(a, b), after(a, b), 1e-12); }
    }
  }
}

TEST(ViewDistanceMatrix, OrthonormalMapsPreserveDistances) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index dim = 2 + trial;
    const Matrix view = oracle::random_matrix(rng, 15, dim);
    const Matrix p = oracle::random_orthonormal(rng, dim);
    const DistanceMatrix a = view_distance_matrix(view);
    const DistanceMatrix b = view_distance_matrix(view * p.transpose());
    for (std::size_t i = 0; i < 15; ++i) {
      for (std::size_t j = 0; j < 15; ++j) {
        if (i != j) { EXPECT_NEAR(a(i, j), b(i, j), 1e-9); }
      }
    }
  }
}

TEST(IntegrateDistances, SingleViewIsIdentity) {
  std::mt19937_64 rng(1);
  const DistanceMatrix d = view_distance_matrix(oracle::random_matrix(rng, 6, 3));
  const std::vector<DistanceMatrix> one{d};
  const DistanceMatrix out = integrate_distances(one);
  EXPECT_TRUE(std::equal(out.values().begin(), out.values().end(), d.values().begin()));
}

TEST(IntegrateDistances, ArithmeticMean) {
  DistanceMatrix a(3);
  DistanceMatrix b(3);
  a.set(0, 1, 0.2);
  b.set(0, 1, 0.4);
  const std::vector<DistanceMatrix> both{a, b};
  const DistanceMatrix out = integrate_distances(both);
  EXPECT_NEAR(out(0, 1), 0.3, 1e-15);
  EXPECT_NEAR(out(1, 0), 0.3, 1e-15);
  EXPECT_TRUE(std::isinf(out(2, 2)));
}

TEST(IntegrateDistances, MeanOfEqualsAndBounds) {
  std::mt19937_64 rng(4);
  const DistanceMatrix d = view_distance_matrix(oracle::random_matrix(rng, 8, 3));
  const std::vector<DistanceMatrix> same{d, d, d};
  const DistanceMatrix out = integrate_distances(same);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      if (a != b) { EXPECT_NEAR(out(a, b), d(a, b), 1e-15); }
    }
  }

  const std::vector<DistanceMatrix> mixed{view_distance_matrix(oracle::random_matrix(rng, 8, 2)),
                                          view_distance_matrix(oracle::random_matrix(rng, 8, 5)),
                                          view_distance_matrix(oracle::random_matrix(rng, 8, 3))};
  const DistanceMatrix mean = integrate_distances(mixed);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      if (a == b) continue;
      const double lo = std::min({mixed[0](a, b), mixed[1](a, b), mixed[2](a, b)});
      const double hi = std::max({mixed[0](a, b), mixed[1](a, b), mixed[2](a, b)});
      EXPECT_GE(mean(a, b), lo - 1e-15);
      EXPECT_LE(mean(a, b), hi + 1e-15);
      EXPECT_EQ(mean(a, b), mean(b, a));
    }
  }
}

TEST(IntegrateDistances, Errors) {
  EXPECT_THROW(integrate_distances(std::vector<DistanceMatrix>{}), ValidationError);
  const std::vector<DistanceMatrix> mismatch{DistanceMatrix(3), DistanceMatrix(4)};
  EXPECT_THROW(integrate_distances(mismatch), ValidationError);
}

TEST(DistanceMatrixText, DiagonalIsInf) {
  const DistanceMatrix d = view_distance_matrix(Matrix::Identity(2, 2));
  std::ostringstream out;
  write_distance_matrix(out, d);
  EXPECT_EQ(out.str(), "inf,1\n1,inf\n");
}
