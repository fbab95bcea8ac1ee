#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bmfrenet/matrix_repr.hpp"
#include "bmfrenet/tensor.hpp"

using namespace bmfrenet;

namespace {
const MetricTensor g_model = MetricTensor::diagonal(1.0, -1.0, 1.0);
}

TEST_CASE("inner products on the model metric") {
  CHECK(inner(g_model, FrameVector(1, 0, 0), FrameVector(1, 0, 0)) == 1.0);
  CHECK(inner(g_model, FrameVector(0, 1, 0), FrameVector(0, 1, 0)) == -1.0);
  CHECK(inner(g_model, FrameVector(1, 1, 0), FrameVector(1, 1, 0)) == 0.0);
}

TEST_CASE("inner is symmetric and bilinear") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  auto rand_vec = [&] { return FrameVector(dist(gen), dist(gen), dist(gen)); };
  for (int i = 0; i < 200; ++i) {
    const FrameVector u = rand_vec();
    const FrameVector v = rand_vec();
    const FrameVector w = rand_vec();
    const double s = dist(gen);
    CHECK(inner(g_model, u, v) == Catch::Approx(inner(g_model, v, u)).margin(1e-14));
    CHECK(inner(g_model, u + s * w, v) ==
          Catch::Approx(inner(g_model, u, v) + s * inner(g_model, w, v))
              .margin(1e-12));
  }
}

TEST_CASE("metric storage mirrors the lower triangle") {
  Matrix3 lower;
  lower << 2, 99, 99,
           1, 3, 99,
           0, -1, 4;  // upper entries must be ignored
  const MetricTensor m(lower);
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 0) == 1.0);
  CHECK(m(1, 2) == -1.0);
  CHECK(m(2, 1) == -1.0);
  CHECK(m.components() == m.components().transpose().eval());
}

TEST_CASE("degenerate metric is rejected") {
  Matrix3 singular = Matrix3::Zero();
  singular(0, 0) = 1.0;
  singular(1, 1) = 1.0;
  CHECK_THROWS_AS(MetricTensor(singular), NondegeneracyError);
  CHECK_THROWS_AS(MetricTensor::diagonal(1.0, 0.0, 1.0), NondegeneracyError);
}

TEST_CASE("signature counts eigenvalue signs") {
  CHECK(g_model.signature() == std::make_pair(2, 1));
  CHECK(MetricTensor::diagonal(1, 1, 1).signature() == std::make_pair(3, 0));
  CHECK(MetricTensor::diagonal(-2, -1, 1).signature() == std::make_pair(1, 2));
}

TEST_CASE("causal character") {
  CHECK(causal_character(g_model, FrameVector(1, 1, 0)) == CausalCharacter::Null);
  CHECK(causal_character(g_model, FrameVector(0, 0, 1)) ==
        CausalCharacter::Spacelike);
  CHECK(causal_character(g_model, FrameVector(0, 1, 0)) ==
        CausalCharacter::Timelike);
  CHECK(causal_character(g_model, FrameVector(0, 0, 0)) == CausalCharacter::Zero);
  // sub-tolerance components classify as zero
  CHECK(causal_character(g_model, FrameVector(1e-12, 0, 1e-13)) ==
        CausalCharacter::Zero);
}

TEST_CASE("causal character is scale invariant") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  for (int i = 0; i < 200; ++i) {
    const FrameVector v(dist(gen), dist(gen), dist(gen));
    const double lam = (i % 2 == 0 ? 1.0 : -1.0) * scale(gen);
    CHECK(causal_character(g_model, v) == causal_character(g_model, lam * v));
  }
}

TEST_CASE("exp_series on trivial inputs") {
  CHECK(exp_series(Matrix3::Zero()) == Matrix3::Identity());

  // two-step nilpotent: the series terminates at I + A
  Matrix3 nilpotent = Matrix3::Zero();
  nilpotent(0, 2) = 3.0;
  nilpotent(1, 2) = -2.0;
  REQUIRE((nilpotent * nilpotent).cwiseAbs().maxCoeff() == 0.0);
  CHECK((exp_series(nilpotent) - (Matrix3::Identity() + nilpotent))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("exp_series agrees with the closed form") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const FrameVector x(dist(gen), dist(gen), dist(gen));
    const double alpha = dist(gen);
    const Matrix3 a = ad_of(x, alpha);
    worst = std::max(
        worst, (exp_series(a) - exp_closed(x, alpha).matrix()).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("exp_series inverse identity") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    Matrix3 a;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a(r, c) = dist(gen);
    const Matrix3 prod = exp_series(a) * exp_series(-a);
    CHECK((prod - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("exp_series uses scaling for large norms") {
  Matrix3 a = Matrix3::Zero();
  a(0, 1) = 8.0;
  a(1, 0) = -8.0;
  const Matrix3 e = exp_series(a);
  CHECK(e(0, 0) == Catch::Approx(std::cos(8.0)).margin(1e-13));
  CHECK(e(0, 1) == Catch::Approx(std::sin(8.0)).margin(1e-13));
}
