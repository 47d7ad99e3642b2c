#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_utils.hpp"

#include <vector>

using namespace qconc;

namespace {
PureState random_product_state(const SystemDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  Vector product = Vector::Ones(1);
  for (int s = 0; s < dims.parties(); ++s) {
    Vector factor(dims.dim(s));
    for (Index a = 0; a < factor.size(); ++a) factor(a) = rng.complex_gaussian();
    factor /= factor.norm();
    Vector next(product.size() * factor.size());
    for (Index u = 0; u < product.size(); ++u) {
      for (Index v = 0; v < factor.size(); ++v) next(u * factor.size() + v) = product(u) * factor(v);
    }
    product = std::move(next);
  }
  return PureState(std::move(product), dims);
}
}  // namespace

TEST_CASE("purity form on basis and GHZ states") {
  const SystemDims dims = SystemDims::uniform(3, 2);
  Vector basis = Vector::Zero(8);
  basis(0) = 1.0;
  CHECK(pure_concurrence_purity(PureState(basis, dims)).value < 1e-12);

  const PureState ghz = ghz_pair(dims, 0, 1);
  const double c = pure_concurrence_purity(ghz).value;
  CHECK(c == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // Cross-check the marginal purities with the brute-force partial trace.
  const Matrix rho = ghz.amplitudes() * ghz.amplitudes().adjoint();
  double purity_sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Matrix red = testutil::oracle_partial_trace(rho, dims, j);
    purity_sum += (red * red).trace().real();
  }
  CHECK(std::sqrt(6.0 - 2.0 * purity_sum) == doctest::Approx(c).epsilon(1e-12));

  // Same value for the GHZ pair embedded in three qutrits.
  const PureState ghz3 = ghz_pair(SystemDims::uniform(3, 3), 0, 2);
  CHECK(pure_concurrence_purity(ghz3).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("purity form input validation") {
  CHECK_THROWS_AS(pure_concurrence_purity(ghz_pair(SystemDims::uniform(2, 2), 0, 1)),
                  invalid_input);
  CHECK_THROWS_AS(pure_concurrence_purity(ghz_pair(SystemDims::uniform(4, 2), 0, 1)),
                  invalid_input);
  Vector half = Vector::Zero(8);
  half(0) = 0.5;  // norm^2 = 1/4: valid sub-state vector, not normalized
  const PureState sub(half, SystemDims::uniform(3, 2));
  CHECK_FALSE(sub.normalized());
  CHECK_THROWS_AS(pure_concurrence_purity(sub), invalid_input);
}

TEST_CASE("minor form agrees with the purity form on GHZ and vanishes on products") {
  const SystemDims dims = SystemDims::uniform(3, 2);
  const PureState ghz = ghz_pair(dims, 0, 1);
  CHECK(pure_concurrence_minors(ghz).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SystemDims pdims = seed % 2 == 0 ? SystemDims::uniform(3, 3) : SystemDims::uniform(4, 2);
    CHECK(pure_concurrence_minors(random_product_state(pdims, seed)).value < 1e-10);
  }
}

TEST_CASE("minor form is degree-2 homogeneous in the amplitudes") {
  const SystemDims dims = SystemDims::uniform(3, 3);
  const PureState psi = random_pure(dims, 7);
  const double base = minor_concurrence(psi.amplitudes(), dims);

  const Complex scale(0.3, 0.4);  // |scale| = 0.5
  const Vector scaled = scale * psi.amplitudes();
  CHECK(minor_concurrence(scaled, dims) ==
        doctest::Approx(std::norm(scale) * base).epsilon(1e-14));

  // Doubling an amplitude vector quadruples the value.
  const Vector doubled = 2.0 * psi.amplitudes();
  CHECK(minor_concurrence(doubled, dims) == doctest::Approx(4.0 * base).epsilon(1e-14));
}

TEST_CASE("the two forms agree on random tripartite states") {
  for (int N : {2, 3, 4}) {
    const SystemDims dims = SystemDims::uniform(3, N);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const PureState psi = random_pure(dims, derive_seed(1, static_cast<std::uint64_t>(N), seed));
      const double a = pure_concurrence_purity(psi).value;
      const double b = pure_concurrence_minors(psi).value;
      CHECK(std::abs(a - b) <= 1e-9);
      CHECK(a >= 0.0);
      CHECK(a <= std::sqrt(6.0) + 1e-12);
    }
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  const SystemDims dims = SystemDims::uniform(3, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState psi = random_pure(dims, seed);
    Rng rng(derive_seed(2, 0, seed));
    Vector rotated = psi.amplitudes();
    for (int slot = 0; slot < 3; ++slot) {
      rotated = testutil::apply_local_unitary(rotated, dims, slot, random_unitary(3, rng));
    }
    const PureState rotated_state(rotated, dims);
    CHECK(std::abs(pure_concurrence_purity(psi).value -
                   pure_concurrence_purity(rotated_state).value) <= 1e-9);
    CHECK(std::abs(pure_concurrence_minors(psi).value -
                   pure_concurrence_minors(rotated_state).value) <= 1e-9);
  }
}

TEST_CASE("optional dimension prefactor") {
  CHECK(n_dependent_prefactor(2) == doctest::Approx(std::sqrt(2.0 / 6.0)).epsilon(1e-15));
  const PureState ghz = ghz_pair(SystemDims::uniform(3, 2), 0, 1);
  CHECK(pure_concurrence_purity(ghz, true).value ==
        doctest::Approx(std::sqrt(3.0) * std::sqrt(1.0 / 3.0)).epsilon(1e-12));
  CHECK(pure_concurrence_minors(ghz, true).value ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("convex roof estimate is exact on pure states") {
  const SystemDims dims = SystemDims::uniform(3, 3);
  const PureState psi = random_pure(dims, 13);
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const double expect = pure_concurrence_minors(psi).value;
  CHECK(convex_roof_upper_estimate(rho, 1, 5) == doctest::Approx(expect).epsilon(1e-10));
  CHECK(convex_roof_upper_estimate(rho, 5, 5) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("convex roof estimate is non-increasing in the trial count") {
  const DensityMatrix rho = testutil::random_mixture(SystemDims::uniform(3, 2), 3, 17);
  double previous = convex_roof_upper_estimate(rho, 1, 99);
  for (int trials = 2; trials <= 24; trials += 2) {
    const double current = convex_roof_upper_estimate(rho, trials, 99);
    CHECK(current <= previous + 1e-15);
    previous = current;
  }
  CHECK(previous >= 0.0);
}

TEST_CASE("convex roof estimate shrinks on separable states") {
  const SystemDims dims = SystemDims::uniform(3, 2);
  const DensityMatrix rho = random_separable(dims, 4, 23);
  const double one = convex_roof_upper_estimate(rho, 1, 3);
  const double many = convex_roof_upper_estimate(rho, 200, 3);
  CHECK(many >= 0.0);
  CHECK(many <= one + 1e-12);
  // The lower bound must stay under the estimate (it is 0 here).
  CHECK(three_qubit_bound(rho).value <= many + 1e-8);
}

TEST_CASE("convex roof estimate sandwiches the lower bounds on mixed states") {
  const DensityMatrix a = testutil::random_mixture(SystemDims::uniform(3, 2), 2, 31);
  CHECK(three_qubit_bound(a).value <= convex_roof_upper_estimate(a, 120, 7) + 1e-8);

  const DensityMatrix b = testutil::random_mixture(SystemDims::uniform(3, 3), 2, 37);
  CHECK(hierarchy_bound(b, 2).value <= convex_roof_upper_estimate(b, 60, 7) + 1e-8);

  const DensityMatrix mixed(Matrix::Identity(8, 8) / 8.0, SystemDims::uniform(3, 2));
  CHECK(three_qubit_bound(mixed).value <= convex_roof_upper_estimate(mixed, 40, 7) + 1e-8);
}

TEST_CASE("convex roof estimate rejects a nonpositive trial count") {
  const DensityMatrix rho(Matrix::Identity(8, 8) / 8.0, SystemDims::uniform(3, 2));
  CHECK_THROWS_AS(convex_roof_upper_estimate(rho, 0, 1), invalid_input);
}
