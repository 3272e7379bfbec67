// Copyright 2026 The fmsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmsa/h2.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "fmsa/errors.hpp"
#include "fmsa/rng.hpp"

using namespace fmsa;
using namespace fmsa::h2;

TEST_SUITE_BEGIN("h2");

// Frozen values from tests/data/make_h2_reference.py at R = 0.7414 A; that
// script derives them with the closed-form two-determinant CI, independent
// of the Fock-space construction checked here.
namespace frozen {
constexpr double kBond = 0.7414;
constexpr double kH0 = 0.7137540450419448;
constexpr double kS12 = 0.6589571551731087;
constexpr double kHgg = -1.252463605791135;
constexpr double kHuu = -0.4759486817665886;
constexpr double kGgggg = 0.6744887765360807;
constexpr double kGuuuu = 0.6973937772393989;
constexpr double kGgguu = 0.663468105690839;
constexpr double kGgugu = 0.1812888052250482;
constexpr double kEhf = -1.1166843900042442;
constexpr double kEfci = -1.1372701752425927;
constexpr double kBoysAtOne = 0.7468241328124269;
}  // namespace frozen

TEST_CASE("Boys function") {
  CHECK(boys_f0(0.0) == 1.0);
  CHECK(boys_f0(1.0) == doctest::Approx(frozen::kBoysAtOne).epsilon(1e-12));
  CHECK(boys_f0(100.0) ==
        doctest::Approx(0.5 * std::sqrt(std::numbers::pi / 100.0)).epsilon(1e-10));
  CHECK(boys_f0(1e-14) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(boys_f0(-0.5), DomainError);
}

TEST_CASE("basis file loads and normalizes") {
  const ContractedGaussian g = load_basis_file(default_basis_file());
  REQUIRE(g.exponents.size() == 3);
  CHECK(contracted_self_overlap(g) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(load_basis_file("/nonexistent/file.basis"), ConfigError);
  CHECK_THROWS_AS(load_basis_file(default_basis_file(), "He"), ConfigError);
}

TEST_CASE("integrals at the equilibrium geometry match the reference oracle") {
  const MolecularIntegrals ints = sto3g_integrals(frozen::kBond);
  CHECK(ints.h0 == doctest::Approx(frozen::kH0).epsilon(1e-12));
  CHECK(ints.s12 == doctest::Approx(frozen::kS12).epsilon(1e-10));
  CHECK(ints.h_spatial(0, 0) == doctest::Approx(frozen::kHgg).epsilon(1e-8));
  CHECK(ints.h_spatial(1, 1) == doctest::Approx(frozen::kHuu).epsilon(1e-8));
  CHECK(std::abs(ints.h_spatial(0, 1)) < 1e-12);  // symmetry-forbidden
  CHECK(ints.g(0, 0, 0, 0) == doctest::Approx(frozen::kGgggg).epsilon(1e-8));
  CHECK(ints.g(1, 1, 1, 1) == doctest::Approx(frozen::kGuuuu).epsilon(1e-8));
  CHECK(ints.g(0, 0, 1, 1) == doctest::Approx(frozen::kGgguu).epsilon(1e-8));
  CHECK(ints.g(0, 1, 0, 1) == doctest::Approx(frozen::kGgugu).epsilon(1e-8));
  CHECK(std::abs(ints.g(0, 0, 0, 1)) < 1e-12);
}

TEST_CASE("two-electron tensor has the full 8-fold permutation symmetry") {
  const MolecularIntegrals ints = sto3g_integrals(1.1);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const double v = ints.g(p, q, r, s);
          CHECK(v == doctest::Approx(ints.g(q, p, r, s)).epsilon(1e-13));
          CHECK(v == doctest::Approx(ints.g(p, q, s, r)).epsilon(1e-13));
          CHECK(v == doctest::Approx(ints.g(r, s, p, q)).epsilon(1e-13));
        }
}

TEST_CASE("overlap decays monotonically with bond length") {
  CHECK(sto3g_integrals(0.01).s12 > 0.999);
  CHECK(sto3g_integrals(8.0).s12 < 1e-4);
  double previous = 1.0;
  for (double r = 0.3; r <= 3.01; r += 0.1) {
    const double s12 = sto3g_integrals(r).s12;
    CHECK(s12 < previous);
    CHECK(s12 > 0.0);
    previous = s12;
  }
}

TEST_CASE("integrals are cached per bond length") {
  const double r = 0.91170001;  // not used anywhere else
  const long before = integral_builds();
  sto3g_integrals(r);
  const long after_first = integral_builds();
  CHECK(after_first == before + 1);
  sto3g_integrals(r);
  sto3g_integrals(r);
  CHECK(integral_builds() == after_first);
}

TEST_CASE("bad geometries are rejected") {
  const ContractedGaussian g = load_basis_file(default_basis_file());
  CHECK_THROWS_AS(compute_integrals(0.0, g), DomainError);
  CHECK_THROWS_AS(compute_integrals(-1.0, g), DomainError);
}

TEST_CASE("Hamiltonian structure") {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(frozen::kBond));

  SUBCASE("vacuum expectation is the nuclear repulsion") {
    CHECK(h.matrix(0, 0) == doctest::Approx(frozen::kH0).epsilon(1e-12));
  }

  SUBCASE("symmetric to tight tolerance") {
    CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("block diagonal in electron number") {
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        if (std::popcount(static_cast<unsigned>(i)) !=
            std::popcount(static_cast<unsigned>(j))) {
          CHECK(h.matrix(i, j) == 0.0);
        }
      }
    }
  }

  SUBCASE("spin sectors do not mix") {
    // S_z of basis state: (n_up - n_down) counted from the mode parity.
    const auto sz2 = [](int state) {
      int up = ((state >> 0) & 1) + ((state >> 2) & 1);
      int down = ((state >> 1) & 1) + ((state >> 3) & 1);
      return up - down;
    };
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        if (sz2(i) != sz2(j)) CHECK(std::abs(h.matrix(i, j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("reference energies at the equilibrium geometry") {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(frozen::kBond));
  CHECK(hf_energy(h) == doctest::Approx(frozen::kEhf).epsilon(1e-9));
  CHECK(fci_energy(h) == doctest::Approx(frozen::kEfci).epsilon(1e-9));

  // Second route to the HF energy, straight from the integrals.
  const MolecularIntegrals ints = sto3g_integrals(frozen::kBond);
  const double direct = 2.0 * ints.h_spatial(0, 0) + ints.g(0, 0, 0, 0) + ints.h0;
  CHECK(hf_energy(h) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("expectation value properties") {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(0.9));

  SUBCASE("vacuum unit vector gives h0") {
    std::array<double, 16> phi{};
    phi[0] = 1.0;
    CHECK(expectation(h, phi) == doctest::Approx(1.0 / (0.9 * kAngstromToBohr)).epsilon(1e-12));
  }

  SUBCASE("scale invariance") {
    Rng rng(61);
    std::array<double, 16> phi{};
    for (auto& x : phi) x = rng.next_gaussian();
    std::array<double, 16> scaled = phi;
    for (auto& x : scaled) x *= 7.0;
    CHECK(expectation(h, phi) == doctest::Approx(expectation(h, scaled)).epsilon(1e-12));
  }

  SUBCASE("eigenvectors give their eigenvalues") {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 16, 16>> solver(h.matrix);
    for (int which : {0, 7, 15}) {
      const Eigen::Matrix<double, 16, 1> v = solver.eigenvectors().col(which);
      std::array<double, 16> phi{};
      for (int i = 0; i < 16; ++i) phi[i] = v(i);
      CHECK(expectation(h, phi) ==
            doctest::Approx(solver.eigenvalues()(which)).epsilon(1e-10));
    }
  }

  SUBCASE("zero vector is rejected") {
    const std::array<double, 16> zero{};
    CHECK_THROWS_AS(expectation(h, zero), DomainError);
  }
}

TEST_CASE("FCI equals the minimum of the Rayleigh quotient over the full space") {
  // Independent route: power iteration on (sigma I - H) drives expectation()
  // to the smallest eigenvalue; no eigensolver involved.
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(frozen::kBond));
  const double sigma = h.matrix.diagonal().maxCoeff() + 2.0;
  Eigen::Matrix<double, 16, 16> shifted =
      sigma * Eigen::Matrix<double, 16, 16>::Identity() - h.matrix;
  Rng rng(62);
  Eigen::Matrix<double, 16, 1> v;
  for (int i = 0; i < 16; ++i) v(i) = rng.next_gaussian();
  for (int iter = 0; iter < 500; ++iter) {
    v = shifted * v;
    v /= v.norm();
  }
  std::array<double, 16> phi{};
  for (int i = 0; i < 16; ++i) phi[i] = v(i);
  CHECK(expectation(h, phi) == doctest::Approx(fci_energy(h)).epsilon(1e-9));
}

TEST_CASE("restricting the mask can only raise the minimum") {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(frozen::kBond));
  const auto block_minimum = [&](const std::vector<int>& idx) {
    Eigen::MatrixXd block(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        block(i, j) = h.matrix(idx[i], idx[j]);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    return solver.eigenvalues()(0);
  };
  const double m2 = block_minimum(DimensionMask::reduced(2).indices);
  const double m6 = block_minimum(DimensionMask::reduced(6).indices);
  const double m16 = block_minimum(DimensionMask::reduced(16).indices);
  CHECK(m2 >= m6 - 1e-12);
  CHECK(m6 >= m16 - 1e-12);
  CHECK(m6 == doctest::Approx(fci_energy(h)).epsilon(1e-12));
  // The ground state lives in the two-determinant subspace, so the L = 2
  // restriction is already exact.
  CHECK(m2 == doctest::Approx(fci_energy(h)).epsilon(1e-12));
}

TEST_CASE("dimension masks") {
  const DimensionMask two = DimensionMask::reduced(2);
  CHECK(two.indices == std::vector<int>{3, 12});
  const DimensionMask six = DimensionMask::reduced(6);
  REQUIRE(six.indices.size() == 6);
  CHECK(six.indices[0] == 3);
  for (const int idx : six.indices) {
    CHECK(std::popcount(static_cast<unsigned>(idx)) == 2);
  }
  const DimensionMask full = DimensionMask::reduced(16);
  REQUIRE(full.indices.size() == 16);
  CHECK(full.indices[0] == 3);
  std::vector<int> sorted = full.indices;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 16; ++i) CHECK(sorted[i] == i);
  CHECK_THROWS_AS(DimensionMask::reduced(5), ConfigError);
}

TEST_CASE("black-box evaluation") {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(frozen::kBond));
  const DimensionMask mask = DimensionMask::reduced(2);

  SUBCASE("the (1, 0) unit point is the Hartree-Fock determinant") {
    CHECK(blackbox_eval(IntegerPoint({1, 0}), mask, h) ==
          doctest::Approx(hf_energy(h)).epsilon(1e-12));
  }

  SUBCASE("sign flips do not change the quotient") {
    Rng rng(63);
    for (int trial = 0; trial < 50; ++trial) {
      const long a = static_cast<long>(rng.next_below(65)) - 32;
      const long b = static_cast<long>(rng.next_below(65)) - 32;
      if (a == 0 && b == 0) continue;
      const double plus = blackbox_eval(IntegerPoint({a, b}), mask, h);
      const double minus = blackbox_eval(IntegerPoint({-a, -b}), mask, h);
      CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
    }
  }

  SUBCASE("zero point is a domain error") {
    CHECK_THROWS_AS(blackbox_eval(IntegerPoint({0, 0}), mask, h), DomainError);
  }

  SUBCASE("every value respects the variational bound") {
    const double fci = fci_energy(h);
    Rng rng(64);
    for (int trial = 0; trial < 200; ++trial) {
      const long a = static_cast<long>(rng.next_below(65)) - 32;
      const long b = static_cast<long>(rng.next_below(65)) - 32;
      if (a == 0 && b == 0) continue;
      CHECK(blackbox_eval(IntegerPoint({a, b}), mask, h) >= fci - 1e-9);
    }
  }
}

TEST_CASE("H2Problem wires the black box into the problem interface") {
  const H2Problem problem(frozen::kBond, 2);
  CHECK(problem.dimension() == 2);
  CHECK_FALSE(problem.accepts(IntegerPoint({0, 0})));
  CHECK(problem.accepts(IntegerPoint({-3, 1})));
  CHECK(problem.evaluate(IntegerPoint({1, 0})) ==
        doctest::Approx(problem.hf()).epsilon(1e-12));
  CHECK(problem.hf() >= problem.fci());

  const H2Problem six(frozen::kBond, 6);
  CHECK(six.dimension() == 6);
  CHECK(six.fci() == doctest::Approx(problem.fci()).epsilon(1e-12));
}

TEST_CASE("energies agree with the reference fixture across the curve") {
  std::ifstream in(std::string(FMSA_TEST_DATA_DIR) + "/h2_reference.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == "bond_length,e_hf,e_fci");
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');
    const double r = std::stod(field);
    std::getline(ls, field, ',');
    const double e_hf = std::stod(field);
    std::getline(ls, field, ',');
    const double e_fci = std::stod(field);

    const FockHamiltonian h = build_hamiltonian(sto3g_integrals(r));
    CHECK(hf_energy(h) == doctest::Approx(e_hf).epsilon(1e-6));
    CHECK(fci_energy(h) == doctest::Approx(e_fci).epsilon(1e-6));
    CHECK(hf_energy(h) >= fci_energy(h));
    ++rows;
  }
  CHECK(rows == 136);
}

TEST_SUITE_END();
