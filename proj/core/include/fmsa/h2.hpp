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

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fmsa/codec.hpp"
#include "fmsa/problem.hpp"

namespace fmsa::h2 {

inline constexpr double kAngstromToBohr = 1.8897259886;

/// Boys function F0: 0.5 sqrt(pi/t) erf(sqrt(t)) for t > 0, continuous at 0.
/// Throws DomainError for t < 0.
double boys_f0(double t);

/// A contracted s-type Gaussian: sum_a coefficients[a] * exp(-exponents[a] r^2),
/// with primitive normalization folded into the coefficients and the
/// contraction rescaled to unit self-overlap.
struct ContractedGaussian {
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

/// <g|g> for a contracted function on a single center.
double contracted_self_overlap(const ContractedGaussian& g);

/// Parses a basis data file: lines of "element <symbol>" followed by
/// (exponent, contraction coefficient) rows. Returns the (normalized)
/// contracted function for the requested element.
ContractedGaussian load_basis_file(const std::string& path,
                                   const std::string& element = "H");

/// Compiled-in path of the STO-3G data file shipped with the library.
std::string default_basis_file();

/// Molecular integrals of H2 in the symmetry-adapted orbital basis
/// sigma_g = (phi_1 + phi_2) / sqrt(2 (1 + s12)),
/// sigma_u = (phi_1 - phi_2) / sqrt(2 (1 - s12)).
/// For minimal-basis H2 these are the restricted Hartree-Fock orbitals by
/// symmetry, so no SCF iteration is involved.
struct MolecularIntegrals {
  double bond_length = 0.0;  // Angstrom
  double r_bohr = 0.0;
  double h0 = 0.0;   // nuclear repulsion, 1 / r_bohr
  double s12 = 0.0;  // atomic-orbital overlap
  Eigen::Matrix2d h_spatial;                     // one-electron, MO basis
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>
      g_spatial{};  // two-electron (pq|rs), chemists' convention, MO basis

  double g(int p, int q, int r, int s) const { return g_spatial[p][q][r][s]; }
};

/// Integrals for an explicit basis; no caching.
MolecularIntegrals compute_integrals(double bond_length_angstrom,
                                     const ContractedGaussian& basis);

/// Integrals with the default basis, cached per bond length so repeated
/// black-box invocations at the same geometry reuse them. Thread safe.
MolecularIntegrals sto3g_integrals(double bond_length_angstrom);

/// Number of full integral computations performed by sto3g_integrals since
/// process start (cache instrumentation).
long integral_builds();

/// The Hamiltonian on the 16-dimensional Fock space of 4 spin-orbitals
/// (sigma_g up, sigma_g down, sigma_u up, sigma_u down; mode p contributes
/// 2^p to the occupation-basis index).
struct FockHamiltonian {
  Eigen::Matrix<double, 16, 16> matrix;
};

/// Assembles h0 + sum h_pq c+_p c_q + sum h_pqrs c+_p c+_q c_r c_s with
/// Jordan-Wigner fermionic signs; h_pqrs = 0.5 <pq|sr> in physicists'
/// notation, which matches that operator ordering.
FockHamiltonian build_hamiltonian(const MolecularIntegrals& ints);

/// Rayleigh quotient <phi|H|phi> / <phi|phi>. Throws DomainError on the
/// zero vector.
double expectation(const FockHamiltonian& h, std::span<const double> phi);

/// Smallest eigenvalue of the two-electron block (exact ground state in
/// this basis).
double fci_energy(const FockHamiltonian& h);

/// Energy of the |1100> determinant (both electrons in sigma_g), i.e. the
/// restricted Hartree-Fock energy.
double hf_energy(const FockHamiltonian& h);

/// Which components of the 16-dimensional state vector the optimizer may
/// vary. indices[0] is always the Hartree-Fock determinant, so the first
/// canonical initial sample is the HF state.
///   L = 2:  {|1100>, |0011>}, the two determinants spanning the ground state
///   L = 6:  all two-electron determinants
///   L = 16: the full space
struct DimensionMask {
  int L = 0;
  std::vector<int> indices;

  static DimensionMask reduced(int L);
};

/// Scatters the integer point into a 16-vector on mask.indices (zeros
/// elsewhere) and returns its expectation value. Throws DomainError for the
/// all-zero point.
double blackbox_eval(const IntegerPoint& point, const DimensionMask& mask,
                     const FockHamiltonian& h);

/// The benchmark black box at a fixed geometry and search-space dimension.
class H2Problem final : public BlackBoxProblem {
 public:
  H2Problem(double bond_length_angstrom, int dimension);
  H2Problem(const MolecularIntegrals& ints, int dimension);

  int dimension() const override { return mask_.L; }
  bool accepts(const IntegerPoint& point) const override;
  double evaluate(const IntegerPoint& point) const override;

  const FockHamiltonian& hamiltonian() const { return hamiltonian_; }
  const DimensionMask& mask() const { return mask_; }
  double fci() const { return fci_; }
  double hf() const { return hf_; }

 private:
  FockHamiltonian hamiltonian_;
  DimensionMask mask_;
  double fci_ = 0.0;
  double hf_ = 0.0;
};

}  // namespace fmsa::h2
