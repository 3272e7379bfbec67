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

#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "fmsa/errors.hpp"

namespace fmsa::h2 {

double boys_f0(double t) {
  if (t < 0.0) throw DomainError("boys_f0: negative argument");
  if (t < 1e-12) return 1.0 - t / 3.0;
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(std::sqrt(t));
}

double contracted_self_overlap(const ContractedGaussian& g) {
  double s = 0.0;
  for (std::size_t a = 0; a < g.exponents.size(); ++a) {
    for (std::size_t b = 0; b < g.exponents.size(); ++b) {
      s += g.coefficients[a] * g.coefficients[b] *
           std::pow(std::numbers::pi / (g.exponents[a] + g.exponents[b]), 1.5);
    }
  }
  return s;
}

ContractedGaussian load_basis_file(const std::string& path, const std::string& element) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open basis file: " + path);
  ContractedGaussian g;
  bool in_element = false;
  bool found = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "element") {
      std::string symbol;
      ls >> symbol;
      in_element = (symbol == element);
      found = found || in_element;
      continue;
    }
    if (!in_element) continue;
    const double exponent = std::stod(first);
    double coefficient;
    if (!(ls >> coefficient)) throw ConfigError("basis file: missing coefficient in '" + line + "'");
    g.exponents.push_back(exponent);
    g.coefficients.push_back(coefficient);
  }
  if (!found || g.exponents.empty()) {
    throw ConfigError("basis file " + path + " has no entry for element " + element);
  }
  // Fold in primitive norms, then normalize the contraction itself.
  for (std::size_t a = 0; a < g.exponents.size(); ++a) {
    g.coefficients[a] *= std::pow(2.0 * g.exponents[a] / std::numbers::pi, 0.75);
  }
  const double self = contracted_self_overlap(g);
  for (auto& coefficient : g.coefficients) coefficient /= std::sqrt(self);
  return g;
}

std::string default_basis_file() {
#ifdef FMSA_DEFAULT_BASIS_FILE
  return FMSA_DEFAULT_BASIS_FILE;
#else
  return "sto-3g.basis";
#endif
}

namespace {

// Two-center integrals over contracted s Gaussians at positions 0 and r.
struct AoIntegrals {
  Eigen::Matrix2d overlap, kinetic, nuclear;
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> eri{};
};

AoIntegrals ao_integrals(const ContractedGaussian& g, double r_bohr) {
  const double centers[2] = {0.0, r_bohr};
  const int np = static_cast<int>(g.exponents.size());
  AoIntegrals ao;
  ao.overlap.setZero();
  ao.kinetic.setZero();
  ao.nuclear.setZero();
  for (int A = 0; A < 2; ++A) {
    for (int B = 0; B < 2; ++B) {
      const double rab2 = (centers[A] - centers[B]) * (centers[A] - centers[B]);
      for (int i = 0; i < np; ++i) {
        for (int j = 0; j < np; ++j) {
          const double a = g.exponents[i];
          const double b = g.exponents[j];
          const double cc = g.coefficients[i] * g.coefficients[j];
          const double sum = a + b;
          const double red = a * b / sum;
          const double pre = std::pow(std::numbers::pi / sum, 1.5) * std::exp(-red * rab2);
          ao.overlap(A, B) += cc * pre;
          ao.kinetic(A, B) += cc * red * (3.0 - 2.0 * red * rab2) * pre;
          const double px = (a * centers[A] + b * centers[B]) / sum;
          for (const double cx : centers) {
            ao.nuclear(A, B) += -cc * 2.0 * std::numbers::pi / sum *
                                std::exp(-red * rab2) *
                                boys_f0(sum * (px - cx) * (px - cx));
          }
        }
      }
    }
  }
  for (int A = 0; A < 2; ++A) {
    for (int B = 0; B < 2; ++B) {
      for (int C = 0; C < 2; ++C) {
        for (int D = 0; D < 2; ++D) {
          const double rab2 = (centers[A] - centers[B]) * (centers[A] - centers[B]);
          const double rcd2 = (centers[C] - centers[D]) * (centers[C] - centers[D]);
          double value = 0.0;
          for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
              const double a = g.exponents[i];
              const double b = g.exponents[j];
              const double g1 = a + b;
              const double px = (a * centers[A] + b * centers[B]) / g1;
              const double e1 = std::exp(-a * b / g1 * rab2);
              const double cij = g.coefficients[i] * g.coefficients[j];
              for (int k = 0; k < np; ++k) {
                for (int l = 0; l < np; ++l) {
                  const double c = g.exponents[k];
                  const double d = g.exponents[l];
                  const double g2 = c + d;
                  const double qx = (c * centers[C] + d * centers[D]) / g2;
                  const double e2 = std::exp(-c * d / g2 * rcd2);
                  value += cij * g.coefficients[k] * g.coefficients[l] * 2.0 *
                           std::pow(std::numbers::pi, 2.5) /
                           (g1 * g2 * std::sqrt(g1 + g2)) * e1 * e2 *
                           boys_f0(g1 * g2 / (g1 + g2) * (px - qx) * (px - qx));
                }
              }
            }
          }
          ao.eri[A][B][C][D] = value;
        }
      }
    }
  }
  return ao;
}

}  // namespace

MolecularIntegrals compute_integrals(double bond_length_angstrom,
                                     const ContractedGaussian& basis) {
  if (!(bond_length_angstrom > 0.0)) {
    throw DomainError("compute_integrals: bond length must be positive");
  }
  MolecularIntegrals ints;
  ints.bond_length = bond_length_angstrom;
  ints.r_bohr = bond_length_angstrom * kAngstromToBohr;
  ints.h0 = 1.0 / ints.r_bohr;

  const AoIntegrals ao = ao_integrals(basis, ints.r_bohr);
  ints.s12 = ao.overlap(0, 1);

  // Symmetry-adapted molecular orbitals; columns are sigma_g, sigma_u.
  const double cg = 1.0 / std::sqrt(2.0 * (1.0 + ints.s12));
  const double cu = 1.0 / std::sqrt(2.0 * (1.0 - ints.s12));
  Eigen::Matrix2d mo;
  mo << cg, cu, cg, -cu;

  const Eigen::Matrix2d hcore = ao.kinetic + ao.nuclear;
  ints.h_spatial = mo.transpose() * hcore * mo;

  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          double value = 0.0;
          for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B)
              for (int C = 0; C < 2; ++C)
                for (int D = 0; D < 2; ++D) {
                  value += mo(A, p) * mo(B, q) * mo(C, r) * mo(D, s) * ao.eri[A][B][C][D];
                }
          ints.g_spatial[p][q][r][s] = value;
        }
  return ints;
}

namespace {

std::mutex g_cache_mutex;
std::unordered_map<std::uint64_t, MolecularIntegrals>& integral_cache() {
  static std::unordered_map<std::uint64_t, MolecularIntegrals> cache;
  return cache;
}
std::atomic<long> g_integral_builds{0};

}  // namespace

MolecularIntegrals sto3g_integrals(double bond_length_angstrom) {
  const std::uint64_t key = std::bit_cast<std::uint64_t>(bond_length_angstrom);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto it = integral_cache().find(key);
    if (it != integral_cache().end()) return it->second;
  }
  static const ContractedGaussian basis = load_basis_file(default_basis_file());
  MolecularIntegrals ints = compute_integrals(bond_length_angstrom, basis);
  g_integral_builds.fetch_add(1);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return integral_cache().emplace(key, std::move(ints)).first->second;
}

long integral_builds() { return g_integral_builds.load(); }

namespace {

// Dense annihilation operator for mode p on the 16-dimensional occupation
// basis, with Jordan-Wigner sign (-1)^(number of occupied modes below p).
Eigen::Matrix<double, 16, 16> annihilator(int p) {
  Eigen::Matrix<double, 16, 16> a;
  a.setZero();
  for (int n = 0; n < 16; ++n) {
    if ((n >> p) & 1) {
      const int below = std::popcount(static_cast<unsigned>(n) & ((1u << p) - 1u));
      a(n ^ (1 << p), n) = (below % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return a;
}

}  // namespace

FockHamiltonian build_hamiltonian(const MolecularIntegrals& ints) {
  using Mat16 = Eigen::Matrix<double, 16, 16>;
  std::array<Mat16, 4> a;
  std::array<Mat16, 4> ad;
  for (int p = 0; p < 4; ++p) {
    a[p] = annihilator(p);
    ad[p] = a[p].transpose();
  }
  // Mode p: spatial orbital p/2 (0 = sigma_g, 1 = sigma_u), spin p%2.
  const auto spatial = [](int p) { return p >> 1; };
  const auto spin = [](int p) { return p & 1; };

  Mat16 h = ints.h0 * Mat16::Identity();
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (spin(p) != spin(q)) continue;
      const double hpq = ints.h_spatial(spatial(p), spatial(q));
      if (hpq == 0.0) continue;
      h += hpq * ad[p] * a[q];
    }
  }
  // 0.5 <pq|sr>_phys c+_p c+_q c_r c_s; in chemists' notation
  // <pq|sr>_phys = (ps|qr), nonzero only if spin p = spin s, spin q = spin r.
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
          if (spin(p) != spin(s) || spin(q) != spin(r)) continue;
          const double coeff =
              0.5 * ints.g(spatial(p), spatial(s), spatial(q), spatial(r));
          if (coeff == 0.0) continue;
          h += coeff * ad[p] * ad[q] * a[r] * a[s];
        }
      }
    }
  }
  return FockHamiltonian{h};
}

double expectation(const FockHamiltonian& h, std::span<const double> phi) {
  if (phi.size() != 16) throw DimensionError("expectation: state must have 16 components");
  const Eigen::Map<const Eigen::Matrix<double, 16, 1>> v(phi.data());
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw DomainError("expectation: zero state vector");
  return v.dot(h.matrix * v) / norm2;
}

namespace {

const std::array<int, 6> kTwoElectronStates = {3, 5, 6, 9, 10, 12};
constexpr int kHartreeFockState = 3;  // |1100>: both spins in sigma_g

}  // namespace

double fci_energy(const FockHamiltonian& h) {
  Eigen::Matrix<double, 6, 6> block;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      block(i, j) = h.matrix(kTwoElectronStates[i], kTwoElectronStates[j]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> solver(block);
  return solver.eigenvalues()(0);
}

double hf_energy(const FockHamiltonian& h) {
  return h.matrix(kHartreeFockState, kHartreeFockState);
}

DimensionMask DimensionMask::reduced(int L) {
  DimensionMask mask;
  mask.L = L;
  switch (L) {
    case 2:
      mask.indices = {3, 12};
      break;
    case 6:
      mask.indices.assign(kTwoElectronStates.begin(), kTwoElectronStates.end());
      break;
    case 16:
      mask.indices = {3};
      for (int i = 0; i < 16; ++i) {
        if (i != kHartreeFockState) mask.indices.push_back(i);
      }
      break;
    default:
      throw ConfigError("DimensionMask: L must be 2, 6 or 16");
  }
  return mask;
}

double blackbox_eval(const IntegerPoint& point, const DimensionMask& mask,
                     const FockHamiltonian& h) {
  if (static_cast<int>(point.values.size()) != mask.L) {
    throw DimensionError("blackbox_eval: point dimension does not match mask");
  }
  std::array<double, 16> phi{};
  bool any = false;
  for (int j = 0; j < mask.L; ++j) {
    phi[mask.indices[j]] = static_cast<double>(point.values[j]);
    any = any || point.values[j] != 0;
  }
  if (!any) throw DomainError("blackbox_eval: zero state vector");
  return expectation(h, phi);
}

H2Problem::H2Problem(double bond_length_angstrom, int dimension)
    : H2Problem(sto3g_integrals(bond_length_angstrom), dimension) {}

H2Problem::H2Problem(const MolecularIntegrals& ints, int dimension)
    : hamiltonian_(build_hamiltonian(ints)), mask_(DimensionMask::reduced(dimension)) {
  fci_ = fci_energy(hamiltonian_);
  hf_ = hf_energy(hamiltonian_);
}

bool H2Problem::accepts(const IntegerPoint& point) const {
  for (const long value : point.values) {
    if (value != 0) return true;
  }
  return false;
}

double H2Problem::evaluate(const IntegerPoint& point) const {
  return blackbox_eval(point, mask_, hamiltonian_);
}

}  // namespace fmsa::h2
