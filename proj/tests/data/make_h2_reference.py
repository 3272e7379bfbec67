#!/usr/bin/env python3
"""Generate h2_reference.csv, the reference fixture for the chemistry tests.

Computes restricted Hartree-Fock and full-CI energies for H2 in the STO-3G
minimal basis, independently of the C++ implementation: the CI here is the
closed-form 2x2 secular problem in the sigma_g^2 / sigma_u^2 determinant
basis, not a Fock-space diagonalization. Run from the repository root:

    python3 tests/data/make_h2_reference.py > tests/data/h2_reference.csv

The frozen integral constants printed with --integrals are pasted into
tests/test_h2.cpp.
"""

import argparse
import math

import numpy as np
from scipy.special import erf

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G hydrogen 1s: (exponent, contraction coefficient), zeta = 1.24 folded in.
STO3G_H = [
    (3.42525091, 0.15432897),
    (0.62391373, 0.53532814),
    (0.16885540, 0.44463454),
]


def boys_f0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * erf(math.sqrt(t))


def prim_norm(alpha):
    return (2.0 * alpha / math.pi) ** 0.75


def contracted_basis():
    """Exponents and coefficients with primitive norms folded in, then the
    contracted function renormalized to unit self-overlap."""
    alphas = np.array([a for a, _ in STO3G_H])
    coefs = np.array([c * prim_norm(a) for a, c in STO3G_H])
    self_ov = 0.0
    for a, ca in zip(alphas, coefs):
        for b, cb in zip(alphas, coefs):
            self_ov += ca * cb * (math.pi / (a + b)) ** 1.5
    coefs /= math.sqrt(self_ov)
    return alphas, coefs


def ao_integrals(r_bohr):
    """Overlap, kinetic, nuclear attraction and ERI over the two 1s AOs."""
    alphas, coefs = contracted_basis()
    n = len(alphas)
    centers = [0.0, r_bohr]
    S = np.zeros((2, 2))
    T = np.zeros((2, 2))
    V = np.zeros((2, 2))
    for A in range(2):
        for B in range(2):
            rab2 = (centers[A] - centers[B]) ** 2
            for i in range(n):
                for j in range(n):
                    a, b = alphas[i], alphas[j]
                    cc = coefs[i] * coefs[j]
                    g = a + b
                    pre = (math.pi / g) ** 1.5 * math.exp(-a * b / g * rab2)
                    S[A, B] += cc * pre
                    T[A, B] += cc * a * b / g * (3.0 - 2.0 * a * b / g * rab2) * pre
                    px = (a * centers[A] + b * centers[B]) / g
                    for C in range(2):
                        rpc2 = (px - centers[C]) ** 2
                        V[A, B] += -cc * 2.0 * math.pi / g \
                            * math.exp(-a * b / g * rab2) * boys_f0(g * rpc2)
    eri = np.zeros((2, 2, 2, 2))
    for A in range(2):
        for B in range(2):
            for C in range(2):
                for D in range(2):
                    rab2 = (centers[A] - centers[B]) ** 2
                    rcd2 = (centers[C] - centers[D]) ** 2
                    val = 0.0
                    for i in range(n):
                        for j in range(n):
                            a, b = alphas[i], alphas[j]
                            g1 = a + b
                            px = (a * centers[A] + b * centers[B]) / g1
                            e1 = math.exp(-a * b / g1 * rab2)
                            for k in range(n):
                                for l in range(n):
                                    c, d = alphas[k], alphas[l]
                                    g2 = c + d
                                    qx = (c * centers[C] + d * centers[D]) / g2
                                    e2 = math.exp(-c * d / g2 * rcd2)
                                    rpq2 = (px - qx) ** 2
                                    val += coefs[i] * coefs[j] * coefs[k] * coefs[l] \
                                        * 2.0 * math.pi ** 2.5 \
                                        / (g1 * g2 * math.sqrt(g1 + g2)) * e1 * e2 \
                                        * boys_f0(g1 * g2 / (g1 + g2) * rpq2)
                    eri[A, B, C, D] = val
    return S, T, V, eri


def mo_integrals(r_angstrom):
    """Spatial integrals in the symmetry-adapted sigma_g / sigma_u basis."""
    r_bohr = r_angstrom * ANGSTROM_TO_BOHR
    S, T, V, eri = ao_integrals(r_bohr)
    s12 = S[0, 1]
    cg = 1.0 / math.sqrt(2.0 * (1.0 + s12))
    cu = 1.0 / math.sqrt(2.0 * (1.0 - s12))
    C = np.array([[cg, cu], [cg, -cu]])  # columns: sigma_g, sigma_u
    hcore = T + V
    h_mo = C.T @ hcore @ C
    g_mo = np.einsum('AP,BQ,CR,DS,ABCD->PQRS', C, C, C, C, eri, optimize=True)
    h0 = 1.0 / r_bohr
    return h0, s12, h_mo, g_mo, S, T, V, eri


def energies(r_angstrom):
    """(E_HF, E_FCI) from the 2x2 singlet CI in the g^2/u^2 basis."""
    h0, _, h, g, *_ = mo_integrals(r_angstrom)
    a = 2.0 * h[0, 0] + g[0, 0, 0, 0]
    b = 2.0 * h[1, 1] + g[1, 1, 1, 1]
    kgu = g[0, 1, 0, 1]
    ci = np.array([[a, kgu], [kgu, b]])
    e_fci = np.linalg.eigvalsh(ci)[0] + h0
    e_hf = a + h0
    return e_hf, e_fci


def discretized_optimum(r_angstrom, lo=-32, hi=31):
    """Minimum Rayleigh quotient over integer amplitude pairs (a, b) != 0."""
    h0, _, h, g, *_ = mo_integrals(r_angstrom)
    H = np.array([
        [2.0 * h[0, 0] + g[0, 0, 0, 0] + h0, g[0, 1, 0, 1]],
        [g[0, 1, 0, 1], 2.0 * h[1, 1] + g[1, 1, 1, 1] + h0],
    ])
    best = math.inf
    arg = None
    for a in range(lo, hi + 1):
        for b in range(lo, hi + 1):
            if a == 0 and b == 0:
                continue
            v = np.array([a, b], dtype=float)
            e = v @ H @ v / (v @ v)
            if e < best:
                best, arg = e, (a, b)
    return best, arg


def print_integrals(r_angstrom):
    h0, s12, h, g, S, T, V, eri = mo_integrals(r_angstrom)
    e_hf, e_fci = energies(r_angstrom)
    e2, arg = discretized_optimum(r_angstrom)
    print(f"R = {r_angstrom} A ({r_angstrom * ANGSTROM_TO_BOHR!r} bohr)")
    print(f"h0   = {h0!r}")
    print(f"s12  = {s12!r}")
    print(f"S    = {S.tolist()!r}")
    print(f"T    = {T.tolist()!r}")
    print(f"V    = {V.tolist()!r}")
    for idx in [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1)]:
        print(f"eri_ao{idx} = {eri[idx]!r}")
    print(f"h_mo = {h.tolist()!r}")
    for idx in [(0, 0, 0, 0), (1, 1, 1, 1), (0, 0, 1, 1), (0, 1, 0, 1), (0, 0, 0, 1), (0, 1, 1, 1)]:
        print(f"g_mo{idx} = {g[idx]!r}")
    print(f"E_HF  = {e_hf!r}")
    print(f"E_FCI = {e_fci!r}")
    print(f"E2*   = {e2!r} at {arg}")
    print(f"F0(1)   = {boys_f0(1.0)!r}")
    print(f"F0(100) = {boys_f0(100.0)!r}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--integrals", action="store_true",
                    help="print frozen integral constants instead of the CSV")
    ap.add_argument("--rmin", type=float, default=0.30)
    ap.add_argument("--rmax", type=float, default=3.00)
    ap.add_argument("--step", type=float, default=0.02)
    args = ap.parse_args()
    if args.integrals:
        print_integrals(0.7414)
        return
    print("bond_length,e_hf,e_fci")
    npts = int(round((args.rmax - args.rmin) / args.step)) + 1
    for i in range(npts):
        r = args.rmin + i * args.step
        e_hf, e_fci = energies(r)
        print(f"{r:.2f},{float(e_hf)!r},{float(e_fci)!r}")


if __name__ == "__main__":
    main()
