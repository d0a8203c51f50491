#!/usr/bin/env python3
"""Generate the FCIDUMP fixtures and their reference-energy metadata.

Three active-space Hamiltonians are produced:

  h2_sto3g.fcidump        H2 / STO-3G at R = 0.735 A (ab initio, analytic
                          s-Gaussian integrals, RHF orbitals)
  ethylene_cas22.fcidump  2-site PPP pi model of ethylene in the Hueckel
                          MO basis (CAS(2,2) scale)
  butadiene_cas44.fcidump 4-site PPP pi model of trans-butadiene in the
                          Hueckel MO basis (CAS(4,4) scale)

Each .fcidump gets a .json sidecar with the exact sector spectrum computed
by an independent occupation-number-basis FCI (no Jordan-Wigner involved),
so downstream code can be checked against it.

Only numpy is required.  Run from anywhere:  python3 tools/make_fixtures.py
"""

import json
import math
import os

import numpy as np

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903
HARTREE_PER_EV = 1.0 / 27.211386245988

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


# ----------------------------------------------------------------------------
# Analytic integrals over contracted s-type Gaussians (enough for H2/STO-3G)
# ----------------------------------------------------------------------------

STO3G_H_EXP = np.array([3.42525091, 0.62391373, 0.16885540])
STO3G_H_COEF = np.array([0.15432897, 0.53532814, 0.44463454])


def boys0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * math.erf(math.sqrt(t))


class SOrbital:
    def __init__(self, center, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.exps = exps
        # contraction coefficients refer to unit-normalized primitives
        self.coefs = coefs * (2.0 * exps / math.pi) ** 0.75


def s_overlap(a, b):
    s = 0.0
    for ai, ci in zip(a.exps, a.coefs):
        for bj, cj in zip(b.exps, b.coefs):
            p = ai + bj
            ab2 = np.dot(a.center - b.center, a.center - b.center)
            s += ci * cj * (math.pi / p) ** 1.5 * math.exp(-ai * bj / p * ab2)
    return s


def s_kinetic(a, b):
    t = 0.0
    for ai, ci in zip(a.exps, a.coefs):
        for bj, cj in zip(b.exps, b.coefs):
            p = ai + bj
            mu = ai * bj / p
            ab2 = np.dot(a.center - b.center, a.center - b.center)
            t += ci * cj * mu * (3.0 - 2.0 * mu * ab2) * (math.pi / p) ** 1.5 * math.exp(-mu * ab2)
    return t


def s_nuclear(a, b, charges):
    v = 0.0
    for ai, ci in zip(a.exps, a.coefs):
        for bj, cj in zip(b.exps, b.coefs):
            p = ai + bj
            mu = ai * bj / p
            ab2 = np.dot(a.center - b.center, a.center - b.center)
            pc = (ai * a.center + bj * b.center) / p
            pref = ci * cj * 2.0 * math.pi / p * math.exp(-mu * ab2)
            for z, rc in charges:
                v -= pref * z * boys0(p * np.dot(pc - rc, pc - rc))
    return v


def s_eri(a, b, c, d):
    """Chemists' notation (ab|cd)."""
    val = 0.0
    for ai, ca in zip(a.exps, a.coefs):
        for bj, cb in zip(b.exps, b.coefs):
            p = ai + bj
            rp = (ai * a.center + bj * b.center) / p
            ab2 = np.dot(a.center - b.center, a.center - b.center)
            kab = math.exp(-ai * bj / p * ab2)
            for ck, cc in zip(c.exps, c.coefs):
                for dl, cd_ in zip(d.exps, d.coefs):
                    q = ck + dl
                    rq = (ck * c.center + dl * d.center) / q
                    cd2 = np.dot(c.center - d.center, c.center - d.center)
                    kcd = math.exp(-ck * dl / q * cd2)
                    rho = p * q / (p + q)
                    t = rho * np.dot(rp - rq, rp - rq)
                    val += (ca * cb * cc * cd_ * kab * kcd *
                            2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q)) * boys0(t))
    return val


def h2_integrals(r_angstrom):
    r = r_angstrom * BOHR_PER_ANGSTROM
    centers = [np.array([0.0, 0.0, 0.0]), np.array([0.0, 0.0, r])]
    orbs = [SOrbital(c, STO3G_H_EXP, STO3G_H_COEF) for c in centers]
    charges = [(1.0, c) for c in centers]

    n = 2
    s = np.array([[s_overlap(orbs[i], orbs[j]) for j in range(n)] for i in range(n)])
    hcore = np.array([[s_kinetic(orbs[i], orbs[j]) + s_nuclear(orbs[i], orbs[j], charges)
                       for j in range(n)] for i in range(n)])
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    eri[i, j, k, l] = s_eri(orbs[i], orbs[j], orbs[k], orbs[l])

    # Symmetric diatomic: the RHF MOs are the gerade/ungerade combinations.
    cg = 1.0 / math.sqrt(2.0 * (1.0 + s[0, 1]))
    cu = 1.0 / math.sqrt(2.0 * (1.0 - s[0, 1]))
    mo = np.array([[cg, cu], [cg, -cu]])

    h_mo = mo.T @ hcore @ mo
    eri_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", mo, mo, mo, mo, eri, optimize=True)
    e_nuc = 1.0 / r
    return h_mo, eri_mo, e_nuc


# ----------------------------------------------------------------------------
# PPP pi-electron models (Ohno potential) in the Hueckel MO basis
# ----------------------------------------------------------------------------

def ohno_v(r_angstrom, u_ev):
    e2 = 14.397  # eV * Angstrom
    return e2 / math.sqrt((e2 / u_ev) ** 2 + r_angstrom ** 2)


def ppp_integrals(coords, bonds, u_ev=11.26, t_ev=-2.4):
    """Site-basis PPP Hamiltonian, rotated into the Hueckel MO basis.

    H = sum_t t c+c + U sum n_up n_dn + sum_{i<j} V_ij (n_i-1)(n_j-1)
    expressed through one-/two-electron integrals in Hartree.
    """
    n = len(coords)
    coords = np.asarray(coords)
    tmat = np.zeros((n, n))
    for i, j in bonds:
        tmat[i, j] = tmat[j, i] = t_ev
    vmat = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                vmat[i, j] = u_ev
            else:
                vmat[i, j] = ohno_v(float(np.linalg.norm(coords[i] - coords[j])), u_ev)

    h_site = tmat.copy()
    eri_site = np.zeros((n, n, n, n))
    for i in range(n):
        eri_site[i, i, i, i] = vmat[i, i]
        for j in range(n):
            if i != j:
                eri_site[i, i, j, j] = vmat[i, j]
                # (n_i - 1)(n_j - 1) charge compensation -> one-body and scalar
    core = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            h_site[i, i] -= vmat[i, j]
            h_site[j, j] -= vmat[i, j]
            core += vmat[i, j]

    evals, mo = np.linalg.eigh(tmat)
    order = np.argsort(evals)
    mo = mo[:, order]
    h_mo = mo.T @ h_site @ mo
    eri_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", mo, mo, mo, mo, eri_site, optimize=True)

    ha = HARTREE_PER_EV
    return h_mo * ha, eri_mo * ha, core * ha


def ethylene_geometry():
    r = 1.339
    coords = [[0.0, 0.0, 0.0], [r, 0.0, 0.0]]
    return coords, [(0, 1)]


def butadiene_geometry():
    # trans chain, standard bond alternation, 120 deg angles
    r1, r2 = 1.343, 1.467
    ang = math.radians(120.0)
    p0 = np.array([0.0, 0.0])
    p1 = p0 + [r1, 0.0]
    p2 = p1 + [r2 * math.cos(math.pi - ang), r2 * math.sin(math.pi - ang)]
    p3 = p2 + [r1 * math.cos(0.0), r1 * math.sin(0.0)]
    coords = [[p[0], p[1], 0.0] for p in (p0, p1, p2, p3)]
    return coords, [(0, 1), (1, 2), (2, 3)]


# ----------------------------------------------------------------------------
# Independent FCI in the occupation-number basis (explicit fermionic signs)
# ----------------------------------------------------------------------------

def annihilation_matrices(n_modes):
    dim = 1 << n_modes
    mats = []
    for p in range(n_modes):
        a = np.zeros((dim, dim))
        for x in range(dim):
            if (x >> p) & 1:
                sign = (-1) ** bin(x & ((1 << p) - 1)).count("1")
                a[x ^ (1 << p), x] = sign
        mats.append(a)
    return mats


def dense_hamiltonian(h_mo, eri_mo, core):
    """Spin orbitals blocked: alpha 0..n-1, beta n..2n-1."""
    n = h_mo.shape[0]
    nm = 2 * n
    a = annihilation_matrices(nm)
    ad = [m.T for m in a]
    dim = 1 << nm
    ham = core * np.eye(dim)
    for p in range(n):
        for q in range(n):
            if abs(h_mo[p, q]) < 1e-14:
                continue
            for s in (0, 1):
                ham += h_mo[p, q] * ad[p + s * n] @ a[q + s * n]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s_ in range(n):
                    v = eri_mo[p, q, r, s_]
                    if abs(v) < 1e-14:
                        continue
                    for sa in (0, 1):
                        for sb in (0, 1):
                            P, Q = p + sa * n, q + sa * n
                            R, S = r + sb * n, s_ + sb * n
                            ham += 0.5 * v * ad[P] @ ad[R] @ a[S] @ a[Q]
    return ham


def sector_spectrum(ham, n_modes, n_elec, two_sz):
    dim = ham.shape[0]
    n_spatial = n_modes // 2
    idx = []
    for x in range(dim):
        na = bin(x & ((1 << n_spatial) - 1)).count("1")
        nb = bin(x >> n_spatial).count("1")
        if na + nb == n_elec and na - nb == two_sz:
            idx.append(x)
    sub = ham[np.ix_(idx, idx)]
    evals = np.linalg.eigvalsh(sub)
    return sorted(evals.tolist())


def total_sector_spectrum(ham, n_modes, n_elec):
    dim = ham.shape[0]
    idx = [x for x in range(dim) if bin(x).count("1") == n_elec]
    sub = ham[np.ix_(idx, idx)]
    return sorted(np.linalg.eigvalsh(sub).tolist())


# ----------------------------------------------------------------------------
# FCIDUMP output
# ----------------------------------------------------------------------------

def write_fcidump(path, h_mo, eri_mo, core, n_elec, ms2=0):
    n = h_mo.shape[0]
    lines = []
    lines.append(f"&FCI NORB={n},NELEC={n_elec},MS2={ms2},")
    lines.append(" ORBSYM=" + "1," * n)
    lines.append(" ISYM=1,")
    lines.append("&END")

    def emit(v, i, j, k, l):
        lines.append(f" {v: .16e} {i:3d} {j:3d} {k:3d} {l:3d}")

    seen = set()
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    v = eri_mo[p, q, r, s]
                    if abs(v) < 1e-12:
                        continue
                    perms = {(p, q, r, s), (q, p, r, s), (p, q, s, r), (q, p, s, r),
                             (r, s, p, q), (s, r, p, q), (r, s, q, p), (s, r, q, p)}
                    key = min(perms)
                    if key in seen:
                        continue
                    seen.add(key)
                    emit(eri_mo[key], key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1)
    for p in range(n):
        for q in range(p + 1):
            if abs(h_mo[p, q]) > 1e-12:
                emit(h_mo[p, q], p + 1, q + 1, 0, 0)
    emit(core, 0, 0, 0, 0)

    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def build(name, h_mo, eri_mo, core, n_elec, description):
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, name + ".fcidump")
    write_fcidump(path, h_mo, eri_mo, core, n_elec)

    n = h_mo.shape[0]
    ham = dense_hamiltonian(h_mo, eri_mo, core)
    sz0 = sector_spectrum(ham, 2 * n, n_elec, 0)
    full = total_sector_spectrum(ham, 2 * n, n_elec)
    meta = {
        "name": name,
        "description": description,
        "n_spatial_orbitals": n,
        "n_electrons": n_elec,
        "n_qubits": 2 * n,
        "core_energy": core,
        "sector_spectrum_sz0": sz0,
        "sector_spectrum_all_sz": full,
        "ground_state_energy": sz0[0],
    }
    with open(os.path.join(OUT_DIR, name + ".json"), "w") as f:
        json.dump(meta, f, indent=2)
    print(f"{name}: E0 = {sz0[0]:.9f} Ha, sz0 sector dim = {len(sz0)}, "
          f"N sector dim = {len(full)}")
    return meta


def main():
    h_mo, eri_mo, e_nuc = h2_integrals(0.735)
    m = build("h2_sto3g", h_mo, eri_mo, e_nuc, 2,
              "H2, STO-3G, R = 0.735 A, RHF molecular orbitals, "
              "analytic integrals")
    # cross-check against the standard literature value for this geometry
    assert abs(m["ground_state_energy"] - (-1.1373)) < 5e-4, m["ground_state_energy"]

    coords, bonds = ethylene_geometry()
    h_mo, eri_mo, core = ppp_integrals(coords, bonds)
    build("ethylene_cas22", h_mo, eri_mo, core, 2,
          "ethylene pi system, 2-site PPP (Ohno, U=11.26 eV, t=-2.4 eV), "
          "Hueckel MO basis; CAS(2,2)-scale fixture")

    coords, bonds = butadiene_geometry()
    h_mo, eri_mo, core = ppp_integrals(coords, bonds)
    build("butadiene_cas44", h_mo, eri_mo, core, 4,
          "trans-butadiene pi system, 4-site PPP (Ohno, U=11.26 eV, "
          "t=-2.4 eV), Hueckel MO basis; CAS(4,4)-scale fixture")


if __name__ == "__main__":
    main()
