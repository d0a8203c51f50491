#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qeom/errors.hpp"

namespace qeom {

// One- and two-electron integrals of an active space.  Indices are 0-based
// internally (FCIDUMP files are 1-based); two-body integrals are stored in
// the chemists' (pq|rs) convention of the file, fully completed under the
// 8-fold real-integral permutation symmetry.
struct MolecularIntegrals {
  int n_spatial_orbitals = 0;
  int n_electrons = 0;
  int spin_2s = 0;
  double core_energy = 0.0;
  std::map<std::pair<int, int>, double> one_body;
  std::map<std::array<int, 4>, double> two_body;

  double h1(int p, int q) const {
    auto it = one_body.find({p, q});
    return it == one_body.end() ? 0.0 : it->second;
  }
  double eri(int p, int q, int r, int s) const {
    auto it = two_body.find({p, q, r, s});
    return it == two_body.end() ? 0.0 : it->second;
  }
  int n_qubits() const { return 2 * n_spatial_orbitals; }
};

MolecularIntegrals parse_fcidump(const std::string& text);
MolecularIntegrals load_fcidump(const std::string& path);

// Canonical single-entry-per-symmetry-class serialization; parsing the
// result reproduces the same integral maps.
std::string write_fcidump(const MolecularIntegrals& mol);

}  // namespace qeom
