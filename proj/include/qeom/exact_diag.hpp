#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qeom/pauli.hpp"
#include "qeom/statevector.hpp"

namespace qeom {

struct SpectrumEntry {
  double energy;
  StateVector state;
};

// Ascending energy-eigenpair list; states pairwise orthonormal.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  double ground_energy() const { return entries.front().energy; }
};

// Dense 2^N x 2^N matrix of a Pauli operator.
Eigen::MatrixXcd dense_matrix(const PauliOperator& op);

// Dense diagonalization keeping eigenvectors whose particle number
// <v|N|v> matches n_electrons within 1e-6 (N = sum_p a_p+ a_p under the
// Jordan-Wigner convention, i.e. the bit-count observable).  When two_sz
// is given, <v|2Sz|v> = n_alpha - n_beta must additionally match within
// the same tolerance (blocked spin ordering).
Spectrum exact_eigenstates(const PauliOperator& h, int n_electrons,
                           std::optional<int> two_sz = std::nullopt);

}  // namespace qeom
