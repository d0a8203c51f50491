#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qeom/pauli.hpp"

namespace qeom {

// Dense N-qubit state.  Basis index bit q is the occupation of qubit
// (spin orbital) q, so |...q1 q0> prints with qubit 0 rightmost.
class StateVector {
 public:
  StateVector() = default;
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  static StateVector zero_state(int n_qubits);  // |0...0>
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  cplx amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm() const;
  StateVector normalized() const;
  cplx inner(const StateVector& other) const;  // <this|other>

 private:
  int n_qubits_ = 0;
  std::vector<cplx> amps_;
};

// op|psi> without normalization.
StateVector apply(const PauliOperator& op, const StateVector& psi);

// <psi|op|psi>
cplx expectation(const PauliOperator& op, const StateVector& psi);

}  // namespace qeom
