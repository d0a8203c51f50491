#include "qeom/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qeom/errors.hpp"

namespace qeom {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|x> = phase(x) |x ^ xmask>, phase(x) = i^{#Y} * (-1)^{popcount(z & x)}
inline cplx term_phase(const PauliString& s, std::uint64_t x) {
  int ny = std::popcount(s.x & s.z);
  int sign = std::popcount(s.z & static_cast<std::uint32_t>(x)) & 1;
  cplx phase = kIPow[ny & 3];
  return sign ? -phase : phase;
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw SizeMismatch("amplitude count " + std::to_string(amps_.size()) +
                       " for " + std::to_string(n_qubits) + " qubits");
}

StateVector StateVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  std::vector<cplx> amps(std::size_t{1} << n_qubits, 0.0);
  amps.at(index) = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  StateVector out = *this;
  double n = norm();
  if (n > 0.0)
    for (auto& a : out.amps_) a /= n;
  return out;
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_)
    throw QubitCountMismatch(std::to_string(n_qubits_) + " vs " +
                             std::to_string(other.n_qubits_));
  cplx s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

StateVector apply(const PauliOperator& op, const StateVector& psi) {
  if (op.n_qubits() != psi.n_qubits())
    throw QubitCountMismatch(std::to_string(op.n_qubits()) + " vs " +
                             std::to_string(psi.n_qubits()));
  const auto& in = psi.amplitudes();
  std::vector<cplx> out(in.size(), 0.0);
  for (const auto& [s, c] : op.terms()) {
    for (std::uint64_t x = 0; x < in.size(); ++x)
      out[x ^ s.x] += c * term_phase(s, x) * in[x];
  }
  return StateVector(psi.n_qubits(), std::move(out));
}

cplx expectation(const PauliOperator& op, const StateVector& psi) {
  if (op.n_qubits() != psi.n_qubits())
    throw QubitCountMismatch(std::to_string(op.n_qubits()) + " vs " +
                             std::to_string(psi.n_qubits()));
  const auto& a = psi.amplitudes();
  cplx total = 0.0;
  for (const auto& [s, c] : op.terms()) {
    cplx acc = 0.0;
    for (std::uint64_t x = 0; x < a.size(); ++x)
      acc += std::conj(a[x ^ s.x]) * term_phase(s, x) * a[x];
    total += c * acc;
  }
  return total;
}

}  // namespace qeom
