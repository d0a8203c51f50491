#include "qeom/fermion.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qeom/errors.hpp"

namespace qeom {

FermionOperator FermionOperator::creation(std::uint32_t mode) {
  FermionOperator op;
  op.add_term(1.0, {{mode, true}});
  return op;
}

FermionOperator FermionOperator::annihilation(std::uint32_t mode) {
  FermionOperator op;
  op.add_term(1.0, {{mode, false}});
  return op;
}

void FermionOperator::add_term(cplx coeff, std::vector<FermionFactor> factors) {
  if (std::abs(coeff) < kCoeffTolerance) return;
  terms_.push_back({coeff, std::move(factors)});
}

void FermionOperator::simplify() {
  std::map<std::vector<FermionFactor>, cplx> merged;
  for (auto& t : terms_) merged[t.factors] += t.coeff;
  terms_.clear();
  for (auto& [factors, coeff] : merged)
    if (std::abs(coeff) >= kCoeffTolerance) terms_.push_back({coeff, factors});
}

std::uint32_t FermionOperator::max_mode() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.factors) m = std::max(m, f.mode);
  return m;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& t : terms_) {
    std::vector<FermionFactor> rev(t.factors.rbegin(), t.factors.rend());
    for (auto& f : rev) f.dagger = !f.dagger;
    out.add_term(std::conj(t.coeff), std::move(rev));
  }
  return out;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

PauliOperator jordan_wigner(const FermionOperator& op, int n_qubits) {
  for (const auto& t : op.terms())
    for (const auto& f : t.factors)
      if (f.mode >= static_cast<std::uint32_t>(n_qubits))
        throw IndexOutOfRange("mode " + std::to_string(f.mode) + " on " +
                              std::to_string(n_qubits) + " qubits");

  PauliOperator out(n_qubits);
  for (const auto& t : op.terms()) {
    PauliOperator acc = PauliOperator::identity(n_qubits, t.coeff);
    for (const auto& f : t.factors) {
      std::uint32_t ztail = (1u << f.mode) - 1u;
      PauliOperator ladder(n_qubits);
      ladder.add_term(PauliString{1u << f.mode, ztail}, 0.5);
      ladder.add_term(PauliString{1u << f.mode, ztail | (1u << f.mode)},
                      f.dagger ? cplx(0.0, -0.5) : cplx(0.0, 0.5));
      acc = multiply(acc, ladder);
    }
    out += acc;
  }
  return out;
}

}  // namespace qeom
