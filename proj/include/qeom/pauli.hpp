#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "qeom/errors.hpp"

namespace qeom {

using cplx = std::complex<double>;

// Coefficients below this magnitude are dropped during simplification.
// Far below chemical precision (1.6e-3 Ha), far above double rounding noise.
inline constexpr double kCoeffTolerance = 1e-12;

// N-qubit Pauli string stored as X/Z bit masks (bit q = component on
// qubit q).  Letter encoding per qubit: 00 I, 10 X, 11 Y, 01 Z.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  bool is_identity() const { return x == 0 && z == 0; }
  int letter(int qubit) const {
    int xb = (x >> qubit) & 1u, zb = (z >> qubit) & 1u;
    return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);  // I=0 X=1 Y=2 Z=3
  }
  int weight() const;  // number of non-identity letters

  bool operator==(const PauliString& o) const { return x == o.x && z == o.z; }
  std::string str(int n_qubits) const;
};

// Lexicographic per-qubit letter order (qubit 0 first, I < X < Y < Z) so
// canonical term order is decidable and stable.
struct PauliLexLess {
  bool operator()(const PauliString& a, const PauliString& b) const;
};

// Product of two strings: returns the resulting string and phase i^k.
std::pair<PauliString, cplx> multiply_strings(const PauliString& a,
                                              const PauliString& b);

// Weighted sum of Pauli strings on a fixed qubit register.  Terms are kept
// simplified (canonical order, coefficients above kCoeffTolerance).
class PauliOperator {
 public:
  using TermMap = std::map<PauliString, cplx, PauliLexLess>;

  explicit PauliOperator(int n_qubits = 0) : n_qubits_(n_qubits) {}

  static PauliOperator identity(int n_qubits, cplx coeff = 1.0);
  // letter in {'I','X','Y','Z'}
  static PauliOperator single(int n_qubits, int qubit, char letter,
                              cplx coeff = 1.0);
  static PauliOperator from_term(int n_qubits, const PauliString& s,
                                 cplx coeff);

  int n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PauliString& s, cplx coeff);
  cplx coefficient(const PauliString& s) const;

  PauliOperator adjoint() const;
  // True when every coefficient has |imag| < tol; Pauli strings are
  // individually Hermitian so this decides hermiticity of the sum.
  bool is_hermitian(double tol = 1e-10) const;

  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(cplx scalar);

  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
    a += b;
    return a;
  }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) {
    a -= b;
    return a;
  }
  friend PauliOperator operator*(cplx s, PauliOperator a) {
    a *= s;
    return a;
  }
  bool operator==(const PauliOperator& o) const;

  std::string str() const;

 private:
  int n_qubits_;
  TermMap terms_;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);
// [A,B,C] = ([[A,B],C] + [A,[B,C]]) / 2
PauliOperator double_commutator(const PauliOperator& a,
                                const PauliOperator& b,
                                const PauliOperator& c);

}  // namespace qeom
