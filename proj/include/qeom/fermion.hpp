#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qeom/pauli.hpp"

namespace qeom {

// Spin orbitals use blocked ordering throughout the project: all alpha
// orbitals first (0..n_spatial-1), then all beta (n_spatial..2*n_spatial-1).
inline int alpha_orbital(int spatial, int /*n_spatial*/) { return spatial; }
inline int beta_orbital(int spatial, int n_spatial) {
  return spatial + n_spatial;
}

struct FermionFactor {
  std::uint32_t mode = 0;
  bool dagger = false;
  bool operator==(const FermionFactor&) const = default;
  auto operator<=>(const FermionFactor&) const = default;
};

struct FermionTerm {
  cplx coeff;
  // operator order: factors[0] is the leftmost factor of the product
  std::vector<FermionFactor> factors;
};

// Sum of products of creation/annihilation operators.  No normal ordering
// is performed; simplification only merges syntactically equal factor
// sequences and drops negligible coefficients.
class FermionOperator {
 public:
  FermionOperator() = default;

  static FermionOperator creation(std::uint32_t mode);
  static FermionOperator annihilation(std::uint32_t mode);

  void add_term(cplx coeff, std::vector<FermionFactor> factors);
  void simplify();

  const std::vector<FermionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::uint32_t max_mode() const;

  FermionOperator adjoint() const;
  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator& operator*=(cplx scalar);

 private:
  std::vector<FermionTerm> terms_;
};

// a_p^dagger -> (prod_{j<p} Z_j)(X_p - iY_p)/2, a_p with +i, extended
// multiplicatively over factor products and simplified.
PauliOperator jordan_wigner(const FermionOperator& op, int n_qubits);

}  // namespace qeom
