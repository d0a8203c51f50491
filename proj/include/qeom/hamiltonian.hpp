#pragma once

#include "qeom/fcidump.hpp"
#include "qeom/fermion.hpp"
#include "qeom/pauli.hpp"

namespace qeom {

// Second-quantized molecular Hamiltonian over blocked spin orbitals,
//   H = E_core + sum_pq h_pq a_p+ a_q + 1/2 sum <pq|rs> a_p+ a_q+ a_s a_r,
// where the physicists' <pq|rs> integrals come from the chemists' (pr|qs)
// stored on file, with spin conservation within each pairing.
FermionOperator build_hamiltonian(const MolecularIntegrals& mol);

// Total particle number sum_p a_p+ a_p.
FermionOperator number_operator(int n_modes);

// Convenience: build + Jordan-Wigner on 2*n_spatial qubits.
PauliOperator qubit_hamiltonian(const MolecularIntegrals& mol);

}  // namespace qeom
