#include "qeom/hamiltonian.hpp"

namespace qeom {

FermionOperator build_hamiltonian(const MolecularIntegrals& mol) {
  const int n = mol.n_spatial_orbitals;
  FermionOperator h;
  if (std::abs(mol.core_energy) >= kCoeffTolerance)
    h.add_term(mol.core_energy, {});

  for (const auto& [key, v] : mol.one_body) {
    auto [p, q] = key;
    for (int spin = 0; spin < 2; ++spin) {
      std::uint32_t pp = static_cast<std::uint32_t>(p + spin * n);
      std::uint32_t qq = static_cast<std::uint32_t>(q + spin * n);
      h.add_term(v, {{pp, true}, {qq, false}});
    }
  }

  // chemists' (pq|rs): electron 1 in p,q and electron 2 in r,s;
  // 1/2 sum (pq|rs) a_{p sig}+ a_{r tau}+ a_{s tau} a_{q sig}
  for (const auto& [key, v] : mol.two_body) {
    auto [p, q, r, s] = key;
    for (int sig = 0; sig < 2; ++sig) {
      for (int tau = 0; tau < 2; ++tau) {
        std::uint32_t pp = static_cast<std::uint32_t>(p + sig * n);
        std::uint32_t qq = static_cast<std::uint32_t>(q + sig * n);
        std::uint32_t rr = static_cast<std::uint32_t>(r + tau * n);
        std::uint32_t ss = static_cast<std::uint32_t>(s + tau * n);
        h.add_term(0.5 * v,
                   {{pp, true}, {rr, true}, {ss, false}, {qq, false}});
      }
    }
  }
  h.simplify();
  return h;
}

FermionOperator number_operator(int n_modes) {
  FermionOperator num;
  for (int p = 0; p < n_modes; ++p)
    num.add_term(1.0, {{static_cast<std::uint32_t>(p), true},
                       {static_cast<std::uint32_t>(p), false}});
  return num;
}

PauliOperator qubit_hamiltonian(const MolecularIntegrals& mol) {
  return jordan_wigner(build_hamiltonian(mol), mol.n_qubits());
}

}  // namespace qeom
