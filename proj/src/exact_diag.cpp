#include "qeom/exact_diag.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "qeom/errors.hpp"

namespace qeom {

namespace {

constexpr double kFilterTolerance = 1e-6;
constexpr double kDegeneracyTolerance = 1e-9;

int bit_count(std::uint64_t x) { return std::popcount(x); }

// descending lexicographic comparison of |amplitude| vectors, tolerance
// 1e-12, used only to order states inside a degenerate group
bool overlap_order(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double da = std::abs(a[i]), db = std::abs(b[i]);
    if (std::abs(da - db) > 1e-12) return da > db;
  }
  return false;
}

// deterministic global phase: largest-magnitude amplitude made real positive
void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index imax = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double m = std::abs(v[i]);
    if (m > best + 1e-12) {
      best = m;
      imax = i;
    }
  }
  if (best > 0.0) v *= std::conj(v[imax]) / std::abs(v[imax]);
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliOperator& op) {
  const std::size_t dim = std::size_t{1} << op.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [s, c] : op.terms()) {
    const int ny = std::popcount(s.x & s.z);
    const cplx base = c * kIPow[ny & 3];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const int sign = std::popcount(s.z & static_cast<std::uint32_t>(col)) & 1;
      m(col ^ s.x, col) += sign ? -base : base;
    }
  }
  return m;
}

Spectrum exact_eigenstates(const PauliOperator& h, int n_electrons,
                           std::optional<int> two_sz) {
  if (!h.is_hermitian(1e-10))
    throw NonHermitianInput("Pauli coefficients carry imaginary parts");
  const int n = h.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const int n_spatial = n / 2;
  const std::uint32_t alpha_mask =
      n_spatial > 0 ? ((1u << n_spatial) - 1u) : 0u;

  Eigen::MatrixXcd hm = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hm);
  if (solver.info() != Eigen::Success)
    throw NonHermitianInput("eigendecomposition failed");

  struct Kept {
    double energy;
    Eigen::VectorXcd vec;
  };
  std::vector<Kept> kept;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    Eigen::VectorXcd v = solver.eigenvectors().col(k);
    double num = 0.0, sz2 = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
      const double p = std::norm(v[x]);
      num += p * bit_count(x);
      sz2 += p * (2 * bit_count(x & alpha_mask) - bit_count(x));
    }
    if (std::abs(num - n_electrons) > kFilterTolerance) continue;
    if (two_sz && std::abs(sz2 - *two_sz) > kFilterTolerance) continue;
    fix_phase(v);
    kept.push_back({solver.eigenvalues()[k], std::move(v)});
  }
  if (kept.empty())
    throw EmptySector("no eigenstate with " + std::to_string(n_electrons) +
                      " electrons");

  std::stable_sort(kept.begin(), kept.end(),
                   [](const Kept& a, const Kept& b) {
                     if (std::abs(a.energy - b.energy) < kDegeneracyTolerance)
                       return overlap_order(a.vec, b.vec);
                     return a.energy < b.energy;
                   });

  Spectrum spec;
  spec.entries.reserve(kept.size());
  for (auto& k : kept) {
    std::vector<cplx> amps(k.vec.data(), k.vec.data() + k.vec.size());
    spec.entries.push_back({k.energy, StateVector(n, std::move(amps))});
  }
  return spec;
}

}  // namespace qeom
