#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qeom::kernels {

// Hot inner loops of the measurement pipeline.  Each kernel has a scalar
// reference implementation and an AVX2 variant; the dispatcher picks the
// widest supported one at runtime.  The variants are equivalence-tested
// against each other (tests/test_kernels.cpp).

// Name of the backend the dispatcher currently selects ("avx2"/"scalar").
const char* backend_name();
// Force the scalar reference path (also honoured via QEOM_FORCE_SCALAR=1).
// Returns the previous setting.
bool force_scalar(bool on);

struct WeightStats {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Sum and sum-of-squares of w_s = prod_k tables[k][rows[k][s]] over shots s.
// rows[k] holds outcome indices (0..3) of one measured qubit; tables[k] the
// four dual-frame coefficients of that qubit's letter.  k == 0 means the
// identity observable (w_s == 1).
WeightStats weight_product_stats(const std::int32_t* const* rows,
                                 const double (*tables)[4], std::size_t k,
                                 std::size_t n_shots);

// out[s] += coeff * prod_k tables[k][rows[k][s]]  (multi-term weights)
void weight_product_accumulate(const std::int32_t* const* rows,
                               const double (*tables)[4], std::size_t k,
                               double coeff, double* out, std::size_t n_shots);

struct Reduced1Q {
  double r00 = 0.0;
  double r11 = 0.0;
  std::complex<double> r01{0.0, 0.0};  // <0|rho|1>
};

// Single-qubit reduced density matrix of `qubit` for a (not necessarily
// normalized) amplitude vector of length dim = 2^n.
Reduced1Q reduced_density_1q(const std::complex<double>* amps,
                             std::size_t dim, int qubit);

// In-place application of a 2x2 matrix m (row-major m[0]=m00, m[1]=m01,
// m[2]=m10, m[3]=m11) to `qubit`; returns the resulting squared norm.
double apply_1q(std::complex<double>* amps, std::size_t dim, int qubit,
                const std::complex<double>* m);

namespace detail {
WeightStats weight_product_stats_scalar(const std::int32_t* const* rows,
                                        const double (*tables)[4],
                                        std::size_t k, std::size_t n_shots);
void weight_product_accumulate_scalar(const std::int32_t* const* rows,
                                      const double (*tables)[4], std::size_t k,
                                      double coeff, double* out,
                                      std::size_t n_shots);
Reduced1Q reduced_density_1q_scalar(const std::complex<double>* amps,
                                    std::size_t dim, int qubit);
double apply_1q_scalar(std::complex<double>* amps, std::size_t dim, int qubit,
                       const std::complex<double>* m);
#if defined(__x86_64__) || defined(__i386__)
WeightStats weight_product_stats_avx2(const std::int32_t* const* rows,
                                      const double (*tables)[4], std::size_t k,
                                      std::size_t n_shots);
void weight_product_accumulate_avx2(const std::int32_t* const* rows,
                                    const double (*tables)[4], std::size_t k,
                                    double coeff, double* out,
                                    std::size_t n_shots);
Reduced1Q reduced_density_1q_avx2(const std::complex<double>* amps,
                                  std::size_t dim, int qubit);
double apply_1q_avx2(std::complex<double>* amps, std::size_t dim, int qubit,
                     const std::complex<double>* m);
#endif
}  // namespace detail

}  // namespace qeom::kernels
