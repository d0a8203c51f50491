#include "qeom/kernels.hpp"

#include <atomic>
#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define QEOM_X86 1
#else
#define QEOM_X86 0
#endif

namespace qeom::kernels {

namespace {

bool detect_avx2() {
#if QEOM_X86 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<bool> g_force_scalar{[] {
  const char* e = std::getenv("QEOM_FORCE_SCALAR");
  return e != nullptr && e[0] == '1';
}()};

const bool g_has_avx2 = detect_avx2();

inline bool use_avx2() {
  return g_has_avx2 && !g_force_scalar.load(std::memory_order_relaxed);
}

}  // namespace

const char* backend_name() { return use_avx2() ? "avx2" : "scalar"; }

bool force_scalar(bool on) {
  return g_force_scalar.exchange(on, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// scalar reference kernels
// ---------------------------------------------------------------------------

namespace detail {

WeightStats weight_product_stats_scalar(const std::int32_t* const* rows,
                                        const double (*tables)[4],
                                        std::size_t k, std::size_t n_shots) {
  WeightStats st;
  for (std::size_t s = 0; s < n_shots; ++s) {
    double w = 1.0;
    for (std::size_t q = 0; q < k; ++q) w *= tables[q][rows[q][s]];
    st.sum += w;
    st.sum_sq += w * w;
  }
  return st;
}

void weight_product_accumulate_scalar(const std::int32_t* const* rows,
                                      const double (*tables)[4], std::size_t k,
                                      double coeff, double* out,
                                      std::size_t n_shots) {
  for (std::size_t s = 0; s < n_shots; ++s) {
    double w = coeff;
    for (std::size_t q = 0; q < k; ++q) w *= tables[q][rows[q][s]];
    out[s] += w;
  }
}

Reduced1Q reduced_density_1q_scalar(const std::complex<double>* amps,
                                    std::size_t dim, int qubit) {
  Reduced1Q r;
  const std::size_t step = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t off = 0; off < step; ++off) {
      const std::complex<double> a0 = amps[base + off];
      const std::complex<double> a1 = amps[base + off + step];
      r.r00 += std::norm(a0);
      r.r11 += std::norm(a1);
      r.r01 += std::conj(a0) * a1;
    }
  }
  return r;
}

double apply_1q_scalar(std::complex<double>* amps, std::size_t dim, int qubit,
                       const std::complex<double>* m) {
  double norm_sq = 0.0;
  const std::size_t step = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t off = 0; off < step; ++off) {
      std::complex<double>& a0 = amps[base + off];
      std::complex<double>& a1 = amps[base + off + step];
      const std::complex<double> b0 = m[0] * a0 + m[1] * a1;
      const std::complex<double> b1 = m[2] * a0 + m[3] * a1;
      a0 = b0;
      a1 = b1;
      norm_sq += std::norm(b0) + std::norm(b1);
    }
  }
  return norm_sq;
}

// ---------------------------------------------------------------------------
// AVX2 kernels
// ---------------------------------------------------------------------------

#if QEOM_X86

__attribute__((target("avx2,fma")))
WeightStats weight_product_stats_avx2(const std::int32_t* const* rows,
                                      const double (*tables)[4], std::size_t k,
                                      std::size_t n_shots) {
  __m256d sum0 = _mm256_setzero_pd(), sum1 = _mm256_setzero_pd();
  __m256d sq0 = _mm256_setzero_pd(), sq1 = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t s = 0;
  for (; s + 8 <= n_shots; s += 8) {
    __m256d w0 = one, w1 = one;
    for (std::size_t q = 0; q < k; ++q) {
      const __m128i i0 =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows[q] + s));
      const __m128i i1 =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows[q] + s + 4));
      w0 = _mm256_mul_pd(w0, _mm256_i32gather_pd(tables[q], i0, 8));
      w1 = _mm256_mul_pd(w1, _mm256_i32gather_pd(tables[q], i1, 8));
    }
    sum0 = _mm256_add_pd(sum0, w0);
    sum1 = _mm256_add_pd(sum1, w1);
    sq0 = _mm256_fmadd_pd(w0, w0, sq0);
    sq1 = _mm256_fmadd_pd(w1, w1, sq1);
  }
  alignas(32) double buf[4];
  WeightStats st;
  _mm256_store_pd(buf, _mm256_add_pd(sum0, sum1));
  st.sum = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, _mm256_add_pd(sq0, sq1));
  st.sum_sq = buf[0] + buf[1] + buf[2] + buf[3];
  for (; s < n_shots; ++s) {
    double w = 1.0;
    for (std::size_t q = 0; q < k; ++q) w *= tables[q][rows[q][s]];
    st.sum += w;
    st.sum_sq += w * w;
  }
  return st;
}

__attribute__((target("avx2,fma")))
void weight_product_accumulate_avx2(const std::int32_t* const* rows,
                                    const double (*tables)[4], std::size_t k,
                                    double coeff, double* out,
                                    std::size_t n_shots) {
  const __m256d c = _mm256_set1_pd(coeff);
  std::size_t s = 0;
  for (; s + 4 <= n_shots; s += 4) {
    __m256d w = c;
    for (std::size_t q = 0; q < k; ++q) {
      const __m128i i0 =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows[q] + s));
      w = _mm256_mul_pd(w, _mm256_i32gather_pd(tables[q], i0, 8));
    }
    _mm256_storeu_pd(out + s, _mm256_add_pd(_mm256_loadu_pd(out + s), w));
  }
  for (; s < n_shots; ++s) {
    double w = coeff;
    for (std::size_t q = 0; q < k; ++q) w *= tables[q][rows[q][s]];
    out[s] += w;
  }
}

__attribute__((target("avx2,fma")))
Reduced1Q reduced_density_1q_avx2(const std::complex<double>* amps,
                                  std::size_t dim, int qubit) {
  if (qubit == 0) return reduced_density_1q_scalar(amps, dim, qubit);
  const std::size_t step = std::size_t{1} << qubit;
  const double* d = reinterpret_cast<const double*>(amps);
  __m256d acc00 = _mm256_setzero_pd();  // |a0|^2 lanes
  __m256d acc11 = _mm256_setzero_pd();
  __m256d acc_re = _mm256_setzero_pd();  // conj(a0)*a1 real lanes
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d imsign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    const double* p0 = d + 2 * base;
    const double* p1 = d + 2 * (base + step);
    for (std::size_t off = 0; off + 2 <= step; off += 2) {
      const __m256d v0 = _mm256_loadu_pd(p0 + 2 * off);
      const __m256d v1 = _mm256_loadu_pd(p1 + 2 * off);
      acc00 = _mm256_fmadd_pd(v0, v0, acc00);
      acc11 = _mm256_fmadd_pd(v1, v1, acc11);
      acc_re = _mm256_fmadd_pd(v0, v1, acc_re);
      const __m256d v1s = _mm256_permute_pd(v1, 0b0101);
      acc_im = _mm256_fmadd_pd(_mm256_mul_pd(v0, v1s), imsign, acc_im);
    }
  }
  alignas(32) double buf[4];
  Reduced1Q r;
  _mm256_store_pd(buf, acc00);
  r.r00 = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, acc11);
  r.r11 = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, acc_re);
  double re = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, acc_im);
  double im = buf[0] + buf[1] + buf[2] + buf[3];
  r.r01 = {re, im};
  return r;
}

__attribute__((target("avx2,fma")))
double apply_1q_avx2(std::complex<double>* amps, std::size_t dim, int qubit,
                     const std::complex<double>* m) {
  if (qubit == 0) return apply_1q_scalar(amps, dim, qubit, m);
  const std::size_t step = std::size_t{1} << qubit;
  double* d = reinterpret_cast<double*>(amps);
  const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
  const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
  const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
  const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    double* p0 = d + 2 * base;
    double* p1 = d + 2 * (base + step);
    for (std::size_t off = 0; off + 2 <= step; off += 2) {
      const __m256d v0 = _mm256_loadu_pd(p0 + 2 * off);
      const __m256d v1 = _mm256_loadu_pd(p1 + 2 * off);
      const __m256d v0s = _mm256_permute_pd(v0, 0b0101);
      const __m256d v1s = _mm256_permute_pd(v1, 0b0101);
      // complex scalar*vector: (cr*v) -/+ (ci*swap(v)) via addsub
      __m256d b0 = _mm256_add_pd(
          _mm256_addsub_pd(_mm256_mul_pd(m00r, v0), _mm256_mul_pd(m00i, v0s)),
          _mm256_addsub_pd(_mm256_mul_pd(m01r, v1), _mm256_mul_pd(m01i, v1s)));
      __m256d b1 = _mm256_add_pd(
          _mm256_addsub_pd(_mm256_mul_pd(m10r, v0), _mm256_mul_pd(m10i, v0s)),
          _mm256_addsub_pd(_mm256_mul_pd(m11r, v1), _mm256_mul_pd(m11i, v1s)));
      _mm256_storeu_pd(p0 + 2 * off, b0);
      _mm256_storeu_pd(p1 + 2 * off, b1);
      acc = _mm256_fmadd_pd(b0, b0, acc);
      acc = _mm256_fmadd_pd(b1, b1, acc);
    }
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  return buf[0] + buf[1] + buf[2] + buf[3];
}

#endif  // QEOM_X86

}  // namespace detail

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

WeightStats weight_product_stats(const std::int32_t* const* rows,
                                 const double (*tables)[4], std::size_t k,
                                 std::size_t n_shots) {
#if QEOM_X86
  if (use_avx2())
    return detail::weight_product_stats_avx2(rows, tables, k, n_shots);
#endif
  return detail::weight_product_stats_scalar(rows, tables, k, n_shots);
}

void weight_product_accumulate(const std::int32_t* const* rows,
                               const double (*tables)[4], std::size_t k,
                               double coeff, double* out,
                               std::size_t n_shots) {
#if QEOM_X86
  if (use_avx2())
    return detail::weight_product_accumulate_avx2(rows, tables, k, coeff, out,
                                                  n_shots);
#endif
  detail::weight_product_accumulate_scalar(rows, tables, k, coeff, out,
                                           n_shots);
}

Reduced1Q reduced_density_1q(const std::complex<double>* amps,
                             std::size_t dim, int qubit) {
#if QEOM_X86
  if (use_avx2()) return detail::reduced_density_1q_avx2(amps, dim, qubit);
#endif
  return detail::reduced_density_1q_scalar(amps, dim, qubit);
}

double apply_1q(std::complex<double>* amps, std::size_t dim, int qubit,
                const std::complex<double>* m) {
#if QEOM_X86
  if (use_avx2()) return detail::apply_1q_avx2(amps, dim, qubit, m);
#endif
  return detail::apply_1q_scalar(amps, dim, qubit, m);
}

}  // namespace qeom::kernels
