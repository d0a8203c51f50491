#include "qeom/pauli.hpp"

#include <bit>
#include <sstream>

namespace qeom {

namespace {

// Single-qubit product table: row = left letter, col = right letter,
// entry = {result letter, exponent k of the i^k phase}.
struct LetterProduct {
  std::uint8_t letter;
  std::uint8_t phase;  // i^phase
};

constexpr LetterProduct kLetterTable[4][4] = {
    /* I */ {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
    /* X */ {{1, 0}, {0, 0}, {3, 1}, {2, 3}},
    /* Y */ {{2, 0}, {3, 3}, {0, 0}, {1, 1}},
    /* Z */ {{3, 0}, {2, 1}, {1, 3}, {0, 0}},
};

constexpr std::uint32_t kXBitOfLetter[4] = {0, 1, 1, 0};
constexpr std::uint32_t kZBitOfLetter[4] = {0, 0, 1, 1};

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

int PauliString::weight() const { return std::popcount(x | z); }

std::string PauliString::str(int n_qubits) const {
  static const char kNames[] = "IXYZ";
  std::string out;
  for (int q = 0; q < n_qubits; ++q) out.push_back(kNames[letter(q)]);
  return out;
}

bool PauliLexLess::operator()(const PauliString& a, const PauliString& b) const {
  std::uint32_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  int q = std::countr_zero(diff);
  return a.letter(q) < b.letter(q);
}

std::pair<PauliString, cplx> multiply_strings(const PauliString& a,
                                              const PauliString& b) {
  PauliString out{a.x ^ b.x, a.z ^ b.z};
  std::uint32_t touched = (a.x | a.z) & (b.x | b.z);
  int phase = 0;
  while (touched) {
    int q = std::countr_zero(touched);
    touched &= touched - 1;
    phase += kLetterTable[a.letter(q)][b.letter(q)].phase;
  }
  return {out, kIPow[phase & 3]};
}

PauliOperator PauliOperator::identity(int n_qubits, cplx coeff) {
  PauliOperator op(n_qubits);
  op.add_term(PauliString{}, coeff);
  return op;
}

PauliOperator PauliOperator::single(int n_qubits, int qubit, char letter,
                                    cplx coeff) {
  if (qubit < 0 || qubit >= n_qubits)
    throw IndexOutOfRange("qubit " + std::to_string(qubit) + " on " +
                          std::to_string(n_qubits) + "-qubit register");
  int code;
  switch (letter) {
    case 'I': code = 0; break;
    case 'X': code = 1; break;
    case 'Y': code = 2; break;
    case 'Z': code = 3; break;
    default:
      throw IndexOutOfRange(std::string("unknown Pauli letter ") + letter);
  }
  PauliString s;
  s.x = kXBitOfLetter[code] << qubit;
  s.z = kZBitOfLetter[code] << qubit;
  PauliOperator op(n_qubits);
  op.add_term(s, coeff);
  return op;
}

PauliOperator PauliOperator::from_term(int n_qubits, const PauliString& s,
                                       cplx coeff) {
  PauliOperator op(n_qubits);
  op.add_term(s, coeff);
  return op;
}

void PauliOperator::add_term(const PauliString& s, cplx coeff) {
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kCoeffTolerance) terms_.erase(it);
}

cplx PauliOperator::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{0.0} : it->second;
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator out(n_qubits_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

bool PauliOperator::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  if (o.n_qubits_ != n_qubits_)
    throw QubitCountMismatch(std::to_string(n_qubits_) + " vs " +
                             std::to_string(o.n_qubits_));
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
  if (o.n_qubits_ != n_qubits_)
    throw QubitCountMismatch(std::to_string(n_qubits_) + " vs " +
                             std::to_string(o.n_qubits_));
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

PauliOperator& PauliOperator::operator*=(cplx scalar) {
  if (std::abs(scalar) < kCoeffTolerance) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

bool PauliOperator::operator==(const PauliOperator& o) const {
  if (n_qubits_ != o.n_qubits_ || terms_.size() != o.terms_.size())
    return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (std::abs(it->second - jt->second) > kCoeffTolerance) return false;
  }
  return true;
}

std::string PauliOperator::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+")
       << std::abs(c.imag()) << "i) " << s.str(n_qubits_);
  }
  if (first) os << "0";
  return os.str();
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits() != b.n_qubits())
    throw QubitCountMismatch(std::to_string(a.n_qubits()) + " vs " +
                             std::to_string(b.n_qubits()));
  PauliOperator out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      auto [s, phase] = multiply_strings(sa, sb);
      out.add_term(s, ca * cb * phase);
    }
  }
  return out;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits() != b.n_qubits())
    throw QubitCountMismatch(std::to_string(a.n_qubits()) + " vs " +
                             std::to_string(b.n_qubits()));
  PauliOperator out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      // strings either commute or anticommute; [P,Q] = 2PQ when they
      // anticommute and 0 otherwise
      int sym = std::popcount(sa.x & sb.z) + std::popcount(sa.z & sb.x);
      if ((sym & 1) == 0) continue;
      auto [s, phase] = multiply_strings(sa, sb);
      out.add_term(s, 2.0 * ca * cb * phase);
    }
  }
  return out;
}

PauliOperator double_commutator(const PauliOperator& a,
                                const PauliOperator& b,
                                const PauliOperator& c) {
  PauliOperator out = commutator(commutator(a, b), c);
  out += commutator(a, commutator(b, c));
  out *= 0.5;
  return out;
}

}  // namespace qeom
