#include "qeom/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

namespace qeom {

namespace {

constexpr double kDuplicateTolerance = 1e-10;

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// The namelist header runs from the first line through "&END" or "/".
// Values of interest: NORB, NELEC, MS2.  ORBSYM/ISYM are accepted and
// ignored.
struct Header {
  int norb = -1;
  int nelec = -1;
  int ms2 = 0;
  std::size_t body_start = 0;  // offset just past the header terminator
};

Header parse_header(const std::string& text) {
  Header h;
  std::size_t end = std::string::npos;
  std::string up = upper(text);
  if (auto p = up.find("&END"); p != std::string::npos) {
    end = p;
    h.body_start = p + 4;
  } else if (auto q = up.find('/'); q != std::string::npos) {
    end = q;
    h.body_start = q + 1;
  } else {
    throw MissingHeaderField("namelist terminator (&END or /) not found");
  }
  std::string head = up.substr(0, end);

  auto grab = [&](const std::string& key) -> std::optional<int> {
    auto pos = head.find(key);
    while (pos != std::string::npos) {
      // must be a standalone key, not a suffix of e.g. ORBSYM
      bool ok = pos == 0 || !std::isalpha(static_cast<unsigned char>(head[pos - 1]));
      auto eq = head.find_first_not_of(" \t", pos + key.size());
      if (ok && eq != std::string::npos && head[eq] == '=') {
        auto vstart = head.find_first_not_of(" \t", eq + 1);
        auto vend = head.find_first_of(", \t\r\n", vstart);
        std::string tok = head.substr(vstart, vend == std::string::npos
                                                  ? std::string::npos
                                                  : vend - vstart);
        try {
          return std::stoi(tok);
        } catch (const std::exception&) {
          throw MalformedLine("non-numeric value for " + key + ": " + tok);
        }
      }
      pos = head.find(key, pos + 1);
    }
    return std::nullopt;
  };

  if (auto v = grab("NORB")) h.norb = *v;
  else throw MissingHeaderField("NORB");
  if (auto v = grab("NELEC")) h.nelec = *v;
  else throw MissingHeaderField("NELEC");
  if (auto v = grab("MS2")) h.ms2 = *v;
  return h;
}

std::array<int, 4> canonical_two_body(int p, int q, int r, int s) {
  auto ordered = [](int a, int b) { return std::pair{std::max(a, b), std::min(a, b)}; };
  auto [p1, q1] = ordered(p, q);
  auto [r1, s1] = ordered(r, s);
  if (std::pair{p1, q1} < std::pair{r1, s1}) {
    std::swap(p1, r1);
    std::swap(q1, s1);
  }
  return {p1, q1, r1, s1};
}

// Accepts Fortran-style 'D' exponents and a leading '+'.
double parse_double(std::string tok) {
  std::replace(tok.begin(), tok.end(), 'D', 'e');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  if (!tok.empty() && tok.front() == '+') tok.erase(tok.begin());
  double value;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw MalformedLine("non-numeric value token: " + tok);
  return value;
}

void store(std::map<std::array<int, 4>, double>& canon,
           const std::array<int, 4>& key, double value) {
  auto [it, inserted] = canon.try_emplace(key, value);
  if (!inserted && std::abs(it->second - value) > kDuplicateTolerance) {
    std::ostringstream os;
    os << "two-body (" << key[0] + 1 << "," << key[1] + 1 << "," << key[2] + 1
       << "," << key[3] + 1 << "): " << it->second << " vs " << value;
    throw ConflictingDuplicate(os.str());
  }
}

}  // namespace

MolecularIntegrals parse_fcidump(const std::string& text) {
  Header header = parse_header(text);
  if (header.norb <= 0)
    throw MissingHeaderField("NORB must be positive, got " +
                             std::to_string(header.norb));
  if (header.nelec < 0 || header.nelec > 2 * header.norb)
    throw MissingHeaderField("NELEC out of range: " +
                             std::to_string(header.nelec));

  MolecularIntegrals mol;
  mol.n_spatial_orbitals = header.norb;
  mol.n_electrons = header.nelec;
  mol.spin_2s = header.ms2;

  std::map<std::pair<int, int>, double> one_canon;
  std::map<std::array<int, 4>, double> two_canon;
  bool have_core = false;

  std::istringstream body(text.substr(header.body_start));
  std::string line;
  while (std::getline(body, line)) {
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;  // blank line
    double value = parse_double(vtok);
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      std::string tok;
      if (!(ls >> tok)) throw MalformedLine("expected 4 indices: " + line);
      auto r = std::from_chars(tok.data(), tok.data() + tok.size(), idx[k]);
      if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
        throw MalformedLine("non-numeric index token: " + tok);
    }
    std::string extra;
    if (ls >> extra) throw MalformedLine("trailing token: " + extra);
    for (int k = 0; k < 4; ++k)
      if (idx[k] < 0 || idx[k] > header.norb)
        throw IndexOutOfRange("orbital index " + std::to_string(idx[k]) +
                              " > NORB=" + std::to_string(header.norb));

    int p = idx[0], q = idx[1], r = idx[2], s = idx[3];
    if (p == 0 && q == 0 && r == 0 && s == 0) {
      if (have_core && std::abs(mol.core_energy - value) > kDuplicateTolerance)
        throw ConflictingDuplicate("core energy restated with different value");
      mol.core_energy = value;
      have_core = true;
    } else if (r == 0 && s == 0) {
      if (p == 0 || q == 0)
        throw MalformedLine("one-body entry with zero index: " + line);
      auto key = std::pair{std::max(p, q) - 1, std::min(p, q) - 1};
      auto [it, inserted] = one_canon.try_emplace(key, value);
      if (!inserted && std::abs(it->second - value) > kDuplicateTolerance)
        throw ConflictingDuplicate("one-body (" + std::to_string(p) + "," +
                                   std::to_string(q) + ")");
    } else {
      if (p == 0 || q == 0 || r == 0 || s == 0)
        throw MalformedLine("two-body entry with zero index: " + line);
      store(two_canon, canonical_two_body(p - 1, q - 1, r - 1, s - 1), value);
    }
  }

  // symmetry completion
  for (const auto& [key, v] : one_canon) {
    mol.one_body[{key.first, key.second}] = v;
    mol.one_body[{key.second, key.first}] = v;
  }
  for (const auto& [key, v] : two_canon) {
    auto [p, q, r, s] = key;
    for (auto [a, b, c, d] :
         {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
          std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
          std::array{r, s, q, p}, std::array{s, r, q, p}})
      mol.two_body[{a, b, c, d}] = v;
  }
  return mol;
}

MolecularIntegrals load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fcidump(ss.str());
}

std::string write_fcidump(const MolecularIntegrals& mol) {
  std::ostringstream os;
  os << "&FCI NORB=" << mol.n_spatial_orbitals << ",NELEC=" << mol.n_electrons
     << ",MS2=" << mol.spin_2s << ",\n";
  os << " ORBSYM=";
  for (int i = 0; i < mol.n_spatial_orbitals; ++i) os << "1,";
  os << "\n ISYM=1,\n&END\n";
  os << std::scientific << std::setprecision(16);

  std::map<std::array<int, 4>, double> two_canon;
  for (const auto& [key, v] : mol.two_body)
    two_canon[canonical_two_body(key[0], key[1], key[2], key[3])] = v;
  for (const auto& [key, v] : two_canon)
    os << " " << std::setw(23) << v << " " << key[0] + 1 << " " << key[1] + 1
       << " " << key[2] + 1 << " " << key[3] + 1 << "\n";

  std::map<std::pair<int, int>, double> one_canon;
  for (const auto& [key, v] : mol.one_body)
    one_canon[{std::max(key.first, key.second), std::min(key.first, key.second)}] = v;
  for (const auto& [key, v] : one_canon)
    os << " " << std::setw(23) << v << " " << key.first + 1 << " "
       << key.second + 1 << " 0 0\n";

  os << " " << std::setw(23) << mol.core_energy << " 0 0 0 0\n";
  return os.str();
}

}  // namespace qeom
