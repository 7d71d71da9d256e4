#include "nhho/ladder_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "factorial.hpp"
#include "nhho/error.hpp"

namespace nhho {
namespace {

using TermMap = LadderPolynomial::TermMap;

// Normal-ordered expansion of a^s (a^+)^r, via
//   a^s (a^+)^r = a^(s-1) (a^+)^r a + r a^(s-1) (a^+)^(r-1).
// Coefficients are nonnegative integers held as doubles.
std::map<Monomial, double> reorder(unsigned s, unsigned r) {
  if (s == 0 || r == 0) return {{Monomial{r, s}, 1.0}};
  std::map<Monomial, double> out;
  for (const auto& [m, c] : reorder(s - 1, r)) {
    out[Monomial{m.creation, m.annihilation + 1}] += c;
  }
  for (const auto& [m, c] : reorder(s - 1, r - 1)) {
    out[m] += static_cast<double>(r) * c;
  }
  return out;
}

}  // namespace

LadderPolynomial::LadderPolynomial(TermMap terms) : terms_(std::move(terms)) { canonicalize(); }

LadderPolynomial LadderPolynomial::scalar(Complex c) { return monomial(0, 0, c); }

LadderPolynomial LadderPolynomial::monomial(unsigned creation, unsigned annihilation, Complex c) {
  return LadderPolynomial(TermMap{{Monomial{creation, annihilation}, c}});
}

void LadderPolynomial::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kCoefficientCutoff; });
}

Complex LadderPolynomial::coefficient(unsigned creation, unsigned annihilation) const {
  auto it = terms_.find(Monomial{creation, annihilation});
  return it == terms_.end() ? Complex{} : it->second;
}

unsigned LadderPolynomial::max_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned LadderPolynomial::bandwidth() const {
  unsigned b = 0;
  for (const auto& [m, c] : terms_) {
    b = std::max(b, m.creation > m.annihilation ? m.creation - m.annihilation
                                                : m.annihilation - m.creation);
  }
  return b;
}

double LadderPolynomial::max_abs_coefficient() const {
  double out = 0.0;
  for (const auto& [m, c] : terms_) out = std::max(out, std::abs(c));
  return out;
}

std::string LadderPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    if (m.creation > 0) os << " a+" << (m.creation > 1 ? "^" + std::to_string(m.creation) : "");
    if (m.annihilation > 0) {
      os << " a" << (m.annihilation > 1 ? "^" + std::to_string(m.annihilation) : "");
    }
  }
  return os.str();
}

LadderPolynomial& LadderPolynomial::operator+=(const LadderPolynomial& other) {
  for (const auto& [m, c] : other.terms_) terms_[m] += c;
  canonicalize();
  return *this;
}

LadderPolynomial& LadderPolynomial::operator-=(const LadderPolynomial& other) {
  for (const auto& [m, c] : other.terms_) terms_[m] -= c;
  canonicalize();
  return *this;
}

LadderPolynomial& LadderPolynomial::operator*=(Complex c) {
  for (auto& [m, coeff] : terms_) coeff *= c;
  canonicalize();
  return *this;
}

LadderPolynomial add(const LadderPolynomial& p, const LadderPolynomial& q) {
  LadderPolynomial out = p;
  out += q;
  return out;
}

LadderPolynomial subtract(const LadderPolynomial& p, const LadderPolynomial& q) {
  LadderPolynomial out = p;
  out -= q;
  return out;
}

LadderPolynomial scale(const LadderPolynomial& p, Complex c) {
  LadderPolynomial out = p;
  out *= c;
  return out;
}

LadderPolynomial multiply(const LadderPolynomial& p, const LadderPolynomial& q) {
  std::map<std::pair<unsigned, unsigned>, std::map<Monomial, double>> cache;
  TermMap out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      // (a+)^r1 a^s1 (a+)^r2 a^s2: only the middle a^s1 (a+)^r2 needs reordering.
      auto key = std::make_pair(mp.annihilation, mq.creation);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, reorder(key.first, key.second)).first;
      for (const auto& [mid, k] : it->second) {
        Monomial term{mp.creation + mid.creation, mid.annihilation + mq.annihilation};
        out[term] += cp * cq * k;
      }
    }
  }
  return LadderPolynomial(std::move(out));
}

LadderPolynomial commutator(const LadderPolynomial& p, const LadderPolynomial& q) {
  return multiply(p, q) - multiply(q, p);
}

LadderPolynomial adjoint(const LadderPolynomial& p) {
  // ((a+)^r a^s)^+ = (a+)^s a^r, which is already normal ordered.
  TermMap out;
  for (const auto& [m, c] : p.terms()) out[Monomial{m.annihilation, m.creation}] = std::conj(c);
  return LadderPolynomial(std::move(out));
}

FockMatrix::FockMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionError("FockMatrix must be square");
  }
}

Complex matrix_element(const LadderPolynomial& p, std::size_t m, std::size_t n) {
  Complex out{};
  for (const auto& [mono, c] : p.terms()) {
    if (n < mono.annihilation) continue;
    const std::size_t mid = n - mono.annihilation;
    if (m != mid + mono.creation) continue;
    out += c * detail::ladder_amplitude(n, m, mid);
  }
  return out;
}

FockMatrix to_matrix(const LadderPolynomial& p, std::size_t dim) {
  if (dim == 0) throw DimensionError("to_matrix: dimension must be at least 1");
  FockMatrix out(dim);
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t n = mono.annihilation; n < dim; ++n) {
      const std::size_t mid = n - mono.annihilation;
      const std::size_t m = mid + mono.creation;
      if (m >= dim) continue;
      out(m, n) += c * detail::ladder_amplitude(n, m, mid);
    }
  }
  return out;
}

}  // namespace nhho
