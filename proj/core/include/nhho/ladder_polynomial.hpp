#pragma once

// Normal-ordered polynomial algebra over a single bosonic mode.
//
// A LadderPolynomial is a finite sum  sum_{r,s} c_{rs} (a^+)^r a^s  with every
// term normal ordered. Products are re-ordered with the single rewrite rule
//
//     a (a^+)^r  ->  (a^+)^r a + r (a^+)^(r-1)
//
// applied recursively, so every value held by this type is canonical: two
// polynomials denoting the same operator have identical term maps.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <map>
#include <string>

namespace nhho {

using Complex = std::complex<double>;

// (a^+)^creation a^annihilation. Ordered by (creation, annihilation).
struct Monomial {
  unsigned creation = 0;
  unsigned annihilation = 0;

  unsigned degree() const { return creation + annihilation; }
  auto operator<=>(const Monomial&) const = default;
};

// Coefficients with magnitude below this are dropped on canonicalization.
inline constexpr double kCoefficientCutoff = 1e-15;

class LadderPolynomial {
 public:
  using TermMap = std::map<Monomial, Complex>;

  LadderPolynomial() = default;
  explicit LadderPolynomial(TermMap terms);

  static LadderPolynomial scalar(Complex c);
  static LadderPolynomial identity() { return scalar(1.0); }
  static LadderPolynomial monomial(unsigned creation, unsigned annihilation,
                                   Complex c = 1.0);
  static LadderPolynomial creation(unsigned power = 1) { return monomial(power, 0); }
  static LadderPolynomial annihilation(unsigned power = 1) { return monomial(0, power); }
  // a^+ a
  static LadderPolynomial number() { return monomial(1, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(unsigned creation, unsigned annihilation) const;
  unsigned max_degree() const;
  // Largest |m - n| for which <m|p|n> can be nonzero.
  unsigned bandwidth() const;
  double max_abs_coefficient() const;

  // e.g. "(2+0i) a+^2 a + (1+0i)"
  std::string to_string() const;

  LadderPolynomial& operator+=(const LadderPolynomial& other);
  LadderPolynomial& operator-=(const LadderPolynomial& other);
  LadderPolynomial& operator*=(Complex c);

  friend bool operator==(const LadderPolynomial&, const LadderPolynomial&) = default;

 private:
  void canonicalize();

  TermMap terms_;
};

LadderPolynomial add(const LadderPolynomial& p, const LadderPolynomial& q);
LadderPolynomial subtract(const LadderPolynomial& p, const LadderPolynomial& q);
LadderPolynomial multiply(const LadderPolynomial& p, const LadderPolynomial& q);
LadderPolynomial scale(const LadderPolynomial& p, Complex c);
LadderPolynomial commutator(const LadderPolynomial& p, const LadderPolynomial& q);
LadderPolynomial adjoint(const LadderPolynomial& p);

inline LadderPolynomial operator+(const LadderPolynomial& p, const LadderPolynomial& q) {
  return add(p, q);
}
inline LadderPolynomial operator-(const LadderPolynomial& p, const LadderPolynomial& q) {
  return subtract(p, q);
}
inline LadderPolynomial operator-(const LadderPolynomial& p) { return scale(p, -1.0); }
inline LadderPolynomial operator*(const LadderPolynomial& p, const LadderPolynomial& q) {
  return multiply(p, q);
}
inline LadderPolynomial operator*(Complex c, const LadderPolynomial& p) { return scale(p, c); }
inline LadderPolynomial operator*(const LadderPolynomial& p, Complex c) { return scale(p, c); }

// Dense truncation of an operator in the number basis; entry (m, n) = <m|op|n>.
class FockMatrix {
 public:
  explicit FockMatrix(std::size_t dim) : entries_(Eigen::MatrixXcd::Zero(dim, dim)) {}
  explicit FockMatrix(Eigen::MatrixXcd entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t m, std::size_t n) const { return entries_(m, n); }
  Complex& operator()(std::size_t m, std::size_t n) { return entries_(m, n); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

// <m|p|n>. A term (r, s, c) contributes c sqrt(n!/(n-s)!) sqrt((n-s+r)!/(n-s)!)
// when m = n - s + r and n >= s.
Complex matrix_element(const LadderPolynomial& p, std::size_t m, std::size_t n);

FockMatrix to_matrix(const LadderPolynomial& p, std::size_t dim);

}  // namespace nhho
