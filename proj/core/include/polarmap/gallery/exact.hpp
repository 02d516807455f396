#pragma once

// Polynomials and rational functions of one complex variable with exact
// Gaussian-rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "polarmap/core/complex.hpp"
#include "polarmap/core/dual.hpp"

namespace polarmap {

using Rational = boost::multiprecision::cpp_rational;

struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussRational(int r) : re(r) {}                                                                // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(const GaussRational& a, const GaussRational& b);

/// Parses a real rational such as "3" or "-5/4". Throws ContractViolation.
Rational parse_rational(const std::string& text);

class Poly {
 public:
  Poly() = default;
  /// Ascending coefficients; trailing zeros are trimmed.
  explicit Poly(std::vector<GaussRational> coeffs);
  static Poly constant(const GaussRational& c) { return Poly({c}); }
  static Poly monomial(const GaussRational& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussRational>& coefficients() const { return c_; }
  GaussRational coefficient(int k) const;
  GaussRational leading() const;

  Poly derivative() const;
  Poly monic() const;

  template <class S>
  Cx<S> eval(const Cx<S>& z) const {
    Cx<S> r(S(0.0), S(0.0));
    for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) r = r * z + Cx<S>::from(*it);
    return r;
  }
  std::complex<double> operator()(std::complex<double> z) const;

  std::string to_string(char var = 'z') const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRational& s, const Poly& a);

 private:
  void trim();

  std::vector<GaussRational> c_;
  std::vector<std::complex<double>> approx_;
};

/// Quotient and remainder; throws ContractViolation for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero only if both are zero).
Poly gcd(Poly a, Poly b);

/// Complex roots with exact multiplicities from a square-free factorization;
/// each square-free factor is solved numerically.
std::vector<std::pair<std::complex<double>, int>> roots(const Poly& p);

class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly::constant(1)) {}
  RationalFn(Poly num);  // NOLINT: polynomials are rational functions
  RationalFn(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFn derivative() const;

  /// Throws DomainError near a pole.
  template <class S>
  Cx<S> eval(const Cx<S>& z) const {
    check_pole(std::complex<double>(value_of(z.re), value_of(z.im)));
    return num_.eval(z) / den_.eval(z);
  }
  std::complex<double> operator()(std::complex<double> z) const;

  std::string to_string(char var = 'z') const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

 private:
  void check_pole(std::complex<double> z) const;

  Poly num_;
  Poly den_;
};

}  // namespace polarmap
