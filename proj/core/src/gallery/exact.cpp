#include "polarmap/gallery/exact.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

#include "polarmap/core/errors.hpp"

namespace polarmap {

std::complex<double> GaussRational::to_complex() const {
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string GaussRational::to_string() const {
  if (im == 0) return re.str();
  if (re == 0) return im.str() + "i";
  std::string s = "(" + re.str();
  s += im > 0 ? "+" : "-";
  s += (im > 0 ? im : Rational(-im)).str() + "i)";
  return s;
}

GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  require(!b.is_zero(), ErrorKind::ContractViolation, "division by zero coefficient");
  const Rational n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Rational parse_rational(const std::string& text) {
  require(!text.empty(), ErrorKind::ContractViolation, "empty rational");
  try {
    const auto slash = text.find('/');
    require(slash != 0 && slash + 1 != text.size(), ErrorKind::ContractViolation, "not a rational number: " + text);
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int p(text.substr(0, slash));
    const boost::multiprecision::cpp_int q(text.substr(slash + 1));
    require(q != 0, ErrorKind::ContractViolation, "zero denominator in " + text);
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const GeometryError*>(&e)) throw;
    fail(ErrorKind::ContractViolation, "not a rational number: " + text);
  }
}

// Poly -------------------------------------------------------------------------

Poly::Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const GaussRational& c, int k) {
  std::vector<GaussRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  approx_.clear();
  for (const auto& c : c_) approx_.push_back(c.to_complex());
}

GaussRational Poly::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

GaussRational Poly::leading() const { return is_zero() ? GaussRational{} : c_.back(); }

Poly Poly::derivative() const {
  std::vector<GaussRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(GaussRational(static_cast<int>(k)) * c_[k]);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const GaussRational l = leading();
  std::vector<GaussRational> v;
  for (const auto& c : c_) v.push_back(c / l);
  return Poly(std::move(v));
}

std::complex<double> Poly::operator()(std::complex<double> z) const {
  std::complex<double> r = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) r = r * z + *it;
  return r;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == GaussRational(1) && k > 0;
    if (!unit) os << c.to_string();
    if (k > 0) os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + GaussRational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const GaussRational& s, const Poly& a) {
  std::vector<GaussRational> v;
  for (const auto& c : a.c_) v.push_back(s * c);
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorKind::ContractViolation, "polynomial division by zero");
  Poly q;
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Poly t = Poly::monomial(r.leading() / b.leading(), r.degree() - b.degree());
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<std::complex<double>> simple_roots(const Poly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  if (n == 1) return {-p.coefficient(0).to_complex() / p.coefficient(1).to_complex()};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> lead = p.leading().to_complex();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coefficient(i).to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    // One Newton polish step against the exact coefficients.
    const std::complex<double> d = p.derivative()(z);
    if (std::abs(d) > 0.0) z -= p(z) / d;
    out.push_back(z);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::complex<double>, int>> roots(const Poly& p) {
  std::vector<std::pair<std::complex<double>, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's square-free factorization: p = prod a_i^i.
  const Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = divmod(p, a).first;
  Poly c = divmod(dp, a).first;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const Poly ai = gcd(b, d);
    for (const auto& z : simple_roots(ai)) out.emplace_back(z, i);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
    return x.first.imag() < y.first.imag();
  });
  return out;
}

// RationalFn ---------------------------------------------------------------------

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFn::RationalFn(Poly num, Poly den) {
  require(!den.is_zero(), ErrorKind::ContractViolation, "zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const GaussRational l = den.leading();
  num_ = (GaussRational(1) / l) * num;
  den_ = (GaussRational(1) / l) * den;
}

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

void RationalFn::check_pole(std::complex<double> z) const {
  if (den_.degree() == 0) return;
  double scale = 0.0;
  const double az = std::abs(z);
  double power = 1.0;
  for (const auto& c : den_.coefficients()) {
    scale += std::abs(c.to_complex()) * power;
    power *= az;
  }
  if (std::abs(den_(z)) <= 1e-12 * scale) fail(ErrorKind::DomainError, "evaluation at a pole");
}

std::complex<double> RationalFn::operator()(std::complex<double> z) const {
  check_pole(z);
  return num_(z) / den_(z);
}

std::string RationalFn::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  require(!b.is_zero(), ErrorKind::DomainError, "division by the zero function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace polarmap
