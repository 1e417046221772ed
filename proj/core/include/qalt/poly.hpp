#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace qalt {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace detail {
struct XVar {};
struct SVar {};
}  // namespace detail

// Laurent polynomial with arbitrary-precision integer coefficients.
//
// Stored sparsely as exponent -> coefficient; zero coefficients are never
// stored, so two equal polynomials always have identical term maps and the
// zero polynomial is the empty map.
template <class Var>
class Laurent {
 public:
  using Terms = std::map<int, BigInt>;

  Laurent() = default;
  Laurent(long c) : Laurent(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  Laurent(const BigInt& c) {                // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, c);
  }

  static Laurent monomial(const BigInt& c, int exponent) {
    Laurent p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
  }
  static Laurent var(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Highest exponent; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  // Lowest exponent. Throws InvalidArgument on the zero polynomial.
  int low_degree() const;

  BigInt coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const BigInt& c, int exponent) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Multiply by var^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  // p(var) -> p(var^-1)
  Laurent inverted() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  Laurent pow(unsigned n) const {
    Laurent result(1), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Polynomials in x (Q-polynomial, sigma_n, Chebyshev S_k) and, by reuse,
// in t for Burau matrix entries.
using IntLaurent = Laurent<detail::XVar>;
// Polynomials in s = t^(1/2); Jones polynomials live here.
using HalfLaurent = Laurent<detail::SVar>;

extern template class Laurent<detail::XVar>;
extern template class Laurent<detail::SVar>;

// Gaussian integer re + im*i.
struct GaussianInt {
  BigInt re;
  BigInt im;

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  // |z| for z on the real or imaginary axis. Throws InternalError otherwise,
  // since the modulus would not be an integer.
  BigInt axis_abs() const;
};

// Renders terms by descending exponent: "2x^2+2x-3", "x^-1", "0".
std::string to_string(const IntLaurent& p, std::string_view var = "x");
std::string to_string(const HalfLaurent& p, std::string_view var = "s");
// Renders a HalfLaurent in t = s^2, using t^(k/2) for odd s-exponents.
std::string to_string_t(const HalfLaurent& p);

// Parses the rendering grammar; '*' between coefficient and variable and
// whitespace are optional.
IntLaurent parse_int_laurent(std::string_view text, char var = 'x');

// Embeds a polynomial in t into s = t^(1/2) (doubles exponents).
HalfLaurent from_t(const IntLaurent& p);
// Inverse of from_t; throws InvalidArgument on an odd s-exponent.
IntLaurent to_t(const HalfLaurent& p);

// S_{-1} = 0, S_0 = 1, S_k = x S_{k-1} - S_{k-2}. Requires k >= -1.
IntLaurent chebyshev_S(int k);

// sigma_n = (alpha^n - beta^n)/(alpha - beta) with alpha + beta = x,
// alpha*beta = 1, extended by sigma_0 = 0 and sigma_{-n} = -sigma_n.
IntLaurent sigma(int n);

// Substitutes s = i (that is, t = -1).
GaussianInt eval_at_s_equals_i(const HalfLaurent& p);

// (max s-exponent - min s-exponent) / 2, the breadth measured in t.
Rational breadth_t(const HalfLaurent& p);

}  // namespace qalt
