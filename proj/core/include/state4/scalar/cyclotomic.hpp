#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "state4/scalar/rational.hpp"

namespace state4 {

/// Element of Q(ζ_N), stored in canonical form: coefficients of
/// 1, ζ_N, ..., ζ_N^{φ(N)-1} modulo Φ_N, with N the least conductor that
/// supports the value. Zero and all rationals have conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT
  Cyclotomic(Rational v) : conductor_(1), coeffs_{std::move(v)} {}  // NOLINT

  /// ζ_n^k for any integer k.
  static Cyclotomic zeta(int n, long k = 1);
  /// Value with the given coefficients of powers of ζ_n; coefficient lists
  /// of any length are accepted and reduced.
  static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);
  /// Parses the printed form ("1/2 + 1/2*z4", "-z3^2", "zeta(8,3)", "5/6").
  /// Throws ParseError.
  static Cyclotomic parse(std::string_view text);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0].is_zero(); }
  bool is_one() const { return conductor_ == 1 && coeffs_[0].is_one(); }
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_part() const { return coeffs_[0]; }

  /// If the value equals q·ζ_n^k for rational q and n | `order`, returns
  /// (q, k mod order). `order` must be a multiple of the conductor.
  std::optional<std::pair<Rational, long>> as_monomial(int order) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  /// Complex conjugate (ζ ↦ ζ^{-1}).
  Cyclotomic conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Cyclotomic(int n, std::vector<Rational> coeffs, bool canonical);
  void canonicalize();

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
/// Throws DivisionByZero when a = 0.
inline Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inverse(); }
inline std::pair<double, double> cyc_to_complex(const Cyclotomic& a) {
  auto z = a.to_complex();
  return {z.real(), z.imag()};
}

/// Euler's totient.
int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

}  // namespace state4
