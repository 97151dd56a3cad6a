#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gvz {

using Rational = mpq_class;

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

/// An exact element of Q(zeta_e), stored in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1) modulo the e-th cyclotomic polynomial.
///
/// Binary operations require equal conductors; use embed() to move a value
/// into a larger field first.
class Cyclotomic {
 public:
  /// Zero in Q.
  Cyclotomic() : Cyclotomic(1) {}
  /// Zero in Q(zeta_e).
  explicit Cyclotomic(int conductor);

  static Cyclotomic rational(const Rational& value, int conductor = 1);
  /// zeta_e^(k mod e).
  static Cyclotomic root_of_unity(long long k, int e);
  /// Builds sum_k counts[k] * zeta_e^k for exponents 0..e-1.
  static Cyclotomic from_exponent_counts(const std::vector<long long>& counts, int e);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Rational& scalar) const;
  Cyclotomic& operator+=(const Cyclotomic& other);

  /// Exact, coefficient-wise. Conductors must match.
  bool operator==(const Cyclotomic& other) const;

  /// Image under zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// z * conj(z).
  Cyclotomic abs_squared() const;
  std::optional<Rational> as_rational() const;
  bool is_zero() const;

  /// Re-embeds into Q(zeta_target); the current conductor must divide target.
  Cyclotomic embed(int target) const;

  /// "a0 + a1*z^1 + ..." with z a primitive e-th root of unity.
  std::string to_string() const;
  /// Floating-point value under zeta_e = exp(2*pi*i/e). Display only.
  std::complex<double> approximate() const;

 private:
  void require_same_field(const Cyclotomic& other) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& scalar, const Cyclotomic& z) { return z * scalar; }

/// Lexicographic order on (conductor, coefficients); used for canonical sorting.
bool lexicographically_less(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace gvz
