/*
   Copyright 2026 The otcohom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Scalar types shared by every module: exact rationals (GMP), variable
// precision binary floats (MPFR), a small complex type templated on the real
// scalar, and complex discs ("balls") used for certified evaluation.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace otcohom {

namespace mp = boost::multiprecision;

using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<long long>;

/// Parses "p/q", "p" or a decimal literal such as "-0.25" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

inline int digits10_for_bits(int bits) {
  return static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 2;
}

inline int precision_bits(const BigFloat& x) {
  return static_cast<int>(mpfr_get_prec(x.backend().data()));
}

// Sets the MPFR working precision for the enclosing scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Upper bound on the relative rounding error of a value of this type.
inline double unit_roundoff(double) { return 0x1p-52; }
inline BigFloat unit_roundoff(const BigFloat& x) {
  return ldexp(BigFloat(1), 1 - precision_bits(x));
}

template <typename Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex&, const Complex&) = default;
};

template <typename Real>
Complex<Real> conj(const Complex<Real>& z) { return {z.re, -z.im}; }

template <typename Real>
Real norm2(const Complex<Real>& z) { return z.re * z.re + z.im * z.im; }

template <typename Real>
Real abs(const Complex<Real>& z) {
  using std::sqrt;
  return sqrt(norm2(z));
}

template <typename Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

/// Closed disc in the complex plane: the true value lies within `rad` of `mid`.
template <typename Real>
struct Ball {
  Complex<Real> mid;
  Real rad{0};
};

template <typename Real>
Ball<Real> operator+(const Ball<Real>& a, const Ball<Real>& b) {
  Ball<Real> r{a.mid + b.mid, a.rad + b.rad};
  r.rad += abs(r.mid) * unit_roundoff(r.mid.re);
  return r;
}

template <typename Real>
Ball<Real> operator*(const Ball<Real>& a, const Ball<Real>& b) {
  Ball<Real> r{a.mid * b.mid, abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad};
  r.rad += 4 * abs(r.mid) * unit_roundoff(r.mid.re);
  return r;
}

template <typename Real>
Ball<Real> conj(const Ball<Real>& b) { return {conj(b.mid), b.rad}; }

/// Double-precision disc consumed by the model and character layers.
struct ComplexBall {
  std::complex<double> mid;
  double rad = 0.0;
};

inline ComplexBall to_complex_ball(const Ball<BigFloat>& b) {
  std::complex<double> mid(b.mid.re.convert_to<double>(), b.mid.im.convert_to<double>());
  double rad = b.rad.convert_to<double>();
  // one ulp per component for the rounding to double
  rad = std::nextafter(rad + 2 * std::abs(mid) * 0x1p-53, HUGE_VAL);
  return {mid, rad};
}

inline ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  double rad = std::abs(a.mid) * b.rad + std::abs(b.mid) * a.rad + a.rad * b.rad;
  std::complex<double> mid = a.mid * b.mid;
  return {mid, rad + 4 * std::abs(mid) * 0x1p-53};
}

inline ComplexBall inverse(const ComplexBall& a) {
  double m = std::abs(a.mid);
  std::complex<double> mid = 1.0 / a.mid;
  // |1/z - 1/w| <= r / (|w| (|w| - r))
  double rad = (m > a.rad) ? a.rad / (m * (m - a.rad)) : HUGE_VAL;
  return {mid, rad + 4 * std::abs(mid) * 0x1p-53};
}

inline ComplexBall conj(const ComplexBall& a) { return {std::conj(a.mid), a.rad}; }

}  // namespace otcohom
