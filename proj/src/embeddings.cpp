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

#include "otcohom/embeddings.hpp"

#include "otcohom/errors.hpp"

#include <algorithm>
#include <cmath>

namespace otcohom {

namespace {

using BigComplex = Complex<BigFloat>;

struct Evaluation {
  BigComplex value;
  BigComplex derivative;
  BigFloat magnitude_bound;  // sum |a_k| |z|^k, scales the rounding error
};

Evaluation horner(const std::vector<BigFloat>& coeffs, const BigComplex& z) {
  Evaluation e{BigComplex(BigFloat(0)), BigComplex(BigFloat(0)), BigFloat(0)};
  const BigFloat r = abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    e.derivative = e.derivative * z + e.value;
    e.value = e.value * z + BigComplex(*it);
    e.magnitude_bound = e.magnitude_bound * r + abs(*it);
  }
  return e;
}

struct Attempt {
  std::vector<BigComplex> z;
  std::vector<BigFloat> radius;
};

Attempt aberth(const QPoly& f, int bits) {
  const int n = degree(f);
  std::vector<BigFloat> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f) coeffs.emplace_back(c);

  // Fujiwara-style bound for the initial circle.
  BigFloat bound = 0;
  for (int k = 0; k < n; ++k) {
    BigFloat v = pow(abs(coeffs[static_cast<std::size_t>(k)]), BigFloat(1) / BigFloat(n - k));
    if (v > bound) bound = v;
  }
  bound = 2 * bound + 1;

  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  std::vector<BigComplex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigFloat angle = two_pi * k / n + BigFloat(0.4);
    z[static_cast<std::size_t>(k)] = BigComplex(bound * cos(angle), bound * sin(angle));
  }

  const BigFloat stop = ldexp(BigFloat(1), 8 - bits);
  const int max_iterations = 200 + 4 * bits;
  for (int iter = 0; iter < max_iterations; ++iter) {
    BigFloat largest_step = 0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      Evaluation e = horner(coeffs, zk);
      if (e.value == BigComplex(BigFloat(0))) continue;
      BigComplex ratio = e.value / e.derivative;
      BigComplex repulsion(BigFloat(0));
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += BigComplex(BigFloat(1)) / (zk - z[static_cast<std::size_t>(j)]);
      BigComplex step = ratio / (BigComplex(BigFloat(1)) - ratio * repulsion);
      zk -= step;
      BigFloat rel = abs(step) / (1 + abs(zk));
      if (rel > largest_step) largest_step = rel;
    }
    if (largest_step < stop) break;
  }

  Attempt out{z, std::vector<BigFloat>(static_cast<std::size_t>(n))};
  const BigFloat eps = ldexp(BigFloat(1), 1 - bits);
  for (int k = 0; k < n; ++k) {
    const auto& zk = z[static_cast<std::size_t>(k)];
    Evaluation e = horner(coeffs, zk);
    // Conversion of coefficients and Horner rounding both stay below this.
    BigFloat residual = abs(e.value) + 4 * (n + 1) * eps * e.magnitude_bound;
    BigFloat denom = 1;
    for (int j = 0; j < n; ++j)
      if (j != k) denom *= abs(zk - z[static_cast<std::size_t>(j)]);
    BigFloat r = n * residual / denom;
    out.radius[static_cast<std::size_t>(k)] = r * (1 + ldexp(BigFloat(1), 10 - bits));
  }
  return out;
}

enum class Kind { Real, Upper, Lower };

// Returns false when the discs do not certify the required separation.
bool certify(const Attempt& a, int precision, std::vector<Kind>& kinds) {
  const std::size_t n = a.z.size();
  const BigFloat target = ldexp(BigFloat(1), -precision / 2);
  kinds.assign(n, Kind::Real);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.radius[i] < target)) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(abs(a.z[i] - a.z[j]) > a.radius[i] + a.radius[j])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const BigFloat im = abs(a.z[i].im);
    if (im > a.radius[i]) {
      kinds[i] = a.z[i].im > 0 ? Kind::Upper : Kind::Lower;
      continue;
    }
    // The conjugate root lies in the mirrored disc, which is contained in the
    // disc of radius r + 2|Im z| around z; if that meets no other disc the
    // root is its own conjugate.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(abs(a.z[i] - a.z[j]) > a.radius[i] + a.radius[j] + 2 * im)) return false;
    }
    kinds[i] = Kind::Real;
  }
  return true;
}

}  // namespace

EmbeddingSet find_embeddings(const QPoly& f_in, int precision) {
  const QPoly f = trimmed(f_in);
  if (degree(f) < 1 || f.back() != 1) throw Error(ErrorKind::InvalidPolynomial, "polynomial must be monic of positive degree");
  if (degree(monic_gcd(f, derivative(f))) != 0)
    throw Error(ErrorKind::InvalidPolynomial, "polynomial is not squarefree");
  if (precision < 16) precision = 16;

  const int max_bits = std::max(8 * precision, 4096);
  for (int bits = precision + 64; bits <= max_bits; bits *= 2) {
    PrecisionGuard guard(bits);
    Attempt attempt = aberth(f, bits);
    std::vector<Kind> kinds;
    if (!certify(attempt, precision, kinds)) continue;

    std::vector<Ball<BigFloat>> reals, upper;
    std::size_t lower_count = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      Ball<BigFloat> b{attempt.z[i], attempt.radius[i]};
      switch (kinds[i]) {
        case Kind::Real:
          b.rad += abs(b.mid.im);
          b.mid.im = 0;
          reals.push_back(b);
          break;
        case Kind::Upper: upper.push_back(b); break;
        case Kind::Lower: ++lower_count; break;
      }
    }
    if (upper.size() != lower_count) continue;

    std::sort(reals.begin(), reals.end(), [](const auto& a, const auto& b) { return a.mid.re < b.mid.re; });
    std::sort(upper.begin(), upper.end(), [](const auto& a, const auto& b) {
      return a.mid.re != b.mid.re ? a.mid.re < b.mid.re : a.mid.im < b.mid.im;
    });

    EmbeddingSet out;
    out.modulus = f;
    out.s = static_cast<int>(reals.size());
    out.t = static_cast<int>(upper.size());
    out.precision = precision;
    out.working_bits = bits;
    out.roots = reals;
    out.roots.insert(out.roots.end(), upper.begin(), upper.end());
    for (const auto& b : upper) out.roots.push_back(conj(b));

    if (out.s == 0 || out.t == 0)
      throw Error(ErrorKind::WrongSignature, "signature (s, t) = (" + std::to_string(out.s) + ", " +
                                                 std::to_string(out.t) + "); both must be positive");
    return out;
  }
  throw Error(ErrorKind::NonSeparableRoots,
              "root discs could not be separated at up to " + std::to_string(max_bits) + " bits");
}

Ball<BigFloat> evaluate(const FieldElement& a, int index, const EmbeddingSet& embeddings) {
  if (index < 1 || index > embeddings.degree())
    throw Error(ErrorKind::IndexOutOfRange, "embedding index " + std::to_string(index));
  PrecisionGuard guard(embeddings.working_bits);
  const Ball<BigFloat>& root = embeddings.roots[static_cast<std::size_t>(index - 1)];
  const auto& coords = a.coords();
  Ball<BigFloat> acc{BigComplex(BigFloat(0)), BigFloat(0)};
  for (Eigen::Index k = coords.size() - 1; k >= 0; --k) {
    BigFloat c(coords(k));
    Ball<BigFloat> term{BigComplex(c), abs(c) * unit_roundoff(c)};
    acc = acc * root + term;
  }
  const BigFloat limit = ldexp(BigFloat(1), -embeddings.precision / 4) * (1 + abs(acc.mid));
  if (!(acc.rad < limit))
    throw Error(ErrorKind::PrecisionExhausted, "error radius exceeded the precision budget");
  return acc;
}

}  // namespace otcohom
