#pragma once

// Cyclotomic polynomials and surveys over ranges of primes: the exceptional
// set of primes having an element of small order with a small rho, and the
// moment deviations over the remaining primes.

#include <cstdint>
#include <optional>
#include <vector>

#include "lfl/arith.hpp"

namespace lfl {

struct CyclotomicPoly {
  u64 d = 0;
  std::vector<i64> coeffs;  ///< a_0 .. a_phi(d)

  u64 degree() const noexcept { return coeffs.size() - 1; }
  /// sum |a_j|
  u64 l1_norm() const noexcept;
  /// sqrt(phi(d) + 1) * 2^phi(d), the explicit form of the coefficient bound.
  double norm_bound() const;
  /// Phi_d(x) mod p.
  u64 eval_mod(u64 x, u64 p) const;
};

/// Phi_d = (X^d - 1) / prod_{e | d, e < d} Phi_e by exact division.
/// Throws OutOfRange (d = 0 or phi(d) > 64).
CyclotomicPoly cyclotomic_poly(u64 d);

struct SurveyWitness {
  u64 lambda = 0;
  u64 order = 0;
  u64 rho = 0;
  u64 r = 0;
  u64 s = 0;
};

struct SurveyEntry {
  u64 p = 0;
  std::optional<SurveyWitness> witness;  ///< present iff p is exceptional
};

struct SurveyReport {
  u64 Qlo = 0;
  u64 Qhi = 0;
  u64 D = 0;
  u64 R = 0;
  std::vector<u64> exceptional;   ///< ascending
  u64 scanned = 0;
  double bound_value = 0.0;       ///< D^2 R (log R)^2 / log D
  std::vector<SurveyEntry> entries;  ///< every scanned prime, ascending
};

/// Primes p in [Qlo, Qhi] with some lambda of order e, 3 <= e < D, and
/// rho(lambda, p) < R. The recorded witness has the smallest such order and,
/// within it, the smallest lambda.
/// Throws EmptyRange (Qlo < 2 or Qlo > Qhi), OutOfRange (D < 3 or R < 1).
SurveyReport exceptional_set(u64 Qlo, u64 Qhi, u64 D, u64 R);

struct AlmostAllRow {
  u64 p = 0;
  u64 d = 0;
  u64 m = 0;
  double moment_all = 0.0;
  double moment_odd = 0.0;
  double deviation_all = 0.0;  ///< M_2k - a(k)
  double deviation_odd = 0.0;  ///< M^-_2k - a(k)
};

struct AlmostAllReport {
  u64 Q = 0;
  u64 D = 0;
  u64 R = 0;
  unsigned k = 0;
  double main_term = 0.0;  ///< a(k)
  SurveyReport survey;     ///< over [Q, 2Q]
  std::vector<AlmostAllRow> rows;
  double max_abs_deviation = 0.0;
  double median_abs_deviation = 0.0;
  double max_abs_deviation_odd = 0.0;
  double median_abs_deviation_odd = 0.0;
};

/// For every non-exceptional prime p in [Q, 2Q] and every odd d with
/// 3 <= d <= D, d | p - 1, the moment deviations from a(k).
/// Throws OutOfRange (Q < 10, D < 3, R < 1, k = 0).
AlmostAllReport almost_all_experiment(u64 Q, u64 D, u64 R, unsigned k);

}  // namespace lfl
