#pragma once

// Dirichlet characters modulo p, realised through the discrete-log table:
// chi_j(g^t) = e(j t / (p - 1)) with e(x) = exp(2 pi i x).

#include <complex>
#include <cstdint>
#include <vector>

#include "lfl/modular_core.hpp"

namespace lfl {

using cplx = std::complex<double>;

struct CharacterId {
  u64 p = 0;
  u64 j = 0;

  bool principal() const noexcept { return j == 0; }
  /// chi(-1) = (-1)^j.
  bool even() const noexcept { return j % 2 == 0; }
  CharacterId conjugate() const noexcept { return {p, j == 0 ? 0 : p - 1 - j}; }

  friend bool operator==(const CharacterId&, const CharacterId&) = default;
};

/// e(k / n), exact at multiples of n/4 and exactly conjugate-symmetric
/// (unit_root(n - k, n) == conj(unit_root(k, n))).
cplx unit_root(u64 k, u64 n);

/// The m = (p-1)/d characters trivial on G_m: j = d*u, u = 0..m-1.
/// Throws NotADivisor.
std::vector<CharacterId> char_group(const PrimeContext& ctx, u64 d);

/// Integer phase j * dlog(x) mod (p - 1). Throws ZeroResidue.
u64 char_phase(const PrimeContext& ctx, u64 j, u64 x);

/// chi_j(x). Throws ZeroResidue.
cplx eval_char(const PrimeContext& ctx, u64 j, u64 x);

struct OrthogonalityCheck {
  cplx sum;          ///< sum over chi in X_{p,m}, chi(-1) = (-1)^a, of chi(r) conj(chi(s))
  double predicted;  ///< (m/2) (xi_m(r/s) + (-1)^a xi_m(-r/s))
};

/// Throws NotADivisor, EvenOrder (d even), ZeroResidue (p | rs).
OrthogonalityCheck orthogonality_sum(const PrimeContext& ctx, u64 d, int a, u64 r, u64 s);

}  // namespace lfl
