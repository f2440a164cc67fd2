#include "lfl/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lfl/error.hpp"

namespace lfl {

double digamma(double x) {
  if (!(x > 0.0)) throw Error(Errc::NonPositive, "digamma argument " + std::to_string(x));
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^2n)
  static constexpr std::array<double, 7> kCoef = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = kCoef.rbegin(); it != kCoef.rend(); ++it) series = (series + *it) * inv2;
  return shift + std::log(x) - 0.5 / x - series;
}

double hurwitz_zeta(double s, double x) {
  if (s == 1.0) throw Error(Errc::PoleAtOne, "hurwitz_zeta at s = 1");
  if (!(x > 0.0) || !(s > 0.0)) {
    throw Error(Errc::NonPositive, "hurwitz_zeta(s=" + std::to_string(s) + ", x=" + std::to_string(x) + ")");
  }
  constexpr int kDirect = 50;
  // B_2j / (2j)! for j = 1..5.
  static constexpr std::array<double, 5> kBernoulliOverFactorial = {
      1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0};

  double direct = 0.0;
  for (int n = kDirect - 1; n >= 0; --n) direct += std::pow(n + x, -s);

  const double a = kDirect + x;
  const double a_pow = std::pow(a, -s);
  double tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;
  // Term j: B_2j/(2j)! * s (s+1) ... (s+2j-2) * a^(-s-2j+1)
  double rising = s;         // s (s+1) ... (s+2j-2)
  double power = a_pow / a;  // a^(-s-2j+1)
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    tail += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= a * a;
  }
  return direct + tail;
}

double expint_e1(double y) {
  if (!(y > 0.0)) throw Error(Errc::NonPositive, "E1 argument " + std::to_string(y));
  return -std::expint(-y);
}

}  // namespace lfl
