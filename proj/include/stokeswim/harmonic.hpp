#ifndef STOKESWIM_HARMONIC_HPP
#define STOKESWIM_HARMONIC_HPP

#include <cmath>
#include <utility>

// First-harmonic time representation: a field A(x) cos t + B(x) sin t is
// stored as the pair (A, B) of steady parts.  Products of two first
// harmonics time-average to (A.A' + B.B')/2 for any bilinear combiner, which
// is the only averaging rule the thrust functionals need.

namespace stokeswim {

template <class V>
struct Harmonic {
  V cos_part{};
  V sin_part{};

  /// d/dt maps (A, B) to (B, -A).
  Harmonic time_derivative() const { return {sin_part, -cos_part}; }

  /// Value at time t.
  V at(double t) const { return cos_part * std::cos(t) + sin_part * std::sin(t); }

  Harmonic operator+(const Harmonic& o) const {
    return {cos_part + o.cos_part, sin_part + o.sin_part};
  }
  Harmonic operator-(const Harmonic& o) const {
    return {cos_part - o.cos_part, sin_part - o.sin_part};
  }
};

/// Time average over one period of combine(f(t), g(t)) for first harmonics
/// f, g and any bilinear combiner (product, dot, outer, ddot, ...).
template <class U, class V, class Combine>
auto average_product(const Harmonic<U>& f, const Harmonic<V>& g, Combine&& combine) {
  auto cc = combine(f.cos_part, g.cos_part);
  auto ss = combine(f.sin_part, g.sin_part);
  return (cc + ss) * 0.5;
}

}  // namespace stokeswim

#endif
