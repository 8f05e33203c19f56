#pragma once

#include <array>
#include <cstddef>

namespace radialgeo::ode {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
State<N> axpy(const State<N>& y, double a, const State<N>& k) {
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * k[i];
  return out;
}

// One classical fourth-order Runge-Kutta step of y' = f(s, y).
template <std::size_t N, typename Rhs>
State<N> rk4_step(const Rhs& f, double s, const State<N>& y, double h) {
  const State<N> k1 = f(s, y);
  const State<N> k2 = f(s + 0.5 * h, axpy(y, 0.5 * h, k1));
  const State<N> k3 = f(s + 0.5 * h, axpy(y, 0.5 * h, k2));
  const State<N> k4 = f(s + h, axpy(y, h, k3));
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace radialgeo::ode
