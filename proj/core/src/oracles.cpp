#include "radialgeo/oracles.hpp"

#include <Eigen/Dense>

namespace radialgeo::oracles {

namespace {

using Mat3 = Eigen::Matrix3d;

Mat3 metric_matrix(const ConformalFactor& factor, const Vec3& x) {
  Mat3 g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g(a, b) = metric_inner(factor, x, Vec3::Unit(a), Vec3::Unit(b));
  return g;
}

Vec3 position(const SurfaceSpec& spec, double u, double v) { return to_surface_jet(spec.evaluate(u, v)).X; }

}  // namespace

ChristoffelTable fd_christoffel(const ConformalFactor& factor, const Vec3& x, double step) {
  // dg[l](a, b) = d g_ab / dx_l
  std::array<Mat3, 3> dg;
  for (int l = 0; l < 3; ++l) {
    const Vec3 dx = step * Vec3::Unit(l);
    dg[l] = (metric_matrix(factor, x + dx) - metric_matrix(factor, x - dx)) / (2.0 * step);
  }
  const Mat3 ginv = metric_matrix(factor, x).inverse();
  ChristoffelTable table;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double sum = 0.0;
        for (int l = 0; l < 3; ++l) sum += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        table.gamma[k][i][j] = 0.5 * sum;
      }
  return table;
}

double fd_sectional_curvature(const ConformalFactor& factor, const Vec3& x, int i, int j, double metric_step,
                              double christoffel_step) {
  const ChristoffelTable gamma = fd_christoffel(factor, x, metric_step);
  // dgamma[m] = d Gamma / dx_m
  std::array<ChristoffelTable, 3> dgamma;
  for (int m = 0; m < 3; ++m) {
    const Vec3 dx = christoffel_step * Vec3::Unit(m);
    const ChristoffelTable plus = fd_christoffel(factor, x + dx, metric_step);
    const ChristoffelTable minus = fd_christoffel(factor, x - dx, metric_step);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          dgamma[m].gamma[a][b][c] = (plus.gamma[a][b][c] - minus.gamma[a][b][c]) / (2.0 * christoffel_step);
  }
  // R(d_i, d_j) d_j = R^l_{jij} d_l with
  // R^l_{kij} = d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im} G^m_{jk} - G^l_{jm} G^m_{ik}.
  const int k = j;
  Vec3 r = Vec3::Zero();
  for (int l = 0; l < 3; ++l) {
    double value = dgamma[i].gamma[l][j][k] - dgamma[j].gamma[l][i][k];
    for (int m = 0; m < 3; ++m)
      value += gamma.gamma[l][i][m] * gamma.gamma[m][j][k] - gamma.gamma[l][j][m] * gamma.gamma[m][i][k];
    r[l] = value;
  }
  const Mat3 g = metric_matrix(factor, x);
  const double numerator = (g * r)[i];
  return numerator / (g(i, i) * g(j, j) - g(i, j) * g(i, j));
}

std::pair<Vec3, Vec3> fd_first_partials(const SurfaceSpec& spec, double u, double v, double step) {
  return {(position(spec, u + step, v) - position(spec, u - step, v)) / (2.0 * step),
          (position(spec, u, v + step) - position(spec, u, v - step)) / (2.0 * step)};
}

std::array<Vec3, 3> fd_second_partials(const SurfaceSpec& spec, double u, double v, double step) {
  const Vec3 c = position(spec, u, v);
  const double h2 = step * step;
  return {(position(spec, u + step, v) - 2.0 * c + position(spec, u - step, v)) / h2,
          (position(spec, u + step, v + step) - position(spec, u + step, v - step) -
           position(spec, u - step, v + step) + position(spec, u - step, v - step)) /
              (4.0 * h2),
          (position(spec, u, v + step) - 2.0 * c + position(spec, u, v - step)) / h2};
}

}  // namespace radialgeo::oracles
