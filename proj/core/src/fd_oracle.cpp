#include "equiform/fd_oracle.hpp"

#include <array>
#include <cmath>

namespace equiform {

namespace {

using Vec = std::array<double, 7>;
using Mat = std::array<std::array<double, 3>, 3>;
using Gamma = std::array<Mat, 3>;  // Gamma[l][i][j]
using Point = std::array<double, 3>;

struct Oracle {
  const MotionParams<double>& p;
  double h;

  // (s' I + Omega) applied to v, embedded in R^7.
  Vec rate(const Vec& v) const {
    const auto om = p.rotation_rate_matrix();
    Vec out{};
    for (int r = 0; r < 7; ++r) {
      double acc = p.s_prime * v[r];
      for (int c = 0; c < 7; ++c) acc += om[r][c] * v[c];
      out[r] = acc;
    }
    return out;
  }

  Mat metric(const Point& x) const {
    const double t = x[0], th = x[1], ph = x[2];
    const Vec s{std::cos(th) * std::cos(ph), std::sin(th) * std::cos(ph), std::sin(ph), 0, 0, 0, 0};
    const Vec s_th{-std::sin(th) * std::cos(ph), std::cos(th) * std::cos(ph), 0, 0, 0, 0, 0};
    const Vec s_ph{-std::cos(th) * std::sin(ph), -std::sin(th) * std::sin(ph), std::cos(ph), 0, 0, 0, 0};
    const Vec rs = rate(s), r_th = rate(s_th), r_ph = rate(s_ph);
    std::array<Vec, 3> tan{};
    for (int k = 0; k < 7; ++k) {
      tan[0][k] = p.d_prime[k] + rs[k];
      tan[1][k] = s_th[k] + t * r_th[k];
      tan[2][k] = s_ph[k] + t * r_ph[k];
    }
    Mat g{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 7; ++k) acc += tan[i][k] * tan[j][k];
        g[i][j] = acc;
      }
    return g;
  }

  static Mat inverse(const Mat& g) {
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    Mat inv{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        inv[i][j] = (g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0]) / det;
      }
    return inv;
  }

  static Point shifted(Point x, int axis, double d) {
    x[static_cast<std::size_t>(axis)] += d;
    return x;
  }

  Gamma christoffel(const Point& x) const {
    std::array<Mat, 3> dg{};  // dg[m][i][j] = d g_ij / d x_m
    for (int m = 0; m < 3; ++m) {
      const Mat gp = metric(shifted(x, m, h));
      const Mat gm = metric(shifted(x, m, -h));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dg[m][i][j] = (gp[i][j] - gm[i][j]) / (2 * h);
    }
    const Mat inv = inverse(metric(x));
    Gamma G{};
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double acc = 0.0;
          for (int m = 0; m < 3; ++m) acc += inv[l][m] * (dg[j][i][m] + dg[i][j][m] - dg[m][i][j]);
          G[l][i][j] = 0.5 * acc;
        }
    return G;
  }

  double curvature(const Point& x) const {
    std::array<Gamma, 3> dG{};  // dG[m][l][i][j] = d Gamma^l_ij / d x_m
    for (int m = 0; m < 3; ++m) {
      const Gamma gp = christoffel(shifted(x, m, h));
      const Gamma gm = christoffel(shifted(x, m, -h));
      for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) dG[m][l][i][j] = (gp[l][i][j] - gm[l][i][j]) / (2 * h);
    }
    const Gamma G = christoffel(x);
    const Mat inv = inverse(metric(x));
    double k = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double r = 0.0;
        for (int l = 0; l < 3; ++l) {
          r += dG[l][l][i][j] - dG[j][l][i][l];
          for (int m = 0; m < 3; ++m) r += G[l][i][j] * G[m][l][m] - G[m][i][l] * G[l][j][m];
        }
        k += inv[i][j] * r;
      }
    return k;
  }
};

}  // namespace

double fd_curvature(const MotionParams<double>& p, double theta, double phi, double h,
                    CurvatureSign sign) {
  if (!(h > 0.0)) throw PreconditionError("step h must be positive");
  if (std::abs(std::cos(phi)) <= 10.0 * h) throw PoleOfChartError("too close to the pole of the chart");
  const double k = Oracle{p, h}.curvature({0.0, theta, phi});
  return sign == CurvatureSign::kinematic ? -k : k;
}

}  // namespace equiform
