// Copyright 2026 The mvindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "mvindep/rng.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

/// The synthetic dependence structures. Every generator is deterministic
/// given (kind, n, p, kappa, seed).
enum class SimKind {
  linear,
  exponential,
  cubic,
  joint_normal,
  step_function,
  quadratic,
  w_shape,
  spiral,
  uncorrelated_bernoulli,
  logarithmic,
  fourth_root,
  sine_4pi,
  sine_16pi,
  square,
  diamond,
  two_parabolas,
  circle,
  ellipse,
  multiplicative_noise,
  multimodal_independence,
};

struct SimSpec {
  SimKind kind = SimKind::linear;
  int n = 100;
  int p = 1;
  double kappa = 1.0;  // noise level; some generators carry fixed noise instead
  std::uint64_t seed = 0;
};

struct SimulatedPair {
  Matrix x;
  Matrix y;
  SimSpec spec;
};

struct SimInfo {
  SimKind kind;
  std::string_view name;
  bool y_is_multivariate;  // y signature R^p rather than R
};

inline const std::vector<SimInfo>& list_simulations() {
  static const std::vector<SimInfo> infos = {
      {SimKind::linear, "linear", false},
      {SimKind::exponential, "exponential", false},
      {SimKind::cubic, "cubic", false},
      {SimKind::joint_normal, "joint_normal", true},
      {SimKind::step_function, "step_function", false},
      {SimKind::quadratic, "quadratic", false},
      {SimKind::w_shape, "w_shape", false},
      {SimKind::spiral, "spiral", false},
      {SimKind::uncorrelated_bernoulli, "uncorrelated_bernoulli", false},
      {SimKind::logarithmic, "logarithmic", true},
      {SimKind::fourth_root, "fourth_root", false},
      {SimKind::sine_4pi, "sine_4pi", true},
      {SimKind::sine_16pi, "sine_16pi", true},
      {SimKind::square, "square", true},
      {SimKind::diamond, "diamond", true},
      {SimKind::two_parabolas, "two_parabolas", false},
      {SimKind::circle, "circle", false},
      {SimKind::ellipse, "ellipse", false},
      {SimKind::multiplicative_noise, "multiplicative_noise", true},
      {SimKind::multimodal_independence, "multimodal_independence", false},
  };
  return infos;
}

inline std::string simulation_names_joined(const char* sep = ", ") {
  std::string out;
  for (const SimInfo& info : list_simulations()) {
    if (!out.empty()) out += sep;
    out += info.name;
  }
  return out;
}

inline const SimInfo& find_simulation(SimKind kind) {
  for (const SimInfo& info : list_simulations())
    if (info.kind == kind) return info;
  throw Error(ErrorKind::spec_error, "unknown simulation kind");
}

inline const SimInfo& find_simulation(std::string_view name) {
  for (const SimInfo& info : list_simulations())
    if (info.name == name) return info;
  throw Error(ErrorKind::spec_error,
              "unknown simulation '" + std::string(name) +
                  "'; valid simulations: " + simulation_names_joined());
}

/// Decaying mixing weights w_d = 1/d, d = 1..p.
inline Vector decay_weights(int p) {
  Vector w(p);
  for (int d = 0; d < p; ++d) w(d) = 1.0 / static_cast<double>(d + 1);
  return w;
}

namespace detail {

// Block fills are row-major (sample by sample, dimension within sample), and
// each generator draws its blocks in a fixed documented order: the block that
// produces x (or the latent U/V that x is derived from) first, remaining
// auxiliary variables next, noise last. That order is what makes streams
// reproducible by other implementations sharing the PRNG.

inline Matrix uniform_block(Rng& rng, int n, int p, double a, double b) {
  Matrix m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = rng.uniform(a, b);
  return m;
}

inline Matrix normal_block(Rng& rng, int n, int p) {
  Matrix m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = rng.normal();
  return m;
}

inline Matrix bernoulli_block(Rng& rng, int n, int p) {
  Matrix m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = rng.bernoulli_half();
  return m;
}

}  // namespace detail

/// Draws one (x, y) pair. Generator recipes, with w the decaying weights,
/// eps standard normal unless stated, and U(a,b) uniform:
///
///   linear          x ~ U(-1,1)^p;            y = x w + kappa eps
///   exponential     x ~ U(0,3)^p;             y = exp(x w) + 10 kappa eps
///   cubic           x ~ U(-1,1)^p; t = x w - 1/3;
///                   y = 128 t^3 + 48 t^2 - 12 t + 80 kappa eps
///   joint_normal    (x, y) ~ N(0, [I, rho J; rho J, (1+kappa/2) I]),
///                   rho = 1/(2p)
///   step_function   x ~ U(-1,1)^p;            y = 1{x w > 0} + eps
///   quadratic       x ~ U(-1,1)^p;            y = (x w)^2 + kappa eps / 2
///   w_shape         x, u ~ U(-1,1)^p;
///                   y = 4 [((x w)^2 - 1/2)^2 + u w / 500] + kappa eps / 2
///   spiral          u ~ U(0,5); x_d = u sin(pi u) cos^d(pi u) (d < p),
///                   x_p = u cos^p(pi u);      y = u sin(pi u) + 0.4 p eps
///   uncorrelated_bernoulli
///                   x ~ B(1/2)^p + eps1 / 2; u ~ B(1/2);
///                   y = (2u - 1) x w + eps2 / 2
///   logarithmic     x ~ N(0, I_p);  y_d = 2 log2 |x_d| + 3 kappa eps_d
///   fourth_root     x ~ U(-1,1)^p;  y = |x w|^(1/4) + kappa eps / 4
///   sine_4pi        u ~ U(-1,1), v ~ N(0,1)^p; x_d = u + 0.02 p v_d;
///                   y_d = sin(4 pi x_d) + kappa eps_d
///   sine_16pi       same with theta = 16 pi and noise kappa eps_d / 2
///   square          u, v ~ U(-1,1), theta = -pi/8;
///                   x_d = u cos(theta) + v sin(theta) + 0.05 p eps_d;
///                   y_d = -u sin(theta) + v cos(theta)
///   diamond         same with theta = pi/4
///   two_parabolas   x ~ U(-1,1)^p; u ~ B(1/2); eps ~ U(0,1);
///                   y = ((x w)^2 + 2 kappa eps) (u - 1/2)
///   circle          u ~ U(-1,1)^p, r = 1;
///                   x_d = r (sin(pi u_{d+1}) prod_{j<=d} cos(pi u_j)
///                         + 0.4 eps_d) for d < p,
///                   x_p = r (prod_{j<=p} cos(pi u_j) + 0.4 eps_p);
///                   y = sin(pi u_1)
///   ellipse         same with r = 5
///   multiplicative_noise
///                   x ~ N(0, I_p); u ~ N(0, I_p); y_d = u_d x_d
///   multimodal_independence
///                   u, v ~ N(0,1), u', v' ~ B(1/2) (u p-dim, v scalar);
///                   x = u/3 + 2u' - 1; y = v/3 + 2v' - 1
inline SimulatedPair simulate(const SimSpec& spec) {
  require(spec.n >= 3, ErrorKind::spec_error, "simulation needs n >= 3");
  require(spec.p >= 1, ErrorKind::spec_error, "simulation needs p >= 1");
  require(spec.kappa >= 0.0, ErrorKind::spec_error, "kappa must be >= 0");

  const int n = spec.n;
  const int p = spec.p;
  const double kappa = spec.kappa;
  const Vector w = decay_weights(p);
  constexpr double pi = std::numbers::pi;
  Rng rng(spec.seed);
  Matrix x, y;

  switch (spec.kind) {
    case SimKind::linear: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      y = x * w + kappa * eps;
      break;
    }
    case SimKind::exponential: {
      x = detail::uniform_block(rng, n, p, 0.0, 3.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      y = (x * w).array().exp().matrix() + 10.0 * kappa * eps;
      break;
    }
    case SimKind::cubic: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      const Eigen::ArrayXd t = (x * w).array() - 1.0 / 3.0;
      y = (128.0 * t.pow(3) + 48.0 * t.pow(2) - 12.0 * t).matrix() +
          80.0 * kappa * eps;
      break;
    }
    case SimKind::joint_normal: {
      const double rho = 1.0 / (2.0 * p);
      Matrix sigma = Matrix::Identity(2 * p, 2 * p);
      sigma.bottomRightCorner(p, p) *= 1.0 + 0.5 * kappa;
      sigma.topRightCorner(p, p).setConstant(rho);
      sigma.bottomLeftCorner(p, p).setConstant(rho);
      const Eigen::LLT<Matrix> llt(sigma);
      require(llt.info() == Eigen::Success, ErrorKind::numerical_error,
              "joint-normal covariance is not positive definite");
      const Matrix z = detail::normal_block(rng, n, 2 * p);
      const Matrix xy = z * llt.matrixL().transpose();
      x = xy.leftCols(p);
      y = xy.rightCols(p);
      break;
    }
    case SimKind::step_function: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      y = ((x * w).array() > 0.0).cast<double>().matrix() + eps;
      break;
    }
    case SimKind::quadratic: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      y = (x * w).array().square().matrix() + 0.5 * kappa * eps;
      break;
    }
    case SimKind::w_shape: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix u = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      const Eigen::ArrayXd base = (x * w).array().square() - 0.5;
      y = (4.0 * (base.square() + (u * w).array() / 500.0)).matrix() +
          0.5 * kappa * eps;
      break;
    }
    case SimKind::spiral: {
      const Matrix u = detail::uniform_block(rng, n, 1, 0.0, 5.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      x.resize(n, p);
      y.resize(n, 1);
      for (int i = 0; i < n; ++i) {
        const double ui = u(i, 0);
        const double c = std::cos(pi * ui);
        const double s = std::sin(pi * ui);
        for (int d = 1; d < p; ++d)
          x(i, d - 1) = ui * s * std::pow(c, d);
        x(i, p - 1) = ui * std::pow(c, p);
        y(i, 0) = ui * s + 0.4 * p * eps(i, 0);
      }
      break;
    }
    case SimKind::uncorrelated_bernoulli: {
      x = detail::bernoulli_block(rng, n, p);
      const Matrix u = detail::bernoulli_block(rng, n, 1);
      const Matrix eps1 = detail::normal_block(rng, n, p);
      const Matrix eps2 = detail::normal_block(rng, n, 1);
      x += 0.5 * eps1;
      y = ((2.0 * u.array() - 1.0) * (x * w).array()).matrix() + 0.5 * eps2;
      break;
    }
    case SimKind::logarithmic: {
      x = detail::normal_block(rng, n, p);
      const Matrix eps = detail::normal_block(rng, n, p);
      y = (2.0 * x.array().abs().log() / std::numbers::ln2).matrix() +
          3.0 * kappa * eps;
      break;
    }
    case SimKind::fourth_root: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, 1);
      y = (x * w).array().abs().pow(0.25).matrix() + 0.25 * kappa * eps;
      break;
    }
    case SimKind::sine_4pi:
    case SimKind::sine_16pi: {
      const double theta = spec.kind == SimKind::sine_4pi ? 4.0 * pi : 16.0 * pi;
      const double noise = spec.kind == SimKind::sine_4pi ? kappa : 0.5 * kappa;
      const Matrix u = detail::uniform_block(rng, n, 1, -1.0, 1.0);
      const Matrix v = detail::normal_block(rng, n, p);
      const Matrix eps = detail::normal_block(rng, n, p);
      x = (0.02 * p * v).colwise() + u.col(0);
      y = (theta * x.array()).sin().matrix() + noise * eps;
      break;
    }
    case SimKind::square:
    case SimKind::diamond: {
      const double theta = spec.kind == SimKind::square ? -pi / 8.0 : pi / 4.0;
      const Matrix u = detail::uniform_block(rng, n, 1, -1.0, 1.0);
      const Matrix v = detail::uniform_block(rng, n, 1, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, p);
      const Vector xc = std::cos(theta) * u.col(0) + std::sin(theta) * v.col(0);
      const Vector yc = -std::sin(theta) * u.col(0) + std::cos(theta) * v.col(0);
      x = (0.05 * p * eps).colwise() + xc;
      y = Matrix(n, p);
      y.colwise() = yc;
      break;
    }
    case SimKind::two_parabolas: {
      x = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix u = detail::bernoulli_block(rng, n, 1);
      const Matrix eps = detail::uniform_block(rng, n, 1, 0.0, 1.0);
      y = (((x * w).array().square() + 2.0 * kappa * eps.array()) *
           (u.array() - 0.5))
              .matrix();
      break;
    }
    case SimKind::circle:
    case SimKind::ellipse: {
      const double r = spec.kind == SimKind::circle ? 1.0 : 5.0;
      const Matrix u = detail::uniform_block(rng, n, p, -1.0, 1.0);
      const Matrix eps = detail::normal_block(rng, n, p);
      x.resize(n, p);
      y.resize(n, 1);
      for (int i = 0; i < n; ++i) {
        double cos_prod = 1.0;
        for (int d = 1; d < p; ++d) {
          cos_prod *= std::cos(pi * u(i, d - 1));
          x(i, d - 1) =
              r * (std::sin(pi * u(i, d)) * cos_prod + 0.4 * eps(i, d - 1));
        }
        cos_prod *= std::cos(pi * u(i, p - 1));
        x(i, p - 1) = r * (cos_prod + 0.4 * eps(i, p - 1));
        y(i, 0) = std::sin(pi * u(i, 0));
      }
      break;
    }
    case SimKind::multiplicative_noise: {
      x = detail::normal_block(rng, n, p);
      const Matrix u = detail::normal_block(rng, n, p);
      y = u.cwiseProduct(x);
      break;
    }
    case SimKind::multimodal_independence: {
      const Matrix u = detail::normal_block(rng, n, p);
      const Matrix up = detail::bernoulli_block(rng, n, p);
      const Matrix v = detail::normal_block(rng, n, 1);
      const Matrix vp = detail::bernoulli_block(rng, n, 1);
      x = u / 3.0 + 2.0 * up - Matrix::Ones(n, p);
      y = v / 3.0 + 2.0 * vp - Matrix::Ones(n, 1);
      break;
    }
  }

  require(x.allFinite() && y.allFinite(), ErrorKind::numerical_error,
          "simulation produced non-finite values");
  return {std::move(x), std::move(y), spec};
}

}  // namespace mvindep
