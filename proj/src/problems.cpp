#include "nmtr/problems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nmtr::problems {

namespace {

Vec constant_start(Eigen::Index n, double v) { return Vec::Constant(n, v); }

Vec alternating_start(Eigen::Index n, double a, double b) {
  Vec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? a : b;
  return x;
}

// ---- two-dimensional benchmark problems ----

Problem make_ncr(const char* name, double s1, double s2) {
  Problem p;
  p.name = name;
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double a = x[0] - 1.0, b = x[1] - 2.0 * x[0] * x[0] + 1.0;
    return 0.25 * a * a + b * b;
  };
  p.eval_grad = [](const Vec& x) {
    const double b = x[1] - 2.0 * x[0] * x[0] + 1.0;
    Vec g(2);
    g[0] = 0.5 * (x[0] - 1.0) - 8.0 * x[0] * b;
    g[1] = 2.0 * b;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << s1, s2;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 1.0, 1.0;
  p.x_star = xs;
  return p;
}

Problem make_maratos() {
  Problem p;
  p.name = "maratos";
  p.dim = 2;
  const double th = 10.0;
  p.eval_f = [th](const Vec& x) {
    const double c = x[0] * x[0] + x[1] * x[1] - 1.0;
    return x[0] + th * c * c;
  };
  p.eval_grad = [th](const Vec& x) {
    const double c = x[0] * x[0] + x[1] * x[1] - 1.0;
    Vec g(2);
    g[0] = 1.0 + 4.0 * th * x[0] * c;
    g[1] = 4.0 * th * x[1] * c;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 1.0, 0.95;
  return p;
}

Problem make_nondia(Eigen::Index n) {
  // Registered at its two-dimensional benchmark size.
  Problem p;
  p.name = "nondia";
  p.dim = n;
  const double th = 100.0;
  p.eval_f = [th](const Vec& x) {
    const double a = 1.0 - x[1], b = x[0] - x[1] * x[1];
    return a * a + th * b * b;
  };
  p.eval_grad = [th](const Vec& x) {
    const double b = x[0] - x[1] * x[1];
    Vec g(2);
    g[0] = 2.0 * th * b;
    g[1] = -2.0 * (1.0 - x[1]) - 4.0 * th * x[1] * b;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << -0.9, 1.17;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 1.0, 1.0;
  p.x_star = xs;
  return p;
}

// ---- scalable standards ----

Problem make_rosenbrock(Eigen::Index n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("rosenbrock: n must be even and >= 2");
  Problem p;
  p.name = "rosenbrock";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    double f = 0;
    for (Eigen::Index j = 0; j + 1 < x.size(); j += 2) {
      const double u = x[j + 1] - x[j] * x[j], v = 1.0 - x[j];
      f += 100.0 * u * u + v * v;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    for (Eigen::Index j = 0; j + 1 < x.size(); j += 2) {
      const double u = x[j + 1] - x[j] * x[j];
      g[j] = -400.0 * u * x[j] - 2.0 * (1.0 - x[j]);
      g[j + 1] = 200.0 * u;
    }
    return g;
  };
  p.x0 = alternating_start(n, -1.2, 1.0);
  p.f_star = 0.0;
  p.x_star = constant_start(n, 1.0);
  return p;
}

Problem make_arwhead(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("arwhead: n must be >= 2");
  Problem p;
  p.name = "arwhead";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    const Eigen::Index n = x.size();
    double f = 0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      const double s = x[i] * x[i] + x[n - 1] * x[n - 1];
      f += s * s - 4.0 * x[i] + 3.0;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    const Eigen::Index n = x.size();
    Vec g = Vec::Zero(n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      const double s = x[i] * x[i] + x[n - 1] * x[n - 1];
      g[i] += 4.0 * s * x[i] - 4.0;
      g[n - 1] += 4.0 * s * x[n - 1];
    }
    return g;
  };
  p.x0 = constant_start(n, 1.0);
  p.f_star = 0.0;
  return p;
}

Problem make_dqdrtic(Eigen::Index n) {
  if (n < 3) throw std::invalid_argument("dqdrtic: n must be >= 3");
  Problem p;
  p.name = "dqdrtic";
  p.dim = n;
  const double c = 100.0;
  p.eval_f = [c](const Vec& x) {
    double f = 0;
    for (Eigen::Index i = 0; i + 2 < x.size(); ++i)
      f += x[i] * x[i] + c * x[i + 1] * x[i + 1] + c * x[i + 2] * x[i + 2];
    return f;
  };
  p.eval_grad = [c](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    for (Eigen::Index i = 0; i + 2 < x.size(); ++i) {
      g[i] += 2.0 * x[i];
      g[i + 1] += 2.0 * c * x[i + 1];
      g[i + 2] += 2.0 * c * x[i + 2];
    }
    return g;
  };
  p.x0 = constant_start(n, 3.0);
  p.f_star = 0.0;
  p.x_star = constant_start(n, 0.0);
  return p;
}

Problem make_bdqrtic(Eigen::Index n) {
  if (n < 5) throw std::invalid_argument("bdqrtic: n must be >= 5");
  Problem p;
  p.name = "bdqrtic";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    const Eigen::Index n = x.size();
    double f = 0;
    for (Eigen::Index i = 0; i + 4 < n; ++i) {
      const double a = 3.0 - 4.0 * x[i];
      const double b = x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] + 3.0 * x[i + 2] * x[i + 2] +
                       4.0 * x[i + 3] * x[i + 3] + 5.0 * x[n - 1] * x[n - 1];
      f += a * a + b * b;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    const Eigen::Index n = x.size();
    Vec g = Vec::Zero(n);
    for (Eigen::Index i = 0; i + 4 < n; ++i) {
      const double a = 3.0 - 4.0 * x[i];
      const double b = x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] + 3.0 * x[i + 2] * x[i + 2] +
                       4.0 * x[i + 3] * x[i + 3] + 5.0 * x[n - 1] * x[n - 1];
      g[i] += -8.0 * a + 4.0 * b * x[i];
      g[i + 1] += 8.0 * b * x[i + 1];
      g[i + 2] += 12.0 * b * x[i + 2];
      g[i + 3] += 16.0 * b * x[i + 3];
      g[n - 1] += 20.0 * b * x[n - 1];
    }
    return g;
  };
  p.x0 = constant_start(n, 1.0);
  return p;
}

Problem make_engval1(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("engval1: n must be >= 2");
  Problem p;
  p.name = "engval1";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    double f = 0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double s = x[i] * x[i] + x[i + 1] * x[i + 1];
      f += s * s - 4.0 * x[i] + 3.0;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double s = x[i] * x[i] + x[i + 1] * x[i + 1];
      g[i] += 4.0 * s * x[i] - 4.0;
      g[i + 1] += 4.0 * s * x[i + 1];
    }
    return g;
  };
  p.x0 = constant_start(n, 2.0);
  return p;
}

Problem make_edensch(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("edensch: n must be >= 2");
  Problem p;
  p.name = "edensch";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    double f = 16.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i] - 2.0;
      const double b = x[i] * x[i + 1] - 2.0 * x[i + 1];
      const double c = x[i + 1] + 1.0;
      f += a * a * a * a + b * b + c * c;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i] - 2.0;
      const double b = x[i] * x[i + 1] - 2.0 * x[i + 1];
      g[i] += 4.0 * a * a * a + 2.0 * b * x[i + 1];
      g[i + 1] += 2.0 * b * (x[i] - 2.0) + 2.0 * (x[i + 1] + 1.0);
    }
    return g;
  };
  p.x0 = constant_start(n, 0.0);
  return p;
}

Problem make_liarwhd(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("liarwhd: n must be >= 1");
  Problem p;
  p.name = "liarwhd";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    double f = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double u = x[i] * x[i] - x[0], v = x[i] - 1.0;
      f += 4.0 * u * u + v * v;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double u = x[i] * x[i] - x[0];
      g[i] += 16.0 * u * x[i] + 2.0 * (x[i] - 1.0);
      g[0] += -8.0 * u;
    }
    return g;
  };
  p.x0 = constant_start(n, 4.0);
  p.f_star = 0.0;
  p.x_star = constant_start(n, 1.0);
  return p;
}

Problem make_nondquar(Eigen::Index n) {
  if (n < 3) throw std::invalid_argument("nondquar: n must be >= 3");
  Problem p;
  p.name = "nondquar";
  p.dim = n;
  p.eval_f = [](const Vec& x) {
    const Eigen::Index n = x.size();
    const double a = x[0] - x[1], b = x[n - 2] + x[n - 1];
    double f = a * a + b * b;
    for (Eigen::Index i = 0; i + 2 < n; ++i) {
      const double c = x[i] + x[i + 1] + x[n - 1];
      f += c * c * c * c;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    const Eigen::Index n = x.size();
    Vec g = Vec::Zero(n);
    const double a = x[0] - x[1], b = x[n - 2] + x[n - 1];
    g[0] += 2.0 * a;
    g[1] += -2.0 * a;
    g[n - 2] += 2.0 * b;
    g[n - 1] += 2.0 * b;
    for (Eigen::Index i = 0; i + 2 < n; ++i) {
      const double c = x[i] + x[i + 1] + x[n - 1];
      const double c3 = 4.0 * c * c * c;
      g[i] += c3;
      g[i + 1] += c3;
      g[n - 1] += c3;
    }
    return g;
  };
  p.x0 = alternating_start(n, 1.0, -1.0);
  p.f_star = 0.0;
  return p;
}

Problem make_dixmaan(const char* name, Eigen::Index n, double alpha, double beta,
                     double gamma, double delta, int k1, int k2, int k3, int k4) {
  if (n < 3 || n % 3 != 0) throw std::invalid_argument("dixmaan: n must be a multiple of 3");
  Problem p;
  p.name = name;
  p.dim = n;
  const Eigen::Index m = n / 3;
  auto pw = [n](Eigen::Index i, int k) {
    // i is 1-based in the textbook formula
    return k == 0 ? 1.0 : std::pow(static_cast<double>(i) / static_cast<double>(n), k);
  };
  p.eval_f = [=](const Vec& x) {
    double f = 1.0;
    for (Eigen::Index i = 1; i <= n; ++i) f += alpha * x[i - 1] * x[i - 1] * pw(i, k1);
    for (Eigen::Index i = 1; i <= n - 1; ++i) {
      const double t = x[i] + x[i] * x[i];  // x_{i+1} + x_{i+1}^2, 0-based x[i]
      f += beta * x[i - 1] * x[i - 1] * t * t * pw(i, k2);
    }
    for (Eigen::Index i = 1; i <= 2 * m; ++i) {
      const double y = x[i + m - 1];
      f += gamma * x[i - 1] * x[i - 1] * y * y * y * y * pw(i, k3);
    }
    for (Eigen::Index i = 1; i <= m; ++i) f += delta * x[i - 1] * x[i + 2 * m - 1] * pw(i, k4);
    return f;
  };
  p.eval_grad = [=](const Vec& x) {
    Vec g = Vec::Zero(n);
    for (Eigen::Index i = 1; i <= n; ++i) g[i - 1] += 2.0 * alpha * x[i - 1] * pw(i, k1);
    for (Eigen::Index i = 1; i <= n - 1; ++i) {
      const double xn = x[i];
      const double t = xn + xn * xn;
      const double w = pw(i, k2);
      g[i - 1] += 2.0 * beta * x[i - 1] * t * t * w;
      g[i] += beta * x[i - 1] * x[i - 1] * 2.0 * t * (1.0 + 2.0 * xn) * w;
    }
    for (Eigen::Index i = 1; i <= 2 * m; ++i) {
      const double y = x[i + m - 1];
      const double w = pw(i, k3);
      g[i - 1] += 2.0 * gamma * x[i - 1] * y * y * y * y * w;
      g[i + m - 1] += 4.0 * gamma * x[i - 1] * x[i - 1] * y * y * y * w;
    }
    for (Eigen::Index i = 1; i <= m; ++i) {
      const double w = pw(i, k4);
      g[i - 1] += delta * x[i + 2 * m - 1] * w;
      g[i + 2 * m - 1] += delta * x[i - 1] * w;
    }
    return g;
  };
  p.x0 = constant_start(n, 2.0);
  p.f_star = 1.0;
  p.x_star = constant_start(n, 0.0);
  return p;
}

Problem make_vardim(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("vardim: n must be >= 1");
  Problem p;
  p.name = "vardim";
  p.dim = n;
  const double target = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;
  p.eval_f = [target](const Vec& x) {
    double f = 0, s = -target;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double v = x[i] - 1.0;
      f += v * v;
      s += static_cast<double>(i + 1) * x[i];
    }
    return f + s * s + s * s * s * s;
  };
  p.eval_grad = [target](const Vec& x) {
    double s = -target;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i];
    const double c = 2.0 * s + 4.0 * s * s * s;
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      g[i] = 2.0 * (x[i] - 1.0) + c * static_cast<double>(i + 1);
    return g;
  };
  Vec x0(n);
  for (Eigen::Index i = 0; i < n; ++i)
    x0[i] = 1.0 - static_cast<double>(i + 1) / static_cast<double>(n);
  p.x0 = x0;
  p.f_star = 0.0;
  p.x_star = constant_start(n, 1.0);
  return p;
}

// ---- small fixed-dimension standards ----

Problem make_beale() {
  Problem p;
  p.name = "beale";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double r1 = 1.5 - x[0] * (1.0 - x[1]);
    const double r2 = 2.25 - x[0] * (1.0 - x[1] * x[1]);
    const double r3 = 2.625 - x[0] * (1.0 - x[1] * x[1] * x[1]);
    return r1 * r1 + r2 * r2 + r3 * r3;
  };
  p.eval_grad = [](const Vec& x) {
    const double r1 = 1.5 - x[0] * (1.0 - x[1]);
    const double r2 = 2.25 - x[0] * (1.0 - x[1] * x[1]);
    const double r3 = 2.625 - x[0] * (1.0 - x[1] * x[1] * x[1]);
    Vec g(2);
    g[0] = -2.0 * (r1 * (1.0 - x[1]) + r2 * (1.0 - x[1] * x[1]) +
                   r3 * (1.0 - x[1] * x[1] * x[1]));
    g[1] = 2.0 * x[0] * (r1 + 2.0 * r2 * x[1] + 3.0 * r3 * x[1] * x[1]);
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 1.0, 1.0;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 3.0, 0.5;
  p.x_star = xs;
  return p;
}

Problem make_brownden() {
  Problem p;
  p.name = "brownden";
  p.dim = 4;
  p.eval_f = [](const Vec& x) {
    double f = 0;
    for (int i = 1; i <= 20; ++i) {
      const double t = i / 5.0;
      const double a = x[0] + t * x[1] - std::exp(t);
      const double b = x[2] + x[3] * std::sin(t) - std::cos(t);
      const double w = a * a + b * b;
      f += w * w;
    }
    return f;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g = Vec::Zero(4);
    for (int i = 1; i <= 20; ++i) {
      const double t = i / 5.0;
      const double a = x[0] + t * x[1] - std::exp(t);
      const double b = x[2] + x[3] * std::sin(t) - std::cos(t);
      const double w = 2.0 * (a * a + b * b);
      g[0] += w * 2.0 * a;
      g[1] += w * 2.0 * a * t;
      g[2] += w * 2.0 * b;
      g[3] += w * 2.0 * b * std::sin(t);
    }
    return g;
  };
  p.x0 = Vec(4);
  p.x0 << 25.0, 5.0, -5.0, -1.0;
  p.f_star = 85822.20162635627;
  return p;
}

Problem make_brkmcc() {
  Problem p;
  p.name = "brkmcc";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double e = 1.0 - 0.25 * x[0] * x[0] - x[1] * x[1];
    const double q = x[0] - 2.0 * x[1] + 1.0;
    return (x[0] - 2.0) * (x[0] - 2.0) + (x[1] - 1.0) * (x[1] - 1.0) + 0.04 / e +
           5.0 * q * q;
  };
  p.eval_grad = [](const Vec& x) {
    const double e = 1.0 - 0.25 * x[0] * x[0] - x[1] * x[1];
    const double q = x[0] - 2.0 * x[1] + 1.0;
    Vec g(2);
    g[0] = 2.0 * (x[0] - 2.0) + 0.04 * 0.5 * x[0] / (e * e) + 10.0 * q;
    g[1] = 2.0 * (x[1] - 1.0) + 0.04 * 2.0 * x[1] / (e * e) - 20.0 * q;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 2.0, 2.0;
  p.f_star = 0.16904267919645788;
  return p;
}

Problem make_sisser() {
  Problem p;
  p.name = "sisser";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double a = x[0] * x[0], b = x[1] * x[1];
    return 3.0 * a * a - 2.0 * a * b + 3.0 * b * b;
  };
  p.eval_grad = [](const Vec& x) {
    Vec g(2);
    g[0] = 12.0 * x[0] * x[0] * x[0] - 4.0 * x[0] * x[1] * x[1];
    g[1] = -4.0 * x[0] * x[0] * x[1] + 12.0 * x[1] * x[1] * x[1];
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 1.0, 0.1;
  p.f_star = 0.0;
  return p;
}

Problem make_hilbertb(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("hilbertb: n must be >= 1");
  Problem p;
  p.name = "hilbertb";
  p.dim = n;
  const double diag = 10.0;
  p.eval_f = [diag](const Vec& x) {
    const Eigen::Index n = x.size();
    double f = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        f += 0.5 * x[i] * x[j] / static_cast<double>(i + j + 1);
    f += 0.5 * diag * x.squaredNorm();
    return f;
  };
  p.eval_grad = [diag](const Vec& x) {
    const Eigen::Index n = x.size();
    Vec g = Vec::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g[i] += x[j] / static_cast<double>(i + j + 1);
    g += diag * x;
    return g;
  };
  p.x0 = constant_start(n, -3.0);
  p.f_star = 0.0;
  p.x_star = constant_start(n, 0.0);
  return p;
}

Problem make_denschna() {
  Problem p;
  p.name = "denschna";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double s = x[0] + x[1], e = std::exp(x[1]) - 1.0;
    return x[0] * x[0] * x[0] * x[0] + s * s + e * e;
  };
  p.eval_grad = [](const Vec& x) {
    const double s = x[0] + x[1], ex = std::exp(x[1]);
    Vec g(2);
    g[0] = 4.0 * x[0] * x[0] * x[0] + 2.0 * s;
    g[1] = 2.0 * s + 2.0 * (ex - 1.0) * ex;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 1.0, 1.0;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 0.0, 0.0;
  p.x_star = xs;
  return p;
}

Problem make_denschnb() {
  Problem p;
  p.name = "denschnb";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double a = x[0] - 2.0;
    const double b = a * x[1];
    const double c = x[1] + 1.0;
    return a * a + b * b + c * c;
  };
  p.eval_grad = [](const Vec& x) {
    const double a = x[0] - 2.0;
    Vec g(2);
    g[0] = 2.0 * a + 2.0 * a * x[1] * x[1];
    g[1] = 2.0 * a * a * x[1] + 2.0 * (x[1] + 1.0);
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 1.0, 1.0;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 2.0, -1.0;
  p.x_star = xs;
  return p;
}

Problem make_denschnc() {
  Problem p;
  p.name = "denschnc";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double a = x[0] * x[0] + x[1] * x[1] - 2.0;
    const double b = std::exp(x[0] - 1.0) + x[1] * x[1] * x[1] - 2.0;
    return a * a + b * b;
  };
  p.eval_grad = [](const Vec& x) {
    const double a = x[0] * x[0] + x[1] * x[1] - 2.0;
    const double ex = std::exp(x[0] - 1.0);
    const double b = ex + x[1] * x[1] * x[1] - 2.0;
    Vec g(2);
    g[0] = 4.0 * a * x[0] + 2.0 * b * ex;
    g[1] = 4.0 * a * x[1] + 6.0 * b * x[1] * x[1];
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << 2.0, 3.0;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 1.0, 1.0;
  p.x_star = xs;
  return p;
}

Problem make_cube() {
  Problem p;
  p.name = "cube";
  p.dim = 2;
  p.eval_f = [](const Vec& x) {
    const double u = x[1] - x[0] * x[0] * x[0], v = x[0] - 1.0;
    return v * v + 100.0 * u * u;
  };
  p.eval_grad = [](const Vec& x) {
    const double u = x[1] - x[0] * x[0] * x[0];
    Vec g(2);
    g[0] = 2.0 * (x[0] - 1.0) - 600.0 * u * x[0] * x[0];
    g[1] = 200.0 * u;
    return g;
  };
  p.x0 = Vec(2);
  p.x0 << -1.2, 1.0;
  p.f_star = 0.0;
  Vec xs(2);
  xs << 1.0, 1.0;
  p.x_star = xs;
  return p;
}

// ---- registry ----

struct Entry {
  std::function<Problem(Eigen::Index)> make;
  Eigen::Index default_dim;  // 0 marks fixed-dimension entries
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> r;
    auto fixed = [&r](const std::string& name, std::function<Problem()> f,
                      Eigen::Index native) {
      r[name] = {[f = std::move(f), native, name](Eigen::Index n) {
                   if (n != 0 && n != native)
                     throw std::invalid_argument(name + ": invalid dimension");
                   return f();
                 },
                 0};
    };
    fixed("ncr", [] { return make_ncr("ncr", -1.0, 1.5); }, 2);
    fixed("ncr-alt", [] { return make_ncr("ncr-alt", -0.61, -1.0); }, 2);
    fixed("maratos", make_maratos, 2);
    fixed("nondia", [] { return make_nondia(2); }, 2);
    fixed("beale", make_beale, 2);
    fixed("brownden", make_brownden, 4);
    fixed("brkmcc", make_brkmcc, 2);
    fixed("sisser", make_sisser, 2);
    fixed("denschna", make_denschna, 2);
    fixed("denschnb", make_denschnb, 2);
    fixed("denschnc", make_denschnc, 2);
    fixed("cube", make_cube, 2);
    r["rosenbrock"] = {make_rosenbrock, 100};
    r["arwhead"] = {make_arwhead, 100};
    r["dqdrtic"] = {make_dqdrtic, 100};
    r["bdqrtic"] = {make_bdqrtic, 100};
    r["engval1"] = {make_engval1, 100};
    r["edensch"] = {make_edensch, 100};
    r["liarwhd"] = {make_liarwhd, 100};
    r["nondquar"] = {make_nondquar, 100};
    r["vardim"] = {make_vardim, 50};
    r["hilbertb"] = {make_hilbertb, 10};
    auto dix = [](const char* nm, double b, double g, double d, int k4) {
      return [nm, b, g, d, k4](Eigen::Index n) {
        return make_dixmaan(nm, n, 1.0, b, g, d, 0, 0, 0, k4);
      };
    };
    r["dixmaana"] = {dix("dixmaana", 0.0, 0.125, 0.125, 0), 99};
    r["dixmaanb"] = {dix("dixmaanb", 0.0625, 0.0625, 0.0625, 1), 99};
    r["dixmaanc"] = {dix("dixmaanc", 0.125, 0.125, 0.125, 0), 99};
    r["dixmaand"] = {dix("dixmaand", 0.26, 0.26, 0.26, 0), 99};
    return r;
  }();
  return reg;
}

const std::vector<std::string>& classic_order() {
  static const std::vector<std::string> v = {
      "rosenbrock", "arwhead",  "dqdrtic",  "bdqrtic",  "engval1",  "edensch",
      "liarwhd",    "nondquar", "dixmaana", "dixmaanb", "dixmaanc", "dixmaand",
      "beale",      "brownden", "brkmcc",   "sisser",   "hilbertb", "denschna",
      "denschnb",   "denschnc", "cube",     "vardim"};
  return v;
}

}  // namespace

Problem get_problem(const std::string& name, Eigen::Index n) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown problem: " + name);
  if (n < 0) throw std::invalid_argument(name + ": invalid dimension");
  if (n > 1000) throw std::invalid_argument(name + ": dimension above registry cap 1000");
  const Entry& e = it->second;
  return e.make(n == 0 ? e.default_dim : n);
}

std::vector<Problem> list_suite(const std::string& tag) {
  std::vector<Problem> out;
  if (tag == "table1") {
    for (const char* n : {"ncr", "maratos", "nondia"}) out.push_back(get_problem(n));
    return out;
  }
  if (tag == "classic") {
    for (const std::string& n : classic_order()) out.push_back(get_problem(n));
    return out;
  }
  if (tag == "all") {
    for (const char* n : {"ncr", "ncr-alt", "maratos", "nondia"}) out.push_back(get_problem(n));
    for (const std::string& n : classic_order()) out.push_back(get_problem(n));
    return out;
  }
  throw std::invalid_argument("unknown suite: " + tag);
}

std::vector<std::string> registered_names() {
  std::vector<std::string> v;
  for (const auto& [name, e] : registry()) v.push_back(name);
  return v;
}

std::string suite_json(const std::string& tag) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  bool first_p = true;
  for (const Problem& p : list_suite(tag)) {
    os << (first_p ? "" : ",") << "{\"name\":\"" << p.name << "\",\"dim\":" << p.dim
       << ",\"start\":[";
    for (Eigen::Index i = 0; i < p.x0.size(); ++i) os << (i ? "," : "") << p.x0[i];
    os << "]";
    if (p.f_star) os << ",\"f_star\":" << *p.f_star;
    os << "}";
    first_p = false;
  }
  os << "]";
  return os.str();
}

double gradient_check(const Problem& p, int points, unsigned seed) {
  std::mt19937_64 rng(seed ^ std::hash<std::string>{}(p.name));
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  double worst = 0.0;
  for (int pt = 0; pt < points; ++pt) {
    Vec x = p.x0;
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] += unif(rng);
    Vec fd(p.dim);
    for (Eigen::Index i = 0; i < p.dim; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
      Vec xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      fd[i] = (p.eval_f(xp) - p.eval_f(xm)) / (2.0 * h);
    }
    const Vec g = p.eval_grad(x);
    const double rel = (fd - g).norm() / std::max(1.0, g.norm());
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace nmtr::problems
