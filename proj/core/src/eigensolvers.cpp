#include "ecut/eigensolvers.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "ecut/error.hpp"
#include "ecut/parallel.hpp"
#include "ecut/rng.hpp"

namespace ecut {

double WalkSpectrumEdges::abs_max() const { return std::max(std::abs(second), std::abs(smallest)); }

namespace {

Eigen::MatrixXd normalized_adjacency(const LeveledGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      m(u, v) = 1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v)));
    }
  }
  return m;
}

// Number of eigenvalues of the tridiagonal (alpha, beta) strictly below x.
std::size_t sturm_count(const std::vector<double>& alpha, const std::vector<double>& beta, double x) {
  std::size_t count = 0;
  double q = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : beta[i - 1] * beta[i - 1];
    q = alpha[i] - x - (i == 0 ? 0.0 : b2 / q);
    if (q == 0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1);
    if (q < 0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (0-based) of the tridiagonal by bisection.
double tridiagonal_eigenvalue(const std::vector<double>& alpha, const std::vector<double>& beta,
                              std::size_t k) {
  double lo = -1.0 - 1e-9;
  double hi = 1.0 + 1e-9;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(alpha, beta, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Residual |beta_k * s_k| of the Ritz pair at theta, where s is the unit
// eigenvector of the tridiagonal found by two steps of inverse iteration.
double ritz_residual(const std::vector<double>& alpha, const std::vector<double>& beta,
                     double beta_next, double theta) {
  const std::size_t k = alpha.size();
  std::vector<double> x(k, 1.0);
  std::vector<double> c(k);
  std::vector<double> d(k);
  const double shift = theta + 1e-13;
  for (int sweep = 0; sweep < 3; ++sweep) {
    // Thomas algorithm on (T - shift I) y = x.
    for (std::size_t i = 0; i < k; ++i) {
      const double diag = alpha[i] - shift;
      const double lower = i == 0 ? 0.0 : beta[i - 1];
      double denom = diag - (i == 0 ? 0.0 : lower * c[i - 1]);
      if (denom == 0) denom = 1e-300;
      c[i] = i + 1 < k ? beta[i] / denom : 0.0;
      d[i] = (x[i] - (i == 0 ? 0.0 : lower * d[i - 1])) / denom;
    }
    for (std::size_t i = k; i-- > 0;) x[i] = d[i] - (i + 1 < k ? c[i] * x[i + 1] : 0.0);
    double norm = 0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (!std::isfinite(norm) || norm == 0) return std::numeric_limits<double>::infinity();
    for (double& v : x) v /= norm;
  }
  return std::abs(beta_next * x.back());
}

WalkSpectrumEdges lanczos_edges(const LeveledGraph& g, const EigenOptions& opt) {
  const std::size_t n = g.vertex_count();
  std::vector<double> inv_sqrt_deg(n);
  std::vector<double> trivial(n);
  double trivial_norm = 0;
  for (VertexId v = 0; v < n; ++v) {
    const auto d = static_cast<double>(g.degree(v));
    if (d == 0) throw Error("isolated vertex");
    inv_sqrt_deg[v] = 1.0 / std::sqrt(d);
    trivial[v] = std::sqrt(d);
    trivial_norm += d;
  }
  trivial_norm = std::sqrt(trivial_norm);
  for (double& t : trivial) t /= trivial_norm;

  auto deflate = [&](std::vector<double>& x) {
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * trivial[i];
    for (std::size_t i = 0; i < n; ++i) x[i] -= dot * trivial[i];
  };
  auto normalize = [&](std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    for (double& v : x) v /= s;
    return s;
  };
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    parallel_chunks(n, opt.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t u = begin; u < end; ++u) {
        double acc = 0;
        for (VertexId v : g.neighbors(static_cast<VertexId>(u))) acc += inv_sqrt_deg[v] * x[v];
        y[u] = inv_sqrt_deg[u] * acc;
      }
    });
  };

  std::vector<double> q(n);
  CounterRng rng(0x5eed, n);
  for (double& v : q) v = rng.uniform() - 0.5;
  deflate(q);
  normalize(q);

  std::vector<double> q_prev(n, 0.0);
  std::vector<double> w(n);
  std::vector<double> alpha;
  std::vector<double> beta;
  WalkSpectrumEdges out;
  out.dense = false;
  double beta_prev = 0;
  const std::size_t cap = opt.max_iterations;
  std::size_t next_check = 10;
  for (std::size_t k = 0; k < cap; ++k) {
    apply(q, w);
    double a = 0;
    for (std::size_t i = 0; i < n; ++i) a += w[i] * q[i];
    for (std::size_t i = 0; i < n; ++i) w[i] -= a * q[i] + beta_prev * q_prev[i];
    deflate(w);
    alpha.push_back(a);
    double b = 0;
    for (double v : w) b += v * v;
    b = std::sqrt(b);
    out.iterations = k + 1;

    const bool breakdown = b < 1e-12;
    const bool check = breakdown || k + 1 == cap || k + 1 == next_check;
    if (check) {
      next_check = k + 1 + std::max<std::size_t>(10, (k + 1) / 20);
      const double top = tridiagonal_eigenvalue(alpha, beta, alpha.size() - 1);
      const double bottom = tridiagonal_eigenvalue(alpha, beta, 0);
      out.second = top;
      out.smallest = bottom;
      if (breakdown) break;
      if (ritz_residual(alpha, beta, b, top) < opt.tol &&
          ritz_residual(alpha, beta, b, bottom) < opt.tol) {
        break;
      }
      if (k + 1 == cap) throw Error("eigensolver did not converge");
    }
    beta.push_back(b);
    std::swap(q_prev, q);
    for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    beta_prev = b;
  }
  return out;
}

}  // namespace

WalkSpectrumEdges walk_spectrum_edges(const LeveledGraph& g, const EigenOptions& opt) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error("spectrum needs at least two vertices");
  if (n <= opt.dense_limit && !opt.force_iterative) {
    for (VertexId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) throw Error("isolated vertex");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_adjacency(g),
                                                         Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    WalkSpectrumEdges out;
    out.second = ev(static_cast<Eigen::Index>(n) - 2);
    out.smallest = ev(0);
    out.dense = true;
    return out;
  }
  return lanczos_edges(g, opt);
}

std::vector<double> adjacency_spectrum(const LeveledGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) a(u, v) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace ecut
