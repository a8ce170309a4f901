#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace orbitope::lp {

enum class Status { Optimal, Unbounded, Infeasible, IterationLimit };

struct Result {
  Status status = Status::Infeasible;
  Eigen::VectorXd x;
  double value = -std::numeric_limits<double>::infinity();
  int iterations = 0;
};

/// maximize c.x subject to A x <= b with x free.
///
/// Few variables, many constraints: the dual
///   minimize b.y  subject to  A^T y = c, y >= 0
/// has only k = dim(x) equality rows, so it is solved by a two-phase revised
/// simplex with an explicit k x k basis inverse. The primal optimum is the
/// vector of simplex multipliers of the final dual basis.
inline Result maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                       int max_iterations = 20000) {
  const Eigen::Index N = A.rows(), k = A.cols();
  if (b.size() != N || c.size() != k) throw std::invalid_argument("lp::maximize: dimension mismatch");
  Result res;
  if (k == 0) {
    res.status = (b.array() >= 0).all() ? Status::Optimal : Status::Infeasible;
    res.value = 0;
    res.x = Eigen::VectorXd(0);
    return res;
  }
  // Columns 0..N-1 are y (column j = A.row(j)^T), N..N+k-1 are artificials.
  Eigen::VectorXd rhs = c;
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(k);
  for (Eigen::Index i = 0; i < k; ++i)
    if (rhs(i) < 0) { sign(i) = -1; rhs(i) = -rhs(i); }

  auto column = [&](Eigen::Index j) -> Eigen::VectorXd {
    if (j < N) return sign.cwiseProduct(A.row(j).transpose());
    Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
    e(j - N) = 1;
    return e;
  };

  std::vector<Eigen::Index> basis(k);
  for (Eigen::Index i = 0; i < k; ++i) basis[i] = N + i;
  Eigen::MatrixXd Binv = Eigen::MatrixXd::Identity(k, k);
  Eigen::VectorXd xB = rhs;

  const double scale = std::max({1.0, A.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  const double eps = 1e-11 * scale;

  auto refactor = [&]() {
    Eigen::MatrixXd B(k, k);
    for (Eigen::Index i = 0; i < k; ++i) B.col(i) = column(basis[i]);
    Binv = B.partialPivLu().inverse();
    xB = Binv * rhs;
  };

  auto run_phase = [&](bool phase_one) -> Status {
    auto cost = [&](Eigen::Index j) -> double {
      if (phase_one) return j >= N ? 1.0 : 0.0;
      return j >= N ? 0.0 : b(j);
    };
    int degenerate_run = 0;
    for (; res.iterations < max_iterations; ++res.iterations) {
      Eigen::VectorXd cB(k);
      for (Eigen::Index i = 0; i < k; ++i) cB(i) = cost(basis[i]);
      Eigen::RowVectorXd pi = cB.transpose() * Binv;
      // pricing: Dantzig, falling back to Bland after a run of degenerate pivots
      const bool bland = degenerate_run > 50;
      Eigen::Index enter = -1;
      double best = -eps;
      for (Eigen::Index j = 0; j < N; ++j) {
        double d = cost(j) - pi.dot(column(j));
        if (d < best) {
          enter = j;
          best = d;
          if (bland) break;
        }
      }
      if (enter < 0) return Status::Optimal;
      Eigen::VectorXd u = Binv * column(enter);
      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < k; ++i) {
        if (!phase_one && basis[i] >= N && std::abs(u(i)) > 1e-12) {
          // a zero-level artificial must leave before it can move
          ratio = 0;
          leave = i;
          break;
        }
        if (u(i) > 1e-12) {
          double r = std::max(0.0, xB(i)) / u(i);
          if (r < ratio - 1e-15 || (bland && r <= ratio + 1e-15 && leave >= 0 && basis[i] < basis[leave])) {
            ratio = r;
            leave = i;
          }
        }
      }
      if (leave < 0) return Status::Unbounded;
      degenerate_run = ratio < 1e-14 ? degenerate_run + 1 : 0;
      basis[leave] = enter;
      refactor();
    }
    return Status::IterationLimit;
  };

  Status s1 = run_phase(true);
  if (s1 == Status::IterationLimit) { res.status = s1; return res; }
  double infeas = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    if (basis[i] >= N) infeas += std::max(0.0, xB(i));
  if (infeas > 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff())) {
    // dual infeasible: the primal is unbounded (it is never infeasible
    // here unless A x <= b itself is empty, which phase two would report)
    res.status = Status::Unbounded;
    return res;
  }
  // drive remaining zero-level artificials out of the basis where possible
  for (Eigen::Index i = 0; i < k; ++i) {
    if (basis[i] < N) continue;
    Eigen::RowVectorXd row = Binv.row(i);
    for (Eigen::Index j = 0; j < N; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      if (std::abs(row.dot(column(j))) > 1e-9) {
        basis[i] = j;
        refactor();
        break;
      }
    }
  }
  Status s2 = run_phase(false);
  if (s2 != Status::Optimal) {
    // an unbounded dual means the primal constraints are infeasible
    res.status = s2 == Status::Unbounded ? Status::Infeasible : s2;
    return res;
  }
  Eigen::VectorXd cB(k);
  for (Eigen::Index i = 0; i < k; ++i) cB(i) = basis[i] >= N ? 0.0 : b(basis[i]);
  Eigen::VectorXd pi = (cB.transpose() * Binv).transpose();
  res.x = sign.cwiseProduct(pi);
  res.value = c.dot(res.x);
  res.status = Status::Optimal;
  return res;
}

}  // namespace orbitope::lp
