// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "graphent/error.hpp"

namespace graphent {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kTraceAgreementTol = 1e-10;
constexpr double kEdgeMatchTol = 1e-8;
constexpr double kInequalitySlack = 1e-12;

Matrix checked_operator(const Matrix& dg) {
  if (dg.size() == 0) throw Error(ErrorCode::kEmptyMatrix, "kernel matrix is empty");
  if (dg.rows() != dg.cols()) throw Error(ErrorCode::kNonSquareMatrix, "kernel must be square");
  const double scale = std::max(1.0, dg.cwiseAbs().maxCoeff());
  if ((dg - dg.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    throw Error(ErrorCode::kAsymmetricMatrix, "kernel must be symmetric");
  }
  return (0.5 / static_cast<double>(dg.rows())) * (dg + dg.transpose());
}

std::vector<double> sorted_spectrum(const Matrix& op) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op, Eigen::EigenvaluesOnly);
  std::vector<double> mu(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::stable_sort(mu.begin(), mu.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
  return mu;
}

double spectral_power_sum(const std::vector<double>& mu, int p) {
  double s = 0.0;
  for (double x : mu) s += p == 2 ? x * x : x * x * x;
  return s;
}

double direct_trace(const Matrix& op, int p) {
  if (p == 2) return op.cwiseProduct(op.transpose()).sum();
  const Matrix sq = op * op;
  return sq.cwiseProduct(op.transpose()).sum();
}

double checked_trace(const Matrix& op, const std::vector<double>& mu, int p) {
  const double direct = direct_trace(op, p);
  const double spectral = spectral_power_sum(mu, p);
  if (std::abs(direct - spectral) > kTraceAgreementTol) {
    throw Error(ErrorCode::kInvariantViolation, "spectral and direct traces disagree for p=" +
                                                    std::to_string(p));
  }
  return direct;
}

}  // namespace

std::vector<double> kernel_operator_spectrum(const Matrix& dg) {
  return sorted_spectrum(checked_operator(dg));
}

double trace_power(const Matrix& dg, int p) {
  if (p != 2 && p != 3) {
    throw Error(ErrorCode::kUnsupportedPower, "only p = 2 and p = 3 are supported");
  }
  const Matrix op = checked_operator(dg);
  return checked_trace(op, sorted_spectrum(op), p);
}

int numerical_rank(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) return 0;
  const double cutoff = 1e-9 * std::max(1.0, std::abs(eigenvalues.front()));
  return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                        [&](double x) { return std::abs(x) > cutoff; }));
}

SpectralReport delta_t_decomposition(const Graphon& g, double e) {
  const double actual = edge_density(g);
  if (!(std::abs(actual - e) <= kEdgeMatchTol)) {
    throw Error(ErrorCode::kEdgeDensityMismatch,
                "graphon edge density " + std::to_string(actual) + " differs from e = " +
                    std::to_string(e));
  }
  const int m = g.resolution();
  const Matrix dg = g.values().array() - e;
  const Matrix op = checked_operator(dg);

  SpectralReport report;
  report.eigenvalues = sorted_spectrum(op);
  report.trace2 = checked_trace(op, report.eigenvalues, 2);
  report.trace3 = checked_trace(op, report.eigenvalues, 3);
  // <1, T^2 1> = (1/m) |op * 1|^2 in block coordinates.
  const Eigen::VectorXd row_means = op.rowwise().sum();
  report.quad_term = 3.0 * e * row_means.squaredNorm() / m;
  report.delta_t = report.quad_term + report.trace3;
  report.numerical_rank = numerical_rank(report.eigenvalues);
  return report;
}

TraceInequality verify_trace_inequality(const Matrix& dg) {
  const Matrix op = checked_operator(dg);
  const auto mu = sorted_spectrum(op);
  const double t2 = checked_trace(op, mu, 2);
  const double t3 = checked_trace(op, mu, 3);
  TraceInequality out;
  out.lhs = std::abs(t3);
  out.rhs = std::pow(std::max(t2, 0.0), 1.5);
  out.gap = out.rhs - out.lhs;
  out.holds = out.lhs <= out.rhs + kInequalitySlack;
  out.rank_one = numerical_rank(mu) <= 1;
  return out;
}

}  // namespace graphent
