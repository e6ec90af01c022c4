#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace billiards::detail {

struct NmResult {
  std::vector<double> x;
  double fx = 0.0;
  long evaluations = 0;
};

// Standard Nelder-Mead simplex minimization (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5).  Stops when the simplex value spread drops
// below tol_f or after max_iter iterations.
inline NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                            const std::vector<double>& x0, const std::vector<double>& step,
                            int max_iter, double tol_f) {
  const int n = static_cast<int>(x0.size());
  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> x(n + 1, x0);
  for (int i = 0; i < n; ++i) x[i + 1][i] += step[i];
  std::vector<double> fx(n + 1);
  for (int i = 0; i <= n; ++i) fx[i] = eval(x[i]);

  std::vector<int> idx(n + 1);
  for (int i = 0; i <= n; ++i) idx[i] = i;

  std::vector<double> xc(n), xr(n), xe(n), xk(n);
  for (int it = 0; it < max_iter; ++it) {
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    if (fx[idx[n]] - fx[idx[0]] <= tol_f) break;

    for (int j = 0; j < n; ++j) xc[j] = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) xc[j] += x[idx[i]][j];
    }
    for (int j = 0; j < n; ++j) xc[j] /= n;

    for (int j = 0; j < n; ++j) xr[j] = xc[j] + (xc[j] - x[idx[n]][j]);
    double fr = eval(xr);
    if (fr < fx[idx[0]]) {
      for (int j = 0; j < n; ++j) xe[j] = xc[j] + 2.0 * (xc[j] - x[idx[n]][j]);
      double fe = eval(xe);
      if (fe < fr) {
        x[idx[n]] = xe;
        fx[idx[n]] = fe;
      } else {
        x[idx[n]] = xr;
        fx[idx[n]] = fr;
      }
    } else if (fr < fx[idx[n - 1]]) {
      x[idx[n]] = xr;
      fx[idx[n]] = fr;
    } else {
      for (int j = 0; j < n; ++j) xk[j] = xc[j] + 0.5 * (x[idx[n]][j] - xc[j]);
      double fk = eval(xk);
      if (fk < fx[idx[n]]) {
        x[idx[n]] = xk;
        fx[idx[n]] = fk;
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j) x[idx[i]][j] = x[idx[0]][j] + 0.5 * (x[idx[i]][j] - x[idx[0]][j]);
          fx[idx[i]] = eval(x[idx[i]]);
        }
      }
    }
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
  return NmResult{x[idx[0]], fx[idx[0]], evals};
}

}  // namespace billiards::detail
