#include "padeu/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>

namespace padeu {

std::vector<RootCluster> poly_roots(const Polynomial& p, const Tolerances& tol) {
  Polynomial q = p.mode() == Mode::floating ? p : p.to_float();
  if (q.degree_or(-1) < 1) throw precondition_error("poly_roots needs degree >= 1");
  int n = *q.degree();
  Cd lead = q.leading().fval();

  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -q.coeff(i).fval() / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  if (es.info() != Eigen::Success) throw pipeline_error("companion eigensolver failed");

  std::vector<Cd> ev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ev[size_t(i)] = es.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(), [](Cd a, Cd b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // Single-linkage clustering at tau_root, cluster root = centroid.
  std::vector<RootCluster> out;
  std::vector<bool> used(ev.size(), false);
  for (size_t i = 0; i < ev.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> members{i};
    used[i] = true;
    for (size_t k = 0; k < members.size(); ++k)
      for (size_t j = 0; j < ev.size(); ++j)
        if (!used[j] && std::abs(ev[j] - ev[members[k]]) <= tol.tau_root) {
          used[j] = true;
          members.push_back(j);
        }
    Cd centroid{0, 0};
    for (size_t m : members) centroid += ev[m];
    centroid /= double(members.size());
    out.push_back({centroid, int(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    return a.root.real() != b.root.real() ? a.root.real() < b.root.real()
                                          : a.root.imag() < b.root.imag();
  });
  return out;
}

}  // namespace padeu
