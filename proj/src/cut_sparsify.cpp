#include "vcsp/cut_sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include "vcsp/rng.hpp"

namespace vcsp {

namespace {

constexpr int kDenseLimit = 2048;

double edge_sign(QuadraticFormKind kind) {
  return kind == QuadraticFormKind::Laplacian ? -1.0 : 1.0;
}

// Incidence column of an edge: e_i -+ e_j, collapsing to 0 or 2*e_i on
// self-loops depending on the form.
void incidence(const Edge& e, QuadraticFormKind kind, Eigen::VectorXd& b) {
  b.setZero();
  const double sign = edge_sign(kind);
  b(e.src) += 1.0;
  b(e.dst) += sign;
}

Eigen::SparseMatrix<double> form_matrix_sparse(const WeightedDigraph& g, QuadraticFormKind kind) {
  const int n = g.num_vertices();
  const double sign = edge_sign(kind);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) {
      // b = (1 + sign) * e_i: zero column for the Laplacian, 2*e_i otherwise.
      const double c = (1.0 + sign);
      triplets.emplace_back(e.src, e.src, c * c * e.weight);
      continue;
    }
    triplets.emplace_back(e.src, e.src, e.weight);
    triplets.emplace_back(e.dst, e.dst, e.weight);
    triplets.emplace_back(e.src, e.dst, sign * e.weight);
    triplets.emplace_back(e.dst, e.src, sign * e.weight);
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::vector<double> leverage_exact(const WeightedDigraph& g, QuadraticFormKind kind) {
  const int n = g.num_vertices();
  Eigen::MatrixXd m = Eigen::MatrixXd(form_matrix_sparse(g, kind));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd& evals = eig.eigenvalues();
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const double cutoff = 1e-12 * std::max(1.0, evals.size() > 0 ? evals(evals.size() - 1) : 0.0);

  const double sign = edge_sign(kind);
  std::vector<double> scores;
  scores.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    double lev = 0.0;
    for (int k = 0; k < n; ++k) {
      if (evals(k) <= cutoff) continue;
      const double yk = e.src == e.dst ? (1.0 + sign) * v(e.src, k)
                                       : v(e.src, k) + sign * v(e.dst, k);
      lev += yk * yk / evals(k);
    }
    scores.push_back(std::clamp(e.weight * lev, 0.0, 1.0));
  }
  return scores;
}

std::vector<double> leverage_cg(const WeightedDigraph& g, QuadraticFormKind kind) {
  const int n = g.num_vertices();
  Eigen::SparseMatrix<double> m = form_matrix_sparse(g, kind);
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(1e-8);
  cg.compute(m);

  Eigen::VectorXd b(n);
  std::vector<double> scores;
  scores.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    incidence(e, kind, b);
    if (b.isZero(0.0)) {
      scores.push_back(0.0);
      continue;
    }
    // b lies in range(M), so CG started at 0 converges to the pseudo-inverse
    // solution up to the residual tolerance.
    Eigen::VectorXd x = cg.solveWithGuess(b, Eigen::VectorXd::Zero(n));
    scores.push_back(std::clamp(e.weight * b.dot(x), 0.0, 1.0));
  }
  return scores;
}

}  // namespace

void SamplerConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (!(oversample_c > 0.0) || !std::isfinite(oversample_c))
    throw std::invalid_argument("oversample_c must be positive and finite");
}

double quadratic_form(const WeightedDigraph& g, QuadraticFormKind kind,
                      const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != g.num_vertices())
    throw std::invalid_argument("vector length does not match vertex count");
  const double sign = edge_sign(kind);
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const double t = x(e.src) + sign * x(e.dst);
    total += e.weight * t * t;
  }
  return total;
}

Eigen::VectorXd indicator_vector(const VertexSet& s) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(s.universe());
  for (int v = 0; v < s.universe(); ++v)
    if (s.contains(v)) x(v) = 1.0;
  return x;
}

Eigen::VectorXd sign_vector(const VertexSet& s) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(s.universe(), -1.0);
  for (int v = 0; v < s.universe(); ++v)
    if (s.contains(v)) x(v) = 1.0;
  return x;
}

std::vector<double> leverage_scores(const WeightedDigraph& g, QuadraticFormKind kind,
                                    LeverageMode mode) {
  if (g.num_edges() == 0) return {};
  if (mode == LeverageMode::Exact && g.num_vertices() <= kDenseLimit)
    return leverage_exact(g, kind);
  return leverage_cg(g, kind);
}

WeightedDigraph sample_sparsifier(const WeightedDigraph& g, QuadraticFormKind kind,
                                  const SamplerConfig& cfg) {
  cfg.validate();
  const std::vector<double> lev = leverage_scores(g, kind, cfg.mode);
  const double ln_term = std::log(static_cast<double>(g.num_vertices()) + 1.0);
  const double rate = cfg.oversample_c * ln_term / (cfg.eps * cfg.eps);

  WeightedDigraph out(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (lev[i] <= 0.0) {
      // Zero incidence (Laplacian self-loop): invisible to the form, kept as-is.
      out.add_edge(e.src, e.dst, e.weight);
      continue;
    }
    const double p = std::min(1.0, rate * lev[i]);
    if (counter_uniform(cfg.seed, i) < p) out.add_edge(e.src, e.dst, e.weight / p);
  }
  return out;
}

}  // namespace vcsp
