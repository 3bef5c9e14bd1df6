#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "vcsp/graph.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

// The two graph-induced quadratic forms. An edge (i,j,w) contributes
// w*(x_i - x_j)^2 to the Laplacian form and w*(x_i + x_j)^2 to the negated
// (signless) Laplacian form; direction is ignored.
enum class QuadraticFormKind { Laplacian, NegatedLaplacian };

enum class LeverageMode {
  Exact,   // dense eigendecomposition of the form matrix (up to n = 2048)
  Approx,  // conjugate-gradient solves, relative residual 1e-8
};

struct SamplerConfig {
  double eps = 0.25;          // accuracy, in (0,1)
  std::uint64_t seed = 0;     // drives the counter-based edge stream
  double oversample_c = 8.0;  // concentration slack, > 0
  LeverageMode mode = LeverageMode::Exact;

  // Throws std::invalid_argument when out of range.
  void validate() const;

  SamplerConfig with_seed(std::uint64_t s) const {
    SamplerConfig c = *this;
    c.seed = s;
    return c;
  }
};

// x^T M x for the chosen form. x must have one entry per vertex.
double quadratic_form(const WeightedDigraph& g, QuadraticFormKind kind,
                      const Eigen::Ref<const Eigen::VectorXd>& x);

// 0/1 membership vector of s.
Eigen::VectorXd indicator_vector(const VertexSet& s);

// +1 on members of s, -1 elsewhere; phi_S in the negated-Laplacian identity
// phi_S^T U phi_S = 4 * unCut(S).
Eigen::VectorXd sign_vector(const VertexSet& s);

// Per-edge statistical leverage w_e * b_e^T M^+ b_e, where b_e is the signed
// (Laplacian) or unsigned (negated Laplacian) incidence column and M^+ the
// pseudo-inverse of the form matrix. Scores lie in [0,1]; Laplacian scores
// sum to (component size - 1) over each connected component. A self-loop has
// zero Laplacian leverage and uses the column 2*e_i under the negated form.
std::vector<double> leverage_scores(const WeightedDigraph& g, QuadraticFormKind kind,
                                    LeverageMode mode = LeverageMode::Exact);

// Leverage-score importance sampling: edge e survives independently with
// probability p_e = min(1, c * leverage_e * ln(n+1) / eps^2), re-weighted to
// w_e / p_e. Edges with zero leverage never affect the form and are kept
// unchanged. The per-edge draw is a pure function of (seed, edge index), so
// output is identical across runs and thread counts. Direction is preserved.
WeightedDigraph sample_sparsifier(const WeightedDigraph& g, QuadraticFormKind kind,
                                  const SamplerConfig& cfg);

}  // namespace vcsp
