#pragma once

#include <cstdint>
#include <vector>

#include "vcsp/cut_sparsify.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

struct TwoSatFormula;

struct Hyperedge {
  std::vector<int> vertices;  // distinct, in range
  double weight = 0.0;

  bool operator==(const Hyperedge&) const = default;
};

// Weighted hypergraph; hyperedge members are kept sorted and must be
// distinct. Zero-weight hyperedges are dropped at construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int num_vertices);
  Hypergraph(int num_vertices, std::vector<Hyperedge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }

  void add_edge(std::vector<int> vertices, double weight);

  double total_weight() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
};

// Total weight of hyperedges split by s: those with S n e not in {empty, e}.
double hypergraph_cut_value(const Hypergraph& h, const VertexSet& s);

// Weighted k-SAT. Clauses hold distinct nonzero literals (signed 1-based
// variable ids); duplicate literals are merged and tautological clauses
// (a variable together with its negation) are removed at construction, their
// weight accumulated into tautology_offset since every assignment earns it.
struct KSatClause {
  std::vector<int> literals;
  double weight = 0.0;

  bool operator==(const KSatClause&) const = default;
};

class KSatFormula {
 public:
  KSatFormula() = default;
  explicit KSatFormula(int num_variables);
  KSatFormula(int num_variables, std::vector<KSatClause> clauses);

  int num_variables() const { return n_; }
  const std::vector<KSatClause>& clauses() const { return clauses_; }
  double tautology_offset() const { return tautology_offset_; }

  void add_clause(std::vector<int> literals, double weight);

  // Folds an always-satisfied weight into the formula's constant term.
  void add_constant_offset(double weight);

  std::size_t max_clause_size() const;

  bool operator==(const KSatFormula&) const = default;

 private:
  int n_ = 0;
  std::vector<KSatClause> clauses_;
  double tautology_offset_ = 0.0;
};

double k_sat_value(const KSatFormula& f, const VertexSet& assignment);

// A 2SAT formula is a k-SAT formula; repeated unit literals collapse and
// tautological clauses fold into the constant, so values are unchanged.
KSatFormula to_ksat(const TwoSatFormula& f);

// Clause-to-hyperedge encoding on 2n+1 vertices: variable i's positive
// literal is vertex i, its negation vertex n+i, and vertex 2n stands for
// "false". Clause j becomes hyperedge j = {false} u {literal vertices}.
// For every assignment, k_sat_value(f, A) - tautology_offset equals the
// hypergraph cut of falsified_literal_set(f, A).
Hypergraph encode_ksat(const KSatFormula& f);

// The cut query matching an assignment: vertices of false literals plus the
// distinguished "false" vertex.
VertexSet falsified_literal_set(const KSatFormula& f, const VertexSet& assignment);

// Connectivity lower bound per hyperedge: on the clique expansion (each
// hyperedge of size r spreads w/r onto each clique pair), take the maximum
// spanning forest and report the weight threshold at which the hyperedge's
// vertices become connected. Any cut splitting the hyperedge weighs at least
// this much in the expansion. Size-one hyperedges get 0 (they cannot be cut).
std::vector<double> hyperedge_strengths(const Hypergraph& h);

// Survivors of connectivity-normalized sampling: hyperedge e is kept with
// probability p_e = min(1, c * (r_e + ln(n+1)) * w_e / (strength_e * eps^2))
// and re-weighted w_e / p_e. Uncuttable hyperedges are kept unchanged.
// Returns (edge index, new weight) pairs in input order; deterministic per
// seed via the counter-based stream.
std::vector<std::pair<std::size_t, double>> sample_hyperedges(const Hypergraph& h,
                                                              const SamplerConfig& cfg);

Hypergraph hypergraph_sparsifier(const Hypergraph& h, const SamplerConfig& cfg);

// Keeps exactly the clauses whose hyperedges survive, with the sparsifier's
// weights; tautology_offset is carried over untouched.
KSatFormula sparsify_ksat(const KSatFormula& f, const SamplerConfig& cfg);

}  // namespace vcsp
