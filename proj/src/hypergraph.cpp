#include "vcsp/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "vcsp/applications.hpp"
#include "vcsp/rng.hpp"

namespace vcsp {

namespace {

void check_weight(double weight) {
  if (!std::isfinite(weight) || weight < 0.0)
    throw std::invalid_argument("weight must be finite and nonnegative");
}

// Union-find over int vertices, path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Hypergraph::Hypergraph(int num_vertices, std::vector<Hyperedge> edges)
    : Hypergraph(num_vertices) {
  for (Hyperedge& e : edges) add_edge(std::move(e.vertices), e.weight);
}

void Hypergraph::add_edge(std::vector<int> vertices, double weight) {
  check_weight(weight);
  if (vertices.empty()) throw std::invalid_argument("hyperedge needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("hyperedge members must be distinct");
  if (vertices.front() < 0 || vertices.back() >= n_)
    throw std::out_of_range("hyperedge vertex outside range");
  if (weight == 0.0) return;
  edges_.push_back({std::move(vertices), weight});
}

double Hypergraph::total_weight() const {
  double w = 0.0;
  for (const Hyperedge& e : edges_) w += e.weight;
  return w;
}

double hypergraph_cut_value(const Hypergraph& h, const VertexSet& s) {
  if (s.universe() != h.num_vertices())
    throw std::invalid_argument("subset universe does not match hypergraph");
  double total = 0.0;
  for (const Hyperedge& e : h.edges()) {
    std::size_t inside = 0;
    for (int v : e.vertices)
      if (s.contains(v)) ++inside;
    if (inside != 0 && inside != e.vertices.size()) total += e.weight;
  }
  return total;
}

KSatFormula::KSatFormula(int num_variables) : n_(num_variables) {
  if (num_variables < 0) throw std::invalid_argument("negative variable count");
}

KSatFormula::KSatFormula(int num_variables, std::vector<KSatClause> clauses)
    : KSatFormula(num_variables) {
  for (KSatClause& c : clauses) add_clause(std::move(c.literals), c.weight);
}

void KSatFormula::add_clause(std::vector<int> literals, double weight) {
  check_weight(weight);
  std::sort(literals.begin(), literals.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  for (std::size_t i = 0; i < literals.size(); ++i) {
    const int lit = literals[i];
    if (lit == 0 || std::abs(lit) > n_) throw std::out_of_range("literal references no variable");
    if (i + 1 < literals.size() && literals[i + 1] == -lit) {
      // Tautology: every assignment satisfies it, so it folds into a constant.
      tautology_offset_ += weight;
      return;
    }
  }
  if (weight == 0.0) return;
  clauses_.push_back({std::move(literals), weight});
}

void KSatFormula::add_constant_offset(double weight) {
  check_weight(weight);
  tautology_offset_ += weight;
}

std::size_t KSatFormula::max_clause_size() const {
  std::size_t m = 0;
  for (const KSatClause& c : clauses_) m = std::max(m, c.literals.size());
  return m;
}

double k_sat_value(const KSatFormula& f, const VertexSet& assignment) {
  double total = f.tautology_offset();
  for (const KSatClause& c : f.clauses()) {
    for (int lit : c.literals) {
      const bool truth = assignment.contains(std::abs(lit) - 1);
      if (lit > 0 ? truth : !truth) {
        total += c.weight;
        break;
      }
    }
  }
  return total;
}

KSatFormula to_ksat(const TwoSatFormula& f) {
  KSatFormula out(f.n);
  for (const TwoSatClause& c : f.clauses) out.add_clause({c.lit1, c.lit2}, c.weight);
  return out;
}

Hypergraph encode_ksat(const KSatFormula& f) {
  const int n = f.num_variables();
  const int false_vertex = 2 * n;
  Hypergraph h(2 * n + 1);
  for (const KSatClause& c : f.clauses()) {
    std::vector<int> members;
    members.reserve(c.literals.size() + 1);
    members.push_back(false_vertex);
    for (int lit : c.literals)
      members.push_back(lit > 0 ? lit - 1 : n + (-lit - 1));
    h.add_edge(std::move(members), c.weight);
  }
  return h;
}

VertexSet falsified_literal_set(const KSatFormula& f, const VertexSet& assignment) {
  const int n = f.num_variables();
  if (assignment.universe() != n)
    throw std::invalid_argument("assignment does not cover all variables");
  VertexSet s(2 * n + 1);
  for (int v = 0; v < n; ++v) {
    if (assignment.contains(v))
      s.insert(n + v);  // negated literal is false
    else
      s.insert(v);  // positive literal is false
  }
  s.insert(2 * n);
  return s;
}

std::vector<double> hyperedge_strengths(const Hypergraph& h) {
  // Clique expansion, aggregating parallel contributions.
  std::map<std::pair<int, int>, double> pair_weight;
  for (const Hyperedge& e : h.edges()) {
    const double share = e.weight / static_cast<double>(e.vertices.size());
    for (std::size_t i = 0; i < e.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
        pair_weight[{e.vertices[i], e.vertices[j]}] += share;
  }

  // Maximum spanning forest by descending weight.
  std::vector<std::pair<double, std::pair<int, int>>> clique_edges;
  clique_edges.reserve(pair_weight.size());
  for (const auto& [pair, w] : pair_weight) clique_edges.push_back({w, pair});
  std::sort(clique_edges.begin(), clique_edges.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  std::vector<std::pair<double, std::pair<int, int>>> forest;
  {
    DisjointSets uf(h.num_vertices());
    for (const auto& [w, pair] : clique_edges)
      if (uf.unite(pair.first, pair.second)) forest.push_back({w, pair});
  }

  // Per hyperedge, insert forest edges in descending order until its
  // vertices merge; the last inserted weight is the bottleneck threshold.
  std::vector<double> strengths;
  strengths.reserve(h.num_edges());
  for (const Hyperedge& e : h.edges()) {
    if (e.vertices.size() < 2) {
      strengths.push_back(0.0);
      continue;
    }
    DisjointSets uf(h.num_vertices());
    std::size_t components = e.vertices.size();
    double threshold = 0.0;
    for (const auto& [w, pair] : forest) {
      const int ra = uf.find(pair.first), rb = uf.find(pair.second);
      if (ra == rb) continue;
      int members_a = 0, members_b = 0;
      for (int v : e.vertices) {
        const int rv = uf.find(v);
        if (rv == ra) ++members_a;
        if (rv == rb) ++members_b;
      }
      uf.unite(ra, rb);
      if (members_a > 0 && members_b > 0) {
        components -= 1;
        threshold = w;
        if (components == 1) break;
      }
    }
    strengths.push_back(components == 1 ? threshold : 0.0);
  }
  return strengths;
}

std::vector<std::pair<std::size_t, double>> sample_hyperedges(const Hypergraph& h,
                                                              const SamplerConfig& cfg) {
  cfg.validate();
  const std::vector<double> strengths = hyperedge_strengths(h);
  const double ln_term = std::log(static_cast<double>(h.num_vertices()) + 1.0);
  std::vector<std::pair<std::size_t, double>> kept;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Hyperedge& e = h.edges()[i];
    if (e.vertices.size() < 2 || strengths[i] <= 0.0) {
      // Uncuttable or disconnected-in-expansion edges must survive intact.
      kept.push_back({i, e.weight});
      continue;
    }
    const double r = static_cast<double>(e.vertices.size());
    const double p = std::min(
        1.0, cfg.oversample_c * (r + ln_term) * e.weight / (strengths[i] * cfg.eps * cfg.eps));
    if (counter_uniform(cfg.seed, i) < p) kept.push_back({i, e.weight / p});
  }
  return kept;
}

Hypergraph hypergraph_sparsifier(const Hypergraph& h, const SamplerConfig& cfg) {
  Hypergraph out(h.num_vertices());
  for (const auto& [idx, weight] : sample_hyperedges(h, cfg))
    out.add_edge(h.edges()[idx].vertices, weight);
  return out;
}

KSatFormula sparsify_ksat(const KSatFormula& f, const SamplerConfig& cfg) {
  const Hypergraph h = encode_ksat(f);
  KSatFormula out(f.num_variables());
  // Tautologies never reach the hypergraph; their constant value is exact.
  out.add_constant_offset(f.tautology_offset());
  for (const auto& [idx, weight] : sample_hyperedges(h, cfg)) {
    const KSatClause& clause = f.clauses()[idx];
    out.add_clause(clause.literals, weight);
  }
  return out;
}

}  // namespace vcsp
