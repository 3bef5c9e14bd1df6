#include "vcsp/io.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace vcsp {

namespace {

struct Record {
  int line = 0;
  std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated records, one per non-blank line, with
// `#` comments stripped.
std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) rec.tokens.push_back(line.substr(start, i - start));
    }
    if (!rec.tokens.empty()) records.push_back(std::move(rec));
  }
  return records;
}

int parse_int(const Record& rec, std::string_view tok, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(rec.line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

double parse_weight(const Record& rec, std::string_view tok) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(rec.line, "malformed weight '" + std::string(tok) + "'");
  return value;
}

void expect_tokens(const Record& rec, std::size_t count, const char* shape) {
  if (rec.tokens.size() != count)
    throw ParseError(rec.line, std::string("expected '") + shape + "'");
}

template <typename T>
T checked(const Record& rec, const std::function<T()>& build) {
  try {
    return build();
  } catch (const std::exception& e) {
    throw ParseError(rec.line, e.what());
  }
}

VcspInstance parse_vcsp(int n, const std::vector<Record>& body) {
  VcspInstance inst(n);
  for (const Record& rec : body) {
    expect_tokens(rec, 4, "<pred-name> <u> <v> <w>");
    const auto pred = Predicate::from_name(rec.tokens[0]);
    if (!pred) throw ParseError(rec.line, "unknown predicate " + std::string(rec.tokens[0]));
    const int u = parse_int(rec, rec.tokens[1], "variable index");
    const int v = parse_int(rec, rec.tokens[2], "variable index");
    const double w = parse_weight(rec, rec.tokens[3]);
    checked<int>(rec, [&] { inst.add_constraint(u, v, *pred, w); return 0; });
  }
  return inst;
}

TwoLinSystem parse_2lin(int n, const std::vector<Record>& body) {
  std::vector<TwoLinEquation> equations;
  for (const Record& rec : body) {
    expect_tokens(rec, 4, "<u> <v> <rhs> <w>");
    TwoLinEquation eq;
    eq.u = parse_int(rec, rec.tokens[0], "variable index");
    eq.v = parse_int(rec, rec.tokens[1], "variable index");
    eq.rhs = parse_int(rec, rec.tokens[2], "rhs bit");
    eq.weight = parse_weight(rec, rec.tokens[3]);
    if (eq.rhs != 0 && eq.rhs != 1) throw ParseError(rec.line, "rhs must be 0 or 1");
    if (eq.u < 0 || eq.u >= n || eq.v < 0 || eq.v >= n)
      throw ParseError(rec.line, "variable index out of range");
    if (eq.weight < 0.0) throw ParseError(rec.line, "negative weight");
    if (eq.weight > 0.0) equations.push_back(eq);
  }
  return {n, std::move(equations)};
}

ParsedInput parse_wcnf(int n, const std::vector<Record>& body) {
  struct RawClause {
    std::vector<int> lits;
    double weight;
    int line;
  };
  std::vector<RawClause> raw;
  bool two_sat = true;
  for (const Record& rec : body) {
    if (rec.tokens.size() < 3)
      throw ParseError(rec.line, "expected '<w> <lit> ... <lit> 0'");
    RawClause c{{}, parse_weight(rec, rec.tokens[0]), rec.line};
    if (c.weight < 0.0) throw ParseError(rec.line, "negative weight");
    for (std::size_t i = 1; i + 1 < rec.tokens.size(); ++i) {
      const int lit = parse_int(rec, rec.tokens[i], "literal");
      if (lit == 0) throw ParseError(rec.line, "literal 0 before end of clause");
      if (std::abs(lit) > n) throw ParseError(rec.line, "literal references no variable");
      c.lits.push_back(lit);
    }
    if (parse_int(rec, rec.tokens.back(), "terminator") != 0)
      throw ParseError(rec.line, "clause must end with 0");
    if (c.lits.empty()) throw ParseError(rec.line, "empty clause");
    if (c.lits.size() > 2) two_sat = false;
    raw.push_back(std::move(c));
  }
  if (two_sat) {
    TwoSatFormula f{n, {}};
    for (const RawClause& c : raw) {
      if (c.weight == 0.0) continue;
      const int l1 = c.lits[0];
      const int l2 = c.lits.size() == 2 ? c.lits[1] : c.lits[0];
      f.clauses.push_back({l1, l2, c.weight});
    }
    return f;
  }
  KSatFormula f(n);
  for (const RawClause& c : raw) {
    const Record rec{c.line, {}};
    checked<int>(rec, [&] { f.add_clause(c.lits, c.weight); return 0; });
  }
  return f;
}

}  // namespace

ParsedInput parse_instance(std::string_view text) {
  const std::vector<Record> records = tokenize(text);
  if (records.empty()) throw ParseError(1, "missing header line");
  const Record& header = records.front();
  expect_tokens(header, 3, "<format> <n> <m>");
  const std::string_view tag = header.tokens[0];
  const int n = parse_int(header, header.tokens[1], "variable count");
  const int m = parse_int(header, header.tokens[2], "record count");
  if (n < 0) throw ParseError(header.line, "negative variable count");
  if (m < 0) throw ParseError(header.line, "negative record count");

  const std::vector<Record> body(records.begin() + 1, records.end());
  if (static_cast<int>(body.size()) != m) {
    const int line = body.empty() ? header.line : body.back().line;
    throw ParseError(line, "header declares " + std::to_string(m) + " records, found " +
                               std::to_string(body.size()));
  }

  if (tag == "vcsp") return parse_vcsp(n, body);
  if (tag == "2lin") return parse_2lin(n, body);
  if (tag == "wcnf") return parse_wcnf(n, body);
  throw ParseError(header.line, "unknown format '" + std::string(tag) + "'");
}

std::string format_weight(double w) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

std::string to_text(const VcspInstance& inst) {
  std::ostringstream out;
  out << "vcsp " << inst.num_variables() << ' ' << inst.num_constraints() << '\n';
  for (const Constraint& c : inst.constraints())
    out << c.p.name() << ' ' << c.u << ' ' << c.v << ' ' << format_weight(c.weight) << '\n';
  return out.str();
}

std::string to_text(const TwoSatFormula& f) {
  std::ostringstream out;
  out << "wcnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const TwoSatClause& c : f.clauses)
    out << format_weight(c.weight) << ' ' << c.lit1 << ' ' << c.lit2 << " 0\n";
  return out.str();
}

std::string to_text(const TwoLinSystem& sys) {
  std::ostringstream out;
  out << "2lin " << sys.n << ' ' << sys.equations.size() << '\n';
  for (const TwoLinEquation& eq : sys.equations)
    out << eq.u << ' ' << eq.v << ' ' << eq.rhs << ' ' << format_weight(eq.weight) << '\n';
  return out.str();
}

std::string to_text(const KSatFormula& f) {
  std::ostringstream out;
  const bool offset = f.tautology_offset() > 0.0;
  out << "wcnf " << f.num_variables() << ' ' << (f.clauses().size() + (offset ? 1 : 0)) << '\n';
  if (offset) {
    // A tautological clause reproduces the constant term on re-parse.
    out << format_weight(f.tautology_offset()) << " 1 -1 0\n";
  }
  for (const KSatClause& c : f.clauses()) {
    out << format_weight(c.weight);
    for (int lit : c.literals) out << ' ' << lit;
    out << " 0\n";
  }
  return out.str();
}

std::string to_text(const DoubleCoverGraph& cover) {
  std::ostringstream out;
  out << "# bipartite double cover: base_n " << cover.base_n << ", " << cover.graph.num_edges()
      << " edges over " << cover.graph.num_vertices() << " vertices\n";
  for (const Edge& e : cover.graph.edges())
    out << 'v' << e.src + 1 << " v-" << e.dst - cover.base_n + 1 << ' '
        << format_weight(e.weight) << '\n';
  return out.str();
}

namespace {

nlohmann::ordered_json verification_json(const VerificationResult& result) {
  nlohmann::ordered_json j;
  j["max_rel_error"] = result.max_rel_error;
  j["zero_mismatch"] = result.zero_mismatch;
  if (result.witness) j["witness"] = result.witness->elements();
  return j;
}

}  // namespace

std::string to_json_text(const VerificationResult& result) {
  return verification_json(result).dump(2) + "\n";
}

std::string to_json_text(const SparsifyReport& report) {
  nlohmann::ordered_json j;
  j["eps"] = report.eps;
  j["seed"] = report.seed;
  j["total_in"] = report.total_in;
  j["total_out"] = report.total_out;
  j["classes"] = nlohmann::ordered_json::array();
  for (const ClassReport& c : report.classes) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["class"] = std::string(to_string(c.cls));
    e["in_count"] = c.in_count;
    e["out_count"] = c.out_count;
    j["classes"].push_back(std::move(e));
  }
  if (report.verified) j["verified"] = verification_json(*report.verified);
  return j.dump(2) + "\n";
}

}  // namespace vcsp
