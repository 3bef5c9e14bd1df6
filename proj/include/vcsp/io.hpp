#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "vcsp/applications.hpp"
#include "vcsp/double_cover.hpp"
#include "vcsp/hypergraph.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/oracle.hpp"
#include "vcsp/pipeline.hpp"

namespace vcsp {

// All formats are line based; `#` starts a comment, blank lines are skipped.
//
//   vcsp <n> <m>   then m lines   <pred-name> <u> <v> <w>
//   wcnf <n> <m>   then m lines   <w> <lit> ... <lit> 0
//   2lin <n> <m>   then m lines   <u> <v> <rhs> <w>
//
// Variables are 0-based in vcsp/2lin records; wcnf literals are signed
// 1-based ids. A wcnf whose clauses all have at most two literals parses as
// a TwoSatFormula (unit clauses repeat their literal); anything larger
// parses as a KSatFormula.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

using ParsedInput = std::variant<VcspInstance, TwoSatFormula, TwoLinSystem, KSatFormula>;

ParsedInput parse_instance(std::string_view text);

// Shortest round-trip decimal form of a weight.
std::string format_weight(double w);

std::string to_text(const VcspInstance& inst);
std::string to_text(const TwoSatFormula& f);
std::string to_text(const TwoLinSystem& sys);
std::string to_text(const KSatFormula& f);

// Cover listing with the signed 1-based labels v<i> / v-<j>.
std::string to_text(const DoubleCoverGraph& cover);

std::string to_json_text(const VerificationResult& result);
std::string to_json_text(const SparsifyReport& report);

}  // namespace vcsp
