#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msp/algebra.hpp"
#include "msp/binomial.hpp"
#include "msp/bseries.hpp"

namespace msp {

// Resolution order: explicit flag, COBORDISM_DATA, compiled-in default.
std::filesystem::path data_dir(const std::string& flag_value = "");

struct DataError : std::runtime_error {
  DataError(const std::filesystem::path& file, int line, const std::string& what)
      : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what) {}
};

// Target of an operation-action record: a c-generator or a u-generator.
struct ActionTarget {
  GenId gen;
  bool operator<(const ActionTarget& o) const { return gen.code() < o.gen.code(); }
};

struct ActionRecord {
  OpIndex omega;
  ActionTarget target;
  Poly value;
  int line = 0;
  std::string source;
};

struct ActionKey {
  std::vector<uint32_t> parts;  // ascending
  uint16_t target_code = 0;
  auto operator<=>(const ActionKey&) const = default;
};

class ActionDb {
 public:
  // record := 'S' partlist '|' targetgen '->' poly ; '#' comments
  void load_actions(const std::filesystem::path& file, const std::string& source_tag);
  // 'PHI' uint '=' poly
  void load_projections(const std::filesystem::path& file);

  const ActionRecord* find(const OpIndex& omega, GenId target) const;
  // distinct operation indices appearing among the loaded records
  std::vector<OpIndex> omegas() const;
  // replace (or insert) one record in memory; for variant reporting and
  // fault-injection tests
  void override_record(const OpIndex& omega, GenId target, Poly value,
                       const std::string& source);
  const Poly* projection(int m) const;
  const std::map<int, Poly>& projections() const { return projections_; }
  size_t record_count() const { return records_.size(); }

  // Projection of a Phi-vector into the E1 term: theta1 -> u1,
  // Phi_{2^{i-2}} -> u_i, other Phi_j -> stored projection.
  // nullopt when some slot has no stored expansion.
  std::optional<Poly> project(const PhiVector& v) const;

 private:
  std::map<ActionKey, ActionRecord> records_;
  std::map<int, Poly> projections_;
};

// Named element tables (generator lists with declared t-grading):
//   name t '=' poly
struct NamedElement {
  std::string name;
  long t = 0;
  Poly expansion;
};
std::vector<NamedElement> load_named_elements(const std::filesystem::path& file);

// Explicit operation-value rows:
//   ROW partlist | phi N -> (phi M | theta1 | 0) [tag]
struct OpValueRow {
  OpIndex omega;
  int n = 0;
  PhiVector value;
  std::string tag;  // "", "printed-discrepancy", "corrected", ...
  int line = 0;
};
std::vector<OpValueRow> load_op_rows(const std::filesystem::path& file);

// Derivation-step list: 'CLAIM' m ':' partlist
struct Claim {
  int m = 0;
  OpIndex omega;
  int line = 0;
};
std::vector<Claim> load_claims(const std::filesystem::path& file);

// Polynomial parser extended with named-element substitution.
using SymbolTable = std::map<std::string, Poly>;
Poly parse_expr(std::string_view text, const SymbolTable& symbols);

}  // namespace msp
