#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "drg/derange.hpp"
#include "drg/fqlin.hpp"
#include "drg/permcore.hpp"

namespace drg::cli {

/// Parsed action document:
///   {"name": str?, "degree": n, "generators": [[images] | "(0 1 2)(3 4)", ...],
///    "action": {"kind": "natural" | "cosets" | "subsets", "subgroup": [...], "k": int}?,
///    "normal": [...]?, "element": [images] | "cycles"?}
/// Unknown fields are rejected with a diagnostic naming the field.
struct ActionSpec {
  std::string name;
  GroupAction action;
  std::optional<PermGroup> normal;
  std::optional<Permutation> element;
};

ActionSpec parse_action_spec(const nlohmann::json& doc, std::size_t cap = kDefaultCap);
Permutation parse_permutation(const nlohmann::json& value, std::size_t degree, const std::string& field);

struct ClassicalSpecDoc {
  Family family;
  std::size_t n;
  unsigned q;
};
/// {"family": "Sp", "n": 4, "q": 2}
ClassicalSpecDoc parse_classical_spec(const nlohmann::json& doc);

/// Named fixtures usable wherever a spec is expected (e.g. "S4-natural").
std::vector<std::string> fixture_names();
/// Throws InvalidInput for unknown names.
nlohmann::json fixture(const std::string& name);

/// Resolves a spec argument: a fixture name, an inline JSON document, or a
/// path to a JSON file.
nlohmann::json load_spec(const std::string& spec);

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;
  std::string spec;                 // fixture name, inline JSON or path
  std::size_t cap = kDefaultCap;
  std::size_t depth = 40;
  Format format = Format::Json;
  std::optional<std::string> output;
  // subcommand options
  std::string weyl_type;
  std::size_t rank = 0;
  std::vector<std::size_t> young;
  std::string weyl_subgroup;        // "D" (inside B) or "A2" (inside G2)
  bool nontrivial_coset = false;    // weyl-delta: use the sign-flip coset
  std::string family;
  std::size_t n = 0;
  unsigned q = 0;
  std::string method = "brute";
  std::string suite;                // verify target
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitFailed = 4;
inline constexpr int kExitInternal = 1;

struct Report {
  nlohmann::json document;  // {"command", "inputs", "results", "pass"}
  int exit_code = kExitOk;
};

/// Validates the config, dispatches and maps errors to exit codes; never throws
/// for library errors.
Report run(const RunConfig& config);
/// JSON (pretty, deterministic key order) or CSV text for a report.
std::string render(const Report& report, Format format);

int exit_code_for(ErrorKind kind) noexcept;

/// Suites behind `verify`: bounds, cosets, hall, lemmas, classical, weyl,
/// limits, shadow.  Weyl cases whose symmetric group exceeds the cap are
/// reported as skipped rows that pass.
const std::vector<std::string>& suite_names();
SuiteReport verify_suite(const std::string& name, std::size_t cap = kDefaultCap);

} // namespace drg::cli
