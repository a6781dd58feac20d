#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kad/domain.hpp"
#include "kad/finite_semiring.hpp"
#include "kad/hoare.hpp"
#include "kad/models/relation.hpp"
#include "kad/test_algebra.hpp"

namespace kad {

/// Everything a CLI command can refer to by name. Files are JSON with the keys
/// "semiring", "tests", "relations", "programs", "env" and "proofs"; any of
/// them may be absent. Element names, not indices, appear in files.
///
///   "semiring":  {"carrier": [..], "add": [[..]], "mul": [[..]], "zero": n,
///                 "one": n, "star": [..]?, "conv": [..]?}
///   "tests":     {"members": [..], "compl": {name: name}?}
///   "relations": {name: {"n": 3, "edges": [[1, 2], [2, 3]]}}
///   "programs":  {name: "{p} while p do a {!p}"}
///   "env":       {name: element or relation name}
///   "proofs":    {name: {"rule": "composition", "conclusion": "{p} a ; b {r}",
///                        "premises": [..], "label": ".."?}}
struct Workspace {
  std::optional<FiniteSemiring> semiring;
  std::optional<TestAlgebra> tests;
  std::map<std::string, Relation> relations;
  std::map<std::string, std::string> programs;
  std::map<std::string, std::string> env;
  std::map<std::string, ProofTree> proofs;

  /// Common state count of the relations; 0 when there are none.
  int states() const;
};

/// Throws parse_error for malformed JSON, unknown names, non-total tables or
/// relations over differing state counts.
Workspace parse_workspace(const std::string& json_text);
std::string serialize_workspace(const Workspace& ws, int indent = 2);

/// "builtin:NAME" or a path to a JSON file. Throws parse_error when the file
/// cannot be read or the builtin does not exist.
Workspace load_workspace(const std::string& source);

/// Conway's five algebras with the tests {0, 1}, and rel1..rel3 with all
/// subidentities as tests.
const std::vector<std::string>& builtin_names();
Workspace builtin_workspace(const std::string& name);
/// The builtin's semiring, tests and computed predomain/precodomain.
DomainStructure builtin_domain(const std::string& name);

/// Predomain and precodomain of the workspace tables. Throws
/// missing_capability without a semiring or tests.
DomainStructure workspace_domain(const Workspace& ws);

/// Parses a proof object (see above).
ProofTree parse_proof(const std::string& json_text);

}  // namespace kad
