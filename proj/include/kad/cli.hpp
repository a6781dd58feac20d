#pragma once

#include <iosfwd>
#include <string>

namespace kad::cli {

// Every command prints its report to `out` and diagnostics to `err`, and
// returns an ExitCode; library exceptions are mapped, never propagated.

enum ExitCode : int { ok = 0, failure = 1, parse_failure = 2, capability_missing = 3 };

/// `laws` is one of isemiring, kleene, tests, domain, converse, all.
int cmd_check(const std::string& source, const std::string& laws, std::ostream& out,
              std::ostream& err);

/// `targets` is a comma-separated list of 1-based states; `algo` is naive,
/// efficient or both. Sources may also be "random:N[:seed]", which provides
/// one random relation named "random".
int cmd_reach(const std::string& source, const std::string& relation, const std::string& targets,
              const std::string& algo, std::ostream& out, std::ostream& err);

/// Exactly one of `triple` and `proof` is non-empty.
int cmd_hoare(const std::string& source, const std::string& triple, const std::string& proof,
              std::ostream& out, std::ostream& err);

int cmd_termination(const std::string& source, const std::string& relation, std::ostream& out,
                    std::ostream& err);

}  // namespace kad::cli
