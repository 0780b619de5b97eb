#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbibraid {

/// Atomic proposition `predicate(arg1; arg2; ...)`. Arguments may contain
/// balanced parentheses but no top-level ';'.
struct Statement {
  std::string predicate;
  std::vector<std::string> args;

  std::string to_string() const;
  static Statement parse(std::string_view text);

  friend bool operator==(const Statement&, const Statement&) = default;
};

Statement stmt(std::string predicate, std::vector<std::string> args);

/// Inference rules. The string names returned by to_string are stable.
enum class Rule {
  FreeProductOfCyclics,
  AmalgamRule,
  ExtensionRule,
  OneRelatorTorsion,
  SimpleSurfaceTable,
  HypothesisFailure,
  LiteratureCitation,
  NicenessPuncture,
  SuborbifoldInjectivity,
  ExtensionInjectivity,
  ProjectionFactor,
  SymmetricInclusion,
};

std::string to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);

/// Premise taken without derivation, tagged with where it comes from:
/// "spec" (read off the orbifold data), "computation" (re-checkable),
/// "classification", "axiom" (exact sequences), "literature".
struct Fact {
  Statement statement;
  std::string source;

  friend bool operator==(const Fact&, const Fact&) = default;
};

struct ProofStep {
  Rule rule = Rule::LiteratureCitation;
  std::string anchor;
  std::vector<Statement> inputs;
  Statement conclusion;
  /// Position in a braid-level induction (1..n) when the step closes one.
  std::optional<int> induction;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct ProofTrace {
  std::vector<Fact> facts;
  std::vector<ProofStep> steps;
  std::vector<std::string> warnings;

  bool has_fact(const Statement& s) const;
  void add_fact(Statement s, std::string source);

  /// Applies `rule` to `inputs` and records the step. Throws std::logic_error
  /// when the rule does not fire, which would be an engine bug.
  const Statement& derive(Rule rule, std::string anchor, std::vector<Statement> inputs);

  /// Appends facts, steps and warnings of `other`, skipping duplicates.
  void merge(const ProofTrace& other);

  const Statement* final_conclusion() const;
};

/// What `rule` concludes from `inputs`, or nullopt when it does not fire.
std::optional<Statement> apply_rule(Rule rule, const std::vector<Statement>& inputs);

struct ReplayReport {
  bool ok = true;
  std::vector<std::string> errors;
};

/// Re-runs every step: each input must be a recorded fact or an earlier
/// conclusion, and the rule applied to the inputs must give the recorded
/// conclusion.
ReplayReport replay(const ProofTrace& trace);

}  // namespace orbibraid
