#pragma once

#include <optional>
#include <string>

#include "orbibraid/free_product.hpp"
#include "orbibraid/orbifold.hpp"
#include "orbibraid/presentation.hpp"
#include "orbibraid/trace.hpp"

namespace orbibraid {

enum class CenterStatus {
  Trivial,
  Nontrivial,
  WholeGroupIsCenter,
  UnknownPerPaper,
  OutOfScopeSeeLiterature,
};

std::string to_string(CenterStatus status);
std::optional<CenterStatus> center_status_from_string(const std::string& s);

/// True for the statuses the CLI reports with exit code 3.
bool is_honest_unknown(CenterStatus status);

struct CenterVerdict {
  CenterStatus status = CenterStatus::UnknownPerPaper;
  std::string group;  // label of the group the verdict is about
  ProofTrace trace;
};

/// Names used inside traces: `spec` labels the orbifold, `group` its
/// orbifold fundamental group.
struct CenterLabels {
  std::string spec = "M";
  std::string group = "pi1(M)";
};

/// Center of the orbifold fundamental group for specs in C0 or C1, by the
/// case analysis on cone points and the underlying surface.
CenterVerdict center_pi1(const OrbifoldSpec& spec, const CenterLabels& labels = {});

struct RuleConclusion {
  bool fires = false;
  std::optional<Statement> conclusion;
  std::string justification;
};

/// Center of G1 *_H G2 is Z(G1) ∩ Z(G2) ∩ H, so it is trivial as soon as one
/// factor is nontrivial with trivial center.
RuleConclusion amalgam_center_rule(bool left_center_trivial, bool left_nontrivial);

/// Amalgam rule with the premises on the left factor, a free product of
/// cyclic groups, discharged by a bounded center search.
RuleConclusion amalgam_center_rule(const FreeProductContext& left,
                                   const CentralizerSearchOptions& evidence = {});

/// 1 -> K -> G -> Q -> 1 with Z(K) = Z(Q) = 1 gives Z(G) = 1. Returns nullopt
/// (inconclusive) unless both inputs are Trivial. The result's trace merges
/// both input traces and the extension step.
std::optional<CenterVerdict> extension_center_rule(const CenterVerdict& kernel,
                                                   const CenterVerdict& quotient,
                                                   const std::string& group = "G",
                                                   const std::string& anchor = {});

/// Non-cyclic one-relator group whose relator is a proper power: trivial
/// center. Throws InvariantViolation unless `p` has exactly one relator.
RuleConclusion one_relator_rule(const Presentation& p, const std::string& group = "G");

}  // namespace orbibraid
