#include "orbibraid/center.hpp"

#include "orbibraid/error.hpp"

namespace orbibraid {

namespace {

const char* kAnchorFreeProduct =
    "center of a free product of cyclic groups: trivial with two or more nontrivial factors";
const char* kAnchorAmalgam = "amalgam center lemma: Z(G1 *_H G2) = Z(G1) ∩ Z(G2) ∩ H";
const char* kAnchorExtension = "extension center lemma: Z(K) = Z(H) = 1 implies Z(G) = 1";
const char* kAnchorOneRelator =
    "one-relator theorem (Karrass-Magnus-Solitar, Newman): non-cyclic one-relator group "
    "with torsion has trivial center";
const char* kAnchorSimpleTable = "simple surfaces: cylinder, torus, Moebius band, Klein bottle";
const char* kAnchorHypotheses = "center theorem hypotheses on cone points";
const char* kAnchorTrivialGroup = "disc and plane are simply connected";

std::string orders_list(const std::vector<int>& orders) {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? "," : "") + std::to_string(orders[i]);
  return out;
}

std::string torsion_list(const std::vector<std::int64_t>& torsion) {
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) out += (i ? "," : "") + std::to_string(torsion[i]);
  return out;
}

void case2_splitting(ProofTrace& t, const std::string& g, const std::string& why) {
  const std::string free_piece = g + ".free";
  const std::string rest = g + ".rest";
  t.add_fact(stmt("case2_splitting", {g, why}), "classification");
  t.add_fact(stmt("amalgam", {g, free_piece, rest, "Z"}), "classification");
  t.add_fact(stmt("free_product_of_cyclics", {free_piece, "inf,inf"}), "classification");
  t.add_fact(stmt("nontrivial", {free_piece}), "classification");
  t.derive(Rule::FreeProductOfCyclics, kAnchorFreeProduct,
           {stmt("free_product_of_cyclics", {free_piece, "inf,inf"})});
  t.derive(Rule::AmalgamRule, kAnchorAmalgam,
           {stmt("amalgam", {g, free_piece, rest, "Z"}), stmt("nontrivial", {free_piece}),
            stmt("center_trivial", {free_piece})});
}

std::string case2_reason(const OrbifoldSpec& spec) {
  if (spec.orientable && spec.genus == 0)
    return "genus 0 with " + std::to_string(spec.ends()) + " ends";
  if (spec.orientable && spec.genus == 1)
    return "genus 1 with " + std::to_string(spec.ends()) + " ends";
  if (spec.orientable) return "orientable genus " + std::to_string(spec.genus);
  return std::to_string(spec.genus) + " crosscaps with " + std::to_string(spec.ends()) + " ends";
}

}  // namespace

std::string to_string(CenterStatus status) {
  switch (status) {
    case CenterStatus::Trivial: return "Trivial";
    case CenterStatus::Nontrivial: return "Nontrivial";
    case CenterStatus::WholeGroupIsCenter: return "WholeGroupIsCenter";
    case CenterStatus::UnknownPerPaper: return "UnknownPerPaper";
    case CenterStatus::OutOfScopeSeeLiterature: return "OutOfScopeSeeLiterature";
  }
  return "UnknownPerPaper";
}

std::optional<CenterStatus> center_status_from_string(const std::string& s) {
  for (auto st : {CenterStatus::Trivial, CenterStatus::Nontrivial, CenterStatus::WholeGroupIsCenter,
                  CenterStatus::UnknownPerPaper, CenterStatus::OutOfScopeSeeLiterature})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

bool is_honest_unknown(CenterStatus status) {
  return status == CenterStatus::UnknownPerPaper ||
         status == CenterStatus::OutOfScopeSeeLiterature;
}

CenterVerdict center_pi1(const OrbifoldSpec& spec, const CenterLabels& labels) {
  const auto cls = classify(spec);
  if (!cls.admissible()) throw InvariantViolation("class_C0_or_C1", cls.reason);

  CenterVerdict v;
  v.group = labels.group;
  ProofTrace& t = v.trace;
  const std::string& g = labels.group;
  const std::string& m = labels.spec;
  t.add_fact(stmt("orbifold", {m, spec.describe()}), "spec");
  t.add_fact(stmt("orbifold_group", {g, m}), "spec");

  const bool simply_connected = underlying_simply_connected(spec);
  const std::string simple = simple_surface_name(spec.underlying());
  const int k = spec.cone_count();

  if (simply_connected && k == 0) {
    const Statement fails = stmt("hypothesis_fails", {m, failed_center_hypothesis(spec)});
    t.add_fact(fails, "spec");
    t.derive(Rule::HypothesisFailure, kAnchorHypotheses, {fails});
    const Statement cite = stmt("cites", {"standard", "trivial_group", g});
    t.add_fact(cite, "literature");
    t.derive(Rule::LiteratureCitation, kAnchorTrivialGroup, {cite});
    v.status = CenterStatus::OutOfScopeSeeLiterature;
    return v;
  }

  if (simply_connected) {
    const Statement fpc = stmt("free_product_of_cyclics", {g, orders_list(spec.cone_orders)});
    t.add_fact(fpc, "spec");
    t.derive(Rule::FreeProductOfCyclics, kAnchorFreeProduct, {fpc});
    v.status = k == 1 ? CenterStatus::WholeGroupIsCenter : CenterStatus::Trivial;
    return v;
  }

  if (!simple.empty() && k == 0) {
    const Statement fails = stmt("hypothesis_fails", {m, failed_center_hypothesis(spec)});
    t.add_fact(fails, "spec");
    t.derive(Rule::HypothesisFailure, kAnchorHypotheses, {fails});
    const Statement surface = stmt("surface_group", {g, simple});
    t.add_fact(surface, "spec");
    t.derive(Rule::SimpleSurfaceTable, kAnchorSimpleTable, {surface});
    v.status = CenterStatus::Nontrivial;
    return v;
  }

  if (!simple.empty() && k >= 2) {
    // Split along the boundary of a disc holding every cone point.
    const std::string disc = g + ".cone_disc";
    const std::string outer = g + ".outer";
    const Statement fpc = stmt("free_product_of_cyclics", {disc, orders_list(spec.cone_orders)});
    t.add_fact(stmt("amalgam", {g, disc, outer, "Z"}), "classification");
    t.add_fact(fpc, "spec");
    t.add_fact(stmt("nontrivial", {disc}), "spec");
    t.derive(Rule::FreeProductOfCyclics, kAnchorFreeProduct, {fpc});
    t.derive(Rule::AmalgamRule, kAnchorAmalgam,
             {stmt("amalgam", {g, disc, outer, "Z"}), stmt("nontrivial", {disc}),
              stmt("center_trivial", {disc})});
    v.status = CenterStatus::Trivial;
    return v;
  }

  if (!simple.empty() && k == 1) {
    const auto which = stored_presentation_for(spec);
    const Presentation p = stored_presentation(*which, spec.cone_orders.front());
    auto rule = one_relator_rule(p, g);
    if (auto note = stored_presentation_discrepancy(spec)) t.warnings.push_back(*note);
    t.add_fact(stmt("stored_presentation", {g, to_string(*which)}), "spec");
    const AbelianInvariants inv = abelianization(p);
    std::string gens;
    for (std::size_t i = 0; i < p.generators.size(); ++i) gens += (i ? "," : "") + p.generators[i].name;
    const Statement one = stmt("one_relator", {g, gens, p.relators.front().to_string()});
    const Statement ab = stmt("abelianization", {g, std::to_string(inv.rank), torsion_list(inv.torsion)});
    t.add_fact(one, "spec");
    t.add_fact(ab, "computation");
    if (!rule.fires) {
      t.warnings.push_back("one-relator rule did not fire: " + rule.justification);
      v.status = CenterStatus::UnknownPerPaper;
      return v;
    }
    t.derive(Rule::OneRelatorTorsion, kAnchorOneRelator, {one, ab});
    v.status = CenterStatus::Trivial;
    return v;
  }

  case2_splitting(t, g, case2_reason(spec));
  v.status = CenterStatus::Trivial;
  return v;
}

RuleConclusion amalgam_center_rule(bool left_center_trivial, bool left_nontrivial) {
  RuleConclusion r;
  r.fires = left_center_trivial && left_nontrivial;
  if (r.fires) {
    r.conclusion = stmt("center_trivial", {"G1 *_H G2"});
    r.justification = "Z(G1 *_H G2) = Z(G1) ∩ Z(G2) ∩ H and Z(G1) = 1";
  } else {
    r.justification = left_nontrivial ? "left factor has nontrivial center"
                                      : "left factor is the trivial group";
  }
  return r;
}

RuleConclusion amalgam_center_rule(const FreeProductContext& left,
                                   const CentralizerSearchOptions& evidence) {
  const auto central = bounded_center_search(left, evidence);
  const bool only_identity = central.size() == 1 && central.front().identity();
  RuleConclusion r = amalgam_center_rule(only_identity, true);
  r.justification += " (bounded center search to " + std::to_string(evidence.max_syllables) +
                     " syllables found " + std::to_string(central.size() - 1) +
                     " nontrivial central words)";
  return r;
}

std::optional<CenterVerdict> extension_center_rule(const CenterVerdict& kernel,
                                                   const CenterVerdict& quotient,
                                                   const std::string& group,
                                                   const std::string& anchor) {
  if (kernel.status != CenterStatus::Trivial || quotient.status != CenterStatus::Trivial)
    return std::nullopt;
  CenterVerdict v;
  v.status = CenterStatus::Trivial;
  v.group = group;
  v.trace.merge(kernel.trace);
  v.trace.merge(quotient.trace);
  const Statement ext = stmt("extension", {group, kernel.group, quotient.group});
  v.trace.add_fact(ext, "axiom");
  v.trace.derive(Rule::ExtensionRule, anchor.empty() ? kAnchorExtension : anchor,
                 {ext, stmt("center_trivial", {kernel.group}),
                  stmt("center_trivial", {quotient.group})});
  return v;
}

RuleConclusion one_relator_rule(const Presentation& p, const std::string& group) {
  if (p.relators.size() != 1)
    throw InvariantViolation("exactly_one_relator",
                             "presentation has " + std::to_string(p.relators.size()) + " relators");
  p.validate();
  RuleConclusion r;
  const auto root = maximal_root(p.relators.front());
  const AbelianInvariants inv = abelianization(p);
  if (root.exponent < 2) {
    r.justification = "relator is not a proper power";
    return r;
  }
  if (is_cyclic(inv)) {
    r.justification = "abelianization " + inv.to_string() + " is cyclic";
    return r;
  }
  r.fires = true;
  r.conclusion = stmt("center_trivial", {group});
  r.justification = "relator is (" + root.root.to_string() + ")^" + std::to_string(root.exponent) +
                    ", abelianization " + inv.to_string() + " is not cyclic";
  return r;
}

}  // namespace orbibraid
