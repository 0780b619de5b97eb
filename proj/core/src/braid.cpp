#include "orbibraid/braid.hpp"

#include "orbibraid/error.hpp"
#include "orbibraid/free_product.hpp"

namespace orbibraid {

namespace {

const char* kAnchorPureSequence =
    "pure orbifold braid exact sequence 1 -> PB_{n-r}(M~) -> PB_n(M) -> PB_r(M) -> 1";
const char* kAnchorCoveringSequence =
    "covering exact sequence 1 -> PB_n(M) -> B_n(M) -> S_n -> 1";
const char* kAnchorHypotheses = "center theorem hypotheses on cone points";
const char* kAnchorNiceness = "puncturing N and M at the same regular point preserves niceness";
const char* kAnchorSuborbifold = "nice sub-orbifolds are pi1-injective (boundary injectivity + Van Kampen)";
const char* kAnchorPureInduction =
    "diagram chase on the pure sequences with r = 1 for N and M";
const char* kAnchorProjection = "projection PB_m(M) -> PB_n(M) to the first n coordinates";
const char* kAnchorFullDiagram = "diagram chase on the covering sequences with i: S_n -> S_m";
const char* kAnchorSymmetric = "inclusion S_n -> S_m";

std::string punctured(const std::string& base, int i) {
  return i == 0 ? base : base + "~" + std::to_string(i);
}

std::string pb(int k, const std::string& space) {
  return "PB_" + std::to_string(k) + "(" + space + ")";
}

std::string b(int k, const std::string& space) {
  return "B_" + std::to_string(k) + "(" + space + ")";
}

void require_strings(int n) {
  if (n < 1) throw InvariantViolation("strings_ge_1", "n = " + std::to_string(n));
}

void require_admissible(const OrbifoldSpec& spec) {
  const auto cls = classify(spec);
  if (!cls.admissible()) throw InvariantViolation("class_C0_or_C1", cls.reason);
}

// Verdict for n >= 2 when the center theorem's hypotheses fail.
CenterVerdict outside_hypotheses(const OrbifoldSpec& spec, const std::string& group, int n,
                                 bool pure) {
  CenterVerdict v;
  v.group = group;
  ProofTrace& t = v.trace;
  t.add_fact(stmt("orbifold", {"M", spec.describe()}), "spec");
  const Statement fails = stmt("hypothesis_fails", {"M", failed_center_hypothesis(spec)});
  t.add_fact(fails, "spec");
  t.derive(Rule::HypothesisFailure, kAnchorHypotheses, {fails});

  if (underlying_simply_connected(spec) && spec.smooth()) {
    const Statement cite = stmt("cites", {pure ? "classical pure braid group of the disc"
                                               : "Chow: braid group of the disc",
                                          "center_infinite_cyclic", group});
    t.add_fact(cite, "literature");
    t.derive(Rule::LiteratureCitation, "center of the (pure) braid group of the disc for n >= 2",
             {cite});
    v.status = CenterStatus::OutOfScopeSeeLiterature;
  } else if (underlying_simply_connected(spec)) {
    t.warnings.push_back("disc with one cone point: only PB_1 = B_1 = Z_q is known; n = " +
                         std::to_string(n) + " is not decided");
    v.status = CenterStatus::UnknownPerPaper;
  } else {
    t.warnings.push_back("smooth simple surface: braid group centers are computed in the "
                         "surface braid literature (Paris-Rolfsen), not here");
    v.status = CenterStatus::OutOfScopeSeeLiterature;
  }
  return v;
}

}  // namespace

std::string BraidGroupId::label() const {
  return pure ? pb(strings, "M") : b(strings, "M");
}

CenterVerdict symmetric_center(int n) {
  require_strings(n);
  CenterVerdict v;
  v.group = "S_" + std::to_string(n);
  if (n <= 8) {
    const auto center = symmetric_center_elements(n);
    const bool trivial = center.size() == 1;
    v.trace.add_fact(stmt(trivial ? "center_trivial" : "center_whole", {v.group}),
                     "computation: enumeration of S_" + std::to_string(n));
    v.status = trivial ? CenterStatus::Trivial : CenterStatus::Nontrivial;
    return v;
  }
  const Statement cite = stmt("cites", {"standard", "center_trivial", v.group});
  v.trace.add_fact(cite, "literature");
  v.trace.derive(Rule::LiteratureCitation, "S_n has trivial center for n >= 3", {cite});
  v.status = CenterStatus::Trivial;
  return v;
}

CenterVerdict center_pure_braid(const OrbifoldSpec& spec, int n) {
  require_strings(n);
  require_admissible(spec);
  if (!satisfies_center_hypotheses(spec)) {
    if (n == 1) return center_pi1(spec, {"M", pb(1, "M")});
    return outside_hypotheses(spec, pb(n, "M"), n, true);
  }

  CenterVerdict acc = center_pi1(spec, {"M", pb(1, "M")});
  acc.trace.steps.back().induction = 1;
  for (int k = 2; k <= n; ++k) {
    const std::string fiber = punctured("M", k - 1);
    CenterVerdict kernel =
        center_pi1(remove_regular_points(spec, k - 1), {fiber, pb(1, fiber)});
    kernel.trace.add_fact(stmt("punctured", {fiber, "M", std::to_string(k - 1)}), "spec");
    auto next = extension_center_rule(kernel, acc, pb(k, "M"), kAnchorPureSequence);
    if (!next) throw std::logic_error("puncturing lost the center hypotheses");
    acc = std::move(*next);
    acc.trace.steps.back().induction = k;
  }
  return acc;
}

CenterVerdict center_full_braid(const OrbifoldSpec& spec, int n) {
  require_strings(n);
  require_admissible(spec);
  if (n == 1) return center_pi1(spec, {"M", b(1, "M")});
  if (!satisfies_center_hypotheses(spec)) return outside_hypotheses(spec, b(n, "M"), n, false);
  if (n == 2) {
    CenterVerdict v;
    v.group = b(2, "M");
    v.status = CenterStatus::UnknownPerPaper;
    v.trace.add_fact(stmt("orbifold", {"M", spec.describe()}), "spec");
    v.trace.warnings.push_back("S_2 has nontrivial center, so the extension argument does not "
                               "apply; the center of B_2(M) is not known");
    return v;
  }
  const CenterVerdict pure = center_pure_braid(spec, n);
  const CenterVerdict sym = symmetric_center(n);
  auto full = extension_center_rule(pure, sym, b(n, "M"), kAnchorCoveringSequence);
  if (!full) throw std::logic_error("extension by S_n did not close");
  return *full;
}

CenterVerdict braid_center(const BraidGroupId& id) {
  return id.pure ? center_pure_braid(id.base, id.strings) : center_full_braid(id.base, id.strings);
}

std::string to_string(InjectivityStatus status) {
  return status == InjectivityStatus::Injective ? "Injective" : "TheoremInapplicable";
}

namespace {

Statement pi1_evidence(const OrbifoldSpec& sub, const std::string& label) {
  if (!underlying_simply_connected(sub)) return stmt("pi1_evidence", {label, "not_simply_connected"});
  if (sub.smooth()) return stmt("pi1_evidence", {label, "trivial"});
  if (sub.cone_count() == 1)
    return stmt("pi1_evidence", {label, "cyclic", std::to_string(sub.cone_orders.front())});
  std::vector<Order> orders;
  std::string list;
  for (std::size_t i = 0; i < sub.cone_orders.size(); ++i) {
    orders.push_back(sub.cone_orders[i]);
    list += (i ? "," : "") + std::to_string(sub.cone_orders[i]);
  }
  const FreeProductContext ctx(orders);
  std::vector<FactorSyllable> boundary;
  for (std::size_t f = 0; f < ctx.factor_count(); ++f) boundary.push_back({f, 1});
  return stmt("pi1_evidence",
              {label, "boundary_word_order", list, to_string(element_order(ctx, normal_form(ctx, boundary)))});
}

}  // namespace

InjectivityVerdict injectivity(const SuborbifoldEmbedding& embedding, int n, int m, bool pure) {
  require_strings(n);
  if (n > m)
    throw InvariantViolation("n_le_m", "n = " + std::to_string(n) + " exceeds m = " + std::to_string(m));
  require_admissible(embedding.ambient);
  const NiceReport nice = is_nice(embedding);

  InjectivityVerdict v;
  ProofTrace& t = v.trace;
  t.add_fact(stmt("orbifold", {"M", embedding.ambient.describe()}), "spec");
  t.add_fact(stmt("orbifold", {"N", embedding.sub.describe()}), "spec");
  t.add_fact(stmt("base_points", {std::to_string(n) + " in N", std::to_string(m - n) + " in M - N"}),
             "hypothesis");

  if (!nice.nice) {
    v.status = InjectivityStatus::TheoremInapplicable;
    v.violations = nice.violations;
    for (const auto& viol : nice.violations) {
      const Statement fails = stmt("hypothesis_fails",
                                   {"N in M", "component " + std::to_string(viol.component) + ": " + viol.reason});
      t.add_fact(fails, "computation");
      t.derive(Rule::HypothesisFailure, "nice sub-orbifold conditions on complement components", {fails});
    }
    const OrbifoldSpec& sub = embedding.sub;
    const bool finite_pi1 = underlying_simply_connected(sub) && sub.cone_count() <= 1;
    if (!finite_pi1)
      v.notes.push_back("pi1 of the sub-orbifold is infinite; niceness is what guarantees "
                        "pi1-level injectivity here, so the injectivity theorem does not apply");
    v.notes.push_back("TheoremInapplicable does not assert that the map fails to be injective");
    return v;
  }

  t.add_fact(stmt("nice", {"N", "M"}), "computation");
  for (int i = 1; i < n; ++i) {
    const Statement pair = stmt("puncture_pair", {punctured("N", i), punctured("M", i),
                                                  punctured("N", i - 1), punctured("M", i - 1)});
    t.add_fact(pair, "spec");
    t.derive(Rule::NicenessPuncture, kAnchorNiceness,
             {stmt("nice", {punctured("N", i - 1), punctured("M", i - 1)}), pair});
  }
  // Level-one injectivity for every punctured pair, deepest first.
  for (int i = n - 1; i >= 0; --i) {
    const OrbifoldSpec sub_i = i == 0 ? embedding.sub : remove_regular_points(embedding.sub, i);
    const Statement ev = pi1_evidence(sub_i, punctured("N", i));
    t.add_fact(ev, "computation");
    t.derive(Rule::SuborbifoldInjectivity, kAnchorSuborbifold,
             {stmt("nice", {punctured("N", i), punctured("M", i)}), ev});
    if (i == n - 1) t.steps.back().induction = 1;
  }
  for (int j = 2; j <= n; ++j) {
    const int i = n - j;
    const std::string X = punctured("N", i), Y = punctured("M", i);
    const std::string X1 = punctured("N", i + 1), Y1 = punctured("M", i + 1);
    const Statement top = stmt("extension", {pb(j, X), pb(j - 1, X1), pb(1, X)});
    const Statement bottom = stmt("extension", {pb(j, Y), pb(j - 1, Y1), pb(1, Y)});
    t.add_fact(top, "axiom");
    t.add_fact(bottom, "axiom");
    t.derive(Rule::ExtensionInjectivity, kAnchorPureInduction,
             {top, bottom, stmt("injective", {pb(j - 1, X1), pb(j - 1, Y1)}),
              stmt("injective", {pb(1, X), pb(1, Y)})});
    t.steps.back().induction = j;
  }
  if (n < m) {
    const Statement comp = stmt("composite", {pb(n, "N"), pb(m, "M"), pb(n, "M")});
    t.add_fact(comp, "axiom");
    t.derive(Rule::ProjectionFactor, kAnchorProjection,
             {stmt("injective", {pb(n, "N"), pb(n, "M")}), comp});
  }
  if (!pure) {
    const Statement strings = stmt("strings", {std::to_string(n), std::to_string(m)});
    t.add_fact(strings, "spec");
    t.derive(Rule::SymmetricInclusion, kAnchorSymmetric, {strings});
    const Statement top = stmt("extension", {b(n, "N"), pb(n, "N"), "S_" + std::to_string(n)});
    const Statement bottom = stmt("extension", {b(m, "M"), pb(m, "M"), "S_" + std::to_string(m)});
    t.add_fact(top, "axiom");
    t.add_fact(bottom, "axiom");
    t.derive(Rule::ExtensionInjectivity, kAnchorFullDiagram,
             {top, bottom, stmt("injective", {pb(n, "N"), pb(m, "M")}),
              stmt("injective", {"S_" + std::to_string(n), "S_" + std::to_string(m)})});
  }
  v.status = InjectivityStatus::Injective;
  return v;
}

}  // namespace orbibraid
