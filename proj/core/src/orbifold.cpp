#include "orbibraid/orbifold.hpp"

#include <algorithm>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

namespace {

std::string format_orders(const std::vector<int>& orders) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) os << ',';
    os << orders[i];
  }
  os << ']';
  return os.str();
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

OrbifoldSpec OrbifoldSpec::underlying() const {
  OrbifoldSpec s = *this;
  s.cone_orders.clear();
  return s;
}

void OrbifoldSpec::validate() const {
  if (genus < 0 || boundary < 0 || punctures < 0)
    throw InvariantViolation("nonnegative_counts",
                             "genus, boundary and punctures must be >= 0");
  if (!orientable && genus < 1)
    throw InvariantViolation("nonorientable_genus_ge_1",
                             "a non-orientable surface has at least one crosscap");
  for (int q : cone_orders)
    if (q < 2)
      throw InvariantViolation("cone_order_ge_2",
                               "cone order " + std::to_string(q) + " is below 2");
}

std::string OrbifoldSpec::describe() const {
  std::ostringstream os;
  os << (orientable ? "orientable" : "non-orientable") << " g=" << genus
     << " b=" << boundary << " p=" << punctures
     << " cones=" << format_orders(cone_orders);
  return os.str();
}

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::C0: return "C0";
    case SurfaceClass::C1: return "C1";
    case SurfaceClass::Excluded: return "Excluded";
  }
  return "Excluded";
}

ClassMembership classify(const OrbifoldSpec& spec) {
  spec.validate();
  if (spec.orientable && spec.genus == 0) {
    if (spec.ends() >= 1) return {SurfaceClass::C0, {}};
    return {SurfaceClass::Excluded, "closed genus-0 orientable underlying surface (sphere)"};
  }
  if (!spec.orientable && spec.genus == 1 && spec.ends() == 0)
    return {SurfaceClass::Excluded, "projective plane underlying surface"};
  return {SurfaceClass::C1, {}};
}

std::string simple_surface_name(const OrbifoldSpec& spec) {
  const int e = spec.ends();
  if (spec.orientable) {
    if (spec.genus == 0 && e == 2) return "cylinder";
    if (spec.genus == 1 && e == 0) return "torus";
    return {};
  }
  if (spec.genus == 1 && e == 0) return "projective_plane";
  if (spec.genus == 1 && e == 1) return "mobius";
  if (spec.genus == 2 && e == 0) return "klein";
  return {};
}

bool is_simple_surface(const OrbifoldSpec& spec) {
  spec.validate();
  if (!spec.smooth())
    throw InvariantViolation("no_cone_points",
                             "simplicity is a property of surfaces without cone points");
  return !simple_surface_name(spec).empty();
}

bool underlying_is_simple(const OrbifoldSpec& spec) {
  return is_simple_surface(spec.underlying());
}

bool underlying_simply_connected(const OrbifoldSpec& spec) {
  return spec.orientable && spec.genus == 0 && spec.ends() <= 1;
}

std::string failed_center_hypothesis(const OrbifoldSpec& spec) {
  if (!classify(spec).admissible())
    throw InvariantViolation("class_C0_or_C1", "spec is " + classify(spec).reason);
  const bool simple = underlying_is_simple(spec);
  if (spec.smooth() && simple) return "no cone point and a simple surface";
  if (simple && spec.cone_count() < 1)
    return "simple underlying surface without a cone point";
  if (underlying_simply_connected(spec) && spec.cone_count() < 2)
    return "simply connected underlying surface with fewer than two cone points";
  return {};
}

bool satisfies_center_hypotheses(const OrbifoldSpec& spec) {
  return failed_center_hypothesis(spec).empty();
}

OrbifoldSpec remove_regular_points(const OrbifoldSpec& spec, int count) {
  if (count < 1)
    throw InvariantViolation("positive_point_count", "must remove at least one point");
  OrbifoldSpec out = spec;
  out.punctures += count;
  return out;
}

void ComplementComponent::validate() const {
  spec.validate();
  if (sorted(cone_orders) != sorted(spec.cone_orders))
    throw InvariantViolation("component_cones_match_spec",
                             "component cone_orders differ from its spec");
  if (simply_connected_underlying != underlying_simply_connected(spec))
    throw InvariantViolation(
        "component_simple_connectivity",
        "simply_connected_underlying disagrees with " + spec.describe());
  if (spec.boundary < 1)
    throw InvariantViolation("component_has_gluing_circle",
                             "complement component without boundary circle");
}

void SuborbifoldEmbedding::validate() const {
  ambient.validate();
  sub.validate();
  std::vector<int> cones = sub.cone_orders;
  for (const auto& c : complement_components) {
    c.validate();
    cones.insert(cones.end(), c.cone_orders.begin(), c.cone_orders.end());
  }
  if (sorted(cones) != sorted(ambient.cone_orders))
    throw InvariantViolation("cone_partition",
                             "sub and complement cones do not partition the ambient cones");
}

SuborbifoldEmbedding SuborbifoldEmbedding::puncture_sub() const {
  SuborbifoldEmbedding out = *this;
  out.sub = remove_regular_points(sub, 1);
  out.ambient = remove_regular_points(ambient, 1);
  return out;
}

NiceReport is_nice(const SuborbifoldEmbedding& embedding) {
  embedding.validate();
  NiceReport report;
  for (std::size_t i = 0; i < embedding.complement_components.size(); ++i) {
    const auto& c = embedding.complement_components[i];
    if (c.cone_orders.empty() && c.simply_connected_underlying)
      report.violations.push_back({i, "component without cone points is simply connected"});
    else if (c.simply_connected_underlying && c.cone_orders.size() < 2)
      report.violations.push_back(
          {i, "simply connected component carries fewer than two cone points"});
  }
  report.nice = report.violations.empty();
  return report;
}

}  // namespace orbibraid
