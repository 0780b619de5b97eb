#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbibraid {

/// Combinatorial description of a connected 2-orbifold whose only
/// singularities are cone points.
///
/// `genus` is the orientable genus for orientable surfaces and the number of
/// crosscaps otherwise. Boundary circles and punctures are tracked apart even
/// though they contribute the same generators to the fundamental group.
struct OrbifoldSpec {
  bool orientable = true;
  int genus = 0;
  int boundary = 0;
  int punctures = 0;
  std::vector<int> cone_orders;

  int ends() const noexcept { return boundary + punctures; }
  int cone_count() const noexcept { return static_cast<int>(cone_orders.size()); }
  bool smooth() const noexcept { return cone_orders.empty(); }

  /// Same surface with every cone point forgotten.
  OrbifoldSpec underlying() const;

  /// Throws InvariantViolation naming the first broken invariant.
  void validate() const;

  /// Short human label, e.g. "orientable g=1 b=0 p=0 cones=[3]".
  std::string describe() const;

  friend bool operator==(const OrbifoldSpec&, const OrbifoldSpec&) = default;
};

enum class SurfaceClass { C0, C1, Excluded };

struct ClassMembership {
  SurfaceClass value = SurfaceClass::Excluded;
  std::string reason;  // set only for Excluded

  bool admissible() const noexcept { return value != SurfaceClass::Excluded; }
};

std::string to_string(SurfaceClass c);

ClassMembership classify(const OrbifoldSpec& spec);

/// Cylinder, torus, Moebius band, Klein bottle, projective plane, or the
/// interior of one of them. Rejects specs carrying cone points.
bool is_simple_surface(const OrbifoldSpec& spec);

/// Simple-surface test applied to the underlying surface.
bool underlying_is_simple(const OrbifoldSpec& spec);

/// Disc or plane (the sphere is excluded upstream).
bool underlying_simply_connected(const OrbifoldSpec& spec);

/// Name of the simple surface underlying `spec` ("cylinder", "torus",
/// "mobius", "klein", "projective_plane"), or empty when not simple.
std::string simple_surface_name(const OrbifoldSpec& spec);

/// The three conditions of the center theorem for the base orbifold:
///  - no cone point  => not a simple surface
///  - simple underlying surface => at least one cone point
///  - simply connected underlying surface => at least two cone points
/// Throws InvariantViolation for specs outside C0 and C1.
bool satisfies_center_hypotheses(const OrbifoldSpec& spec);

/// Human-readable description of the first failed hypothesis, or empty.
std::string failed_center_hypothesis(const OrbifoldSpec& spec);

OrbifoldSpec remove_regular_points(const OrbifoldSpec& spec, int count);

struct ComplementComponent {
  bool simply_connected_underlying = false;
  std::vector<int> cone_orders;
  OrbifoldSpec spec;

  void validate() const;
};

/// Sub-orbifold N of M together with the components of the closure of M - N.
struct SuborbifoldEmbedding {
  OrbifoldSpec ambient;
  OrbifoldSpec sub;
  std::vector<ComplementComponent> complement_components;

  void validate() const;

  /// Removes one regular point of the sub-orbifold from both sub and ambient.
  /// The complement components are unchanged.
  SuborbifoldEmbedding puncture_sub() const;
};

struct NiceViolation {
  std::size_t component = 0;
  std::string reason;
};

struct NiceReport {
  bool nice = true;
  std::vector<NiceViolation> violations;
};

NiceReport is_nice(const SuborbifoldEmbedding& embedding);

}  // namespace orbibraid
