#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbibraid/orbifold.hpp"
#include "orbibraid/smith.hpp"
#include "orbibraid/word.hpp"

namespace orbibraid {

enum class GeneratorKind { HandleA, HandleB, Crosscap, Boundary, Cone, Generic };

std::string to_string(GeneratorKind kind);

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::Generic;
  int order = 0;  // cone order; 0 for every other kind

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  /// Unique generator names; every relator uses declared generators only.
  void validate() const;

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::string> generator_names() const;

  /// "< a, b | a b a^-1 b^-1 >"
  std::string to_string() const;

  /// Exponent-sum matrix, one row per relator and one column per generator.
  IntMatrix exponent_matrix() const;
};

/// Orbifold fundamental group by Van Kampen.
///
/// Orientable genus g: generators a1,b1,...,ag,bg; boundary/puncture loops
/// c1..ce; cone loops x1..xk. Relators xj^qj plus the surface relation
/// [a1,b1]...[ag,bg] c1...ce x1...xk. Non-orientable genus g uses crosscap
/// generators v1..vg and the relation v1^2...vg^2 c1...ce x1...xk.
/// With e >= 1 the surface relation is solved for ce and both are removed,
/// leaving a free group times the cyclic cone factors.
Presentation pi1_orb(const OrbifoldSpec& spec);

enum class StoredPresentation { Cc, Mbc, Tc, Kc };

std::optional<StoredPresentation> stored_presentation_from_name(const std::string& name);
std::string to_string(StoredPresentation which);

/// One-relator presentations of the compact simple surfaces with a single
/// cone point of order q, stored verbatim:
///   Cc  = < a,b,c | (a b a^-1 c)^q >
///   Mbc = < a,b,c | (a b a c)^q >
///   Tc  = < a,b   | (a b a^-1 b^-1)^q >
///   Kc  = < a,b   | (a b a^-1 b)^q >
Presentation stored_presentation(StoredPresentation which, int q);
Presentation stored_presentation(const std::string& name, int q);

/// Which stored presentation applies to a simple underlying surface with
/// exactly one cone point, if any.
std::optional<StoredPresentation> stored_presentation_for(const OrbifoldSpec& spec);

/// Set when the stored presentation for `spec` does not abelianize like the
/// Van Kampen presentation (cylinder and Moebius band with one cone point).
std::optional<std::string> stored_presentation_discrepancy(const OrbifoldSpec& spec);

/// Rewrites a closed two-crosscap presentation (generators v1, v2 plus cone
/// generators) into the a b a^-1 b convention via v1 -> a, v2 -> a^-1 b.
/// Throws InvariantViolation when the presentation is not of that shape.
Presentation to_klein_convention(const Presentation& p);

/// True for closed non-orientable genus-2 specs, where to_klein_convention
/// applies to pi1_orb(spec).
bool is_closed_klein(const OrbifoldSpec& spec);

Presentation rename_generators(const Presentation& p,
                               const std::map<std::string, std::string>& names);

/// Generator elimination plus free and cyclic reduction, to a fixpoint.
/// A generator occurring exactly once (exponent +-1) in some relator is
/// solved for and substituted away; later-declared generators are eliminated
/// first. Output relators are in canonical_relator form, duplicates and
/// empty relators dropped.
Presentation tietze_simplify(const Presentation& p);

struct AbelianInvariants {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;  // d1 | d2 | ..., each >= 2

  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

bool is_cyclic(const AbelianInvariants& inv);

}  // namespace orbibraid
