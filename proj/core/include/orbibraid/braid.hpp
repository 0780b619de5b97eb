#pragma once

#include <string>
#include <vector>

#include "orbibraid/center.hpp"
#include "orbibraid/orbifold.hpp"
#include "orbibraid/permutation.hpp"
#include "orbibraid/trace.hpp"

namespace orbibraid {

/// PB_n(M) when `pure`, B_n(M) otherwise.
struct BraidGroupId {
  OrbifoldSpec base;
  int strings = 1;
  bool pure = true;

  std::string label() const;  // "PB_3(M)" / "B_3(M)"
};

/// Center of S_n: Trivial for n = 1 and n >= 3, Nontrivial for n = 2.
/// Decided by enumeration for n <= 8 and by the recorded fact beyond.
CenterVerdict symmetric_center(int n);

/// Center of the pure orbifold braid group, unrolling the induction on n
/// over the pure braid exact sequence with r = n - 1. Every induction level
/// k = 1..n is tagged on the step that closes it.
CenterVerdict center_pure_braid(const OrbifoldSpec& spec, int n);

/// Center of the full orbifold braid group via the extension by S_n.
CenterVerdict center_full_braid(const OrbifoldSpec& spec, int n);

CenterVerdict braid_center(const BraidGroupId& id);

enum class InjectivityStatus { Injective, TheoremInapplicable };

std::string to_string(InjectivityStatus status);

struct InjectivityVerdict {
  InjectivityStatus status = InjectivityStatus::TheoremInapplicable;
  ProofTrace trace;
  std::vector<NiceViolation> violations;
  std::vector<std::string> notes;
};

/// Injectivity of PB_n(N) -> PB_m(M) (pure) or B_n(N) -> B_m(M) for a nice
/// sub-orbifold N, 1 <= n <= m. TheoremInapplicable does not assert that the
/// map fails to be injective.
InjectivityVerdict injectivity(const SuborbifoldEmbedding& embedding, int n, int m, bool pure);

}  // namespace orbibraid
