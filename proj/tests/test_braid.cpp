#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbibraid/braid.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/permutation.hpp"

using namespace orbibraid;

namespace {

OrbifoldSpec spec(bool orientable, int g, int b, int p, std::vector<int> cones = {}) {
  return OrbifoldSpec{orientable, g, b, p, std::move(cones)};
}

ComplementComponent component(const OrbifoldSpec& s) {
  return ComplementComponent{underlying_simply_connected(s), s.cone_orders, s};
}

SuborbifoldEmbedding nice_fixture() {
  return {spec(true, 0, 1, 0, {2, 3, 5}), spec(true, 0, 1, 0, {2, 3}), {component(spec(true, 0, 2, 0, {5}))}};
}

SuborbifoldEmbedding violation_fixture() {
  return {spec(true, 0, 1, 0, {2, 3}), spec(true, 0, 2, 0, {2, 3}), {component(spec(true, 0, 1, 0))}};
}

SuborbifoldEmbedding smooth_disc_fixture() {
  return {spec(true, 0, 1, 0, {2, 3}), spec(true, 0, 1, 0), {component(spec(true, 0, 2, 0, {2, 3}))}};
}

std::vector<int> random_crossings(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> out;
  for (int i = 0; i < len; ++i) out.push_back(sign(rng) ? idx(rng) : -idx(rng));
  return out;
}

int count_rule(const ProofTrace& t, Rule r) {
  int c = 0;
  for (const auto& s : t.steps) c += s.rule == r ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0}), InvariantViolation);
  CHECK(Permutation::identity(3).is_identity());
  CHECK(Permutation({1, 2, 0}).to_cycle_string() == "(1 2 3)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(Permutation({1, 2, 0}).inverse() == Permutation({2, 0, 1}));
  CHECK_THROWS_AS(Permutation::adjacent_transposition(3, 2), InvariantViolation);
  const Permutation p({1, 2, 0});
  const Permutation q({0, 2, 1});
  // Left to right: first p, then q.
  CHECK((p * q)(0) == q(p(0)));
}

TEST_CASE("braid projection on named words") {
  CHECK(permutation_of_braid(3, {1, 2, 1}).to_cycle_string() == "(1 3)");
  CHECK(permutation_of_braid(2, {}).is_identity());
  CHECK(permutation_of_braid(4, {1, 1}).is_identity());
  CHECK(is_pure_braid(4, {1, -1, 3, 3}));
  CHECK_FALSE(is_pure_braid(3, {1}));
  CHECK_THROWS_AS(permutation_of_braid(0, {}), InvariantViolation);
  CHECK_THROWS_AS(permutation_of_braid(3, {3}), InvariantViolation);
}

TEST_CASE("braid projection matches strand tracking and is a homomorphism") {
  std::mt19937 rng(37);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 5;
    const auto a = random_crossings(rng, n, t % 9);
    const auto b = random_crossings(rng, n, (t * 7) % 11);
    CHECK(permutation_of_braid(n, a).images() == oracle::braid_endpoints(n, a));
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(permutation_of_braid(n, ab) == permutation_of_braid(n, a) * permutation_of_braid(n, b));
    // A word followed by its reverse projects to the identity.
    std::vector<int> back = a;
    back.insert(back.end(), a.rbegin(), a.rend());
    CHECK(is_pure_braid(n, back));
  }
}

TEST_CASE("symmetric group centers") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto lib = symmetric_center_elements(n);
    const auto brute = oracle::symmetric_center(n);
    REQUIRE(lib.size() == brute.size());
    for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].images() == brute[i]);
    const CenterVerdict v = symmetric_center(n);
    CHECK(v.status == (n == 2 ? CenterStatus::Nontrivial : CenterStatus::Trivial));
  }
  // Full pairwise commutation as a second oracle on small n.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> all;
    do all.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::size_t central = 0;
    for (const auto& x : all) {
      bool ok = true;
      for (const auto& y : all) ok = ok && x * y == y * x;
      central += ok ? 1 : 0;
    }
    CHECK(central == symmetric_center_elements(n).size());
  }
  CHECK(symmetric_center(12).status == CenterStatus::Trivial);
  CHECK_THROWS_AS(symmetric_center_elements(9), InvariantViolation);
}

TEST_CASE("pure braid centers under the hypotheses") {
  SUBCASE("disc with two cones, five strings") {
    const CenterVerdict v = center_pure_braid(spec(true, 0, 1, 0, {2, 3}), 5);
    CHECK(v.status == CenterStatus::Trivial);
    CHECK(v.group == "PB_5(M)");
    CHECK(count_rule(v.trace, Rule::ExtensionRule) == 4);
    CHECK(replay(v.trace).ok);
    std::vector<int> inductions;
    for (const auto& s : v.trace.steps)
      if (s.induction) inductions.push_back(*s.induction);
    CHECK(inductions == std::vector<int>{1, 2, 3, 4, 5});
  }
  SUBCASE("torus with one cone, three strings") {
    const CenterVerdict v = center_pure_braid(spec(true, 1, 0, 0, {2}), 3);
    CHECK(v.status == CenterStatus::Trivial);
    CHECK(count_rule(v.trace, Rule::OneRelatorTorsion) == 1);
    CHECK(replay(v.trace).ok);
  }
  CHECK_THROWS_AS(center_pure_braid(spec(true, 0, 1, 0, {2, 3}), 0), InvariantViolation);
}

TEST_CASE("braid centers outside the hypotheses") {
  CHECK(center_pure_braid(spec(true, 0, 1, 0), 1).status == CenterStatus::OutOfScopeSeeLiterature);
  CHECK(center_pure_braid(spec(true, 0, 1, 0), 3).status == CenterStatus::OutOfScopeSeeLiterature);
  CHECK(center_full_braid(spec(true, 0, 1, 0), 2).status == CenterStatus::OutOfScopeSeeLiterature);
  const CenterVerdict disc2 = center_full_braid(spec(true, 0, 1, 0), 2);
  CHECK(disc2.trace.final_conclusion()->predicate == "center_infinite_cyclic");
  CHECK(center_pure_braid(spec(true, 0, 1, 0, {3}), 1).status == CenterStatus::WholeGroupIsCenter);
  CHECK(center_pure_braid(spec(true, 0, 1, 0, {3}), 2).status == CenterStatus::UnknownPerPaper);
  CHECK(center_pure_braid(spec(true, 1, 0, 0), 1).status == CenterStatus::Nontrivial);
  CHECK(center_pure_braid(spec(true, 1, 0, 0), 2).status == CenterStatus::OutOfScopeSeeLiterature);
}

TEST_CASE("full braid centers") {
  const OrbifoldSpec disc22 = spec(true, 0, 1, 0, {2, 2});
  const CenterVerdict v3 = center_full_braid(disc22, 3);
  CHECK(v3.status == CenterStatus::Trivial);
  CHECK(v3.group == "B_3(M)");
  CHECK(replay(v3.trace).ok);
  CHECK(center_full_braid(disc22, 2).status == CenterStatus::UnknownPerPaper);
  CHECK(center_full_braid(disc22, 1).status == CenterStatus::Trivial);
  CHECK(braid_center({disc22, 4, false}).status == CenterStatus::Trivial);
  CHECK(braid_center({disc22, 4, true}).group == "PB_4(M)");
  CHECK((BraidGroupId{disc22, 4, false}.label()) == "B_4(M)");
}

TEST_CASE("injectivity on the fixtures") {
  SUBCASE("nice disc with two cones inside disc with three cones") {
    const SuborbifoldEmbedding e = nice_fixture();
    for (int n = 1; n <= 4; ++n)
      for (int m = n; m <= 4; ++m)
        for (bool pure : {true, false}) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(pure);
          const InjectivityVerdict v = injectivity(e, n, m, pure);
          CHECK(v.status == InjectivityStatus::Injective);
          CHECK(replay(v.trace).ok);
          CHECK(count_rule(v.trace, Rule::SuborbifoldInjectivity) == n);
          CHECK(count_rule(v.trace, Rule::ProjectionFactor) == (n < m ? 1 : 0));
          CHECK(count_rule(v.trace, Rule::SymmetricInclusion) == (pure ? 0 : 1));
          const std::string target = std::string(pure ? "PB_" : "B_") + std::to_string(n);
          CHECK(v.trace.final_conclusion()->args.front().rfind(target, 0) == 0);
        }
  }
  SUBCASE("smooth simply connected complement") {
    const InjectivityVerdict v = injectivity(violation_fixture(), 2, 3, true);
    CHECK(v.status == InjectivityStatus::TheoremInapplicable);
    CHECK_FALSE(v.violations.empty());
    CHECK(count_rule(v.trace, Rule::HypothesisFailure) >= 1);
  }
  SUBCASE("smooth disc base case") {
    const InjectivityVerdict v = injectivity(smooth_disc_fixture(), 1, 1, true);
    CHECK(v.status == InjectivityStatus::Injective);
    CHECK(replay(v.trace).ok);
  }
  CHECK_THROWS_AS(injectivity(nice_fixture(), 3, 2, true), InvariantViolation);
  CHECK_THROWS_AS(injectivity(nice_fixture(), 0, 2, true), InvariantViolation);
}
