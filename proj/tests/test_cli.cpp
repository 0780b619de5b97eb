#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "orbibraid/io.hpp"

using namespace orbibraid;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ORBIBRAID_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("center of the torus with one cone") {
  const Result r = run({"center", "-i", fixture("torus_one_cone.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Trivial\n", 0) == 0);
  CHECK(r.out.find("OneRelatorTorsion") != std::string::npos);
}

TEST_CASE("order of the boundary word in Z2 * Z3") {
  const Result r = run({"order", "-i", fixture("z2z3.json"), "-w", "x1 x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "infinite\n");
  CHECK(run({"order", "-i", fixture("z2z3.json"), "-w", "x2^2"}).out == "3\n");
  CHECK(run({"order", "-i", "[2, 3]", "-w", "x1 x2 x1^-1"}).out == "3\n");
}

TEST_CASE("smith normal form from inline JSON") {
  const Result r = run({"snf", "-i", "[[2,0],[0,3]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "factors [1,6]\n");
  const Result j = run({"--json", "snf", "-i", fixture("diag23.json"), "--witness"});
  CHECK(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed["factors"] == json::array({1, 6}));
  CHECK(parsed.contains("left"));
}

TEST_CASE("presentations and abelianizations") {
  const Result k = run({"present", "-i", fixture("klein_one_cone.json"), "--simplify"});
  CHECK(k.code == 0);
  CHECK(k.out.find("< a, b |") == 0);
  const Result a = run({"abelianize", "-i", fixture("klein_one_cone.json")});
  CHECK(a.out.rfind("Z + Z_6", 0) == 0);
  const Result d = run({"--json", "present", "-i", fixture("disc_two_cones.json")});
  const Presentation p = io::presentation_from_json(json::parse(d.out));
  CHECK(p.relators.size() == 2);
}

TEST_CASE("braid centers and honest unknowns") {
  CHECK(run({"braid-center", "-i", fixture("disc_two_cones.json"), "-n", "5", "--pure"}).code == 0);
  const Result b2 = run({"braid-center", "-i", fixture("disc_two_cones.json"), "-n", "2"});
  CHECK(b2.code == 3);
  CHECK(b2.out.rfind("UnknownPerPaper", 0) == 0);
  const Result disc = run({"--json", "braid-center", "-i", fixture("smooth_disc.json"), "-n", "2"});
  CHECK(disc.code == 3);
  CHECK(json::parse(disc.out)["status"] == "OutOfScopeSeeLiterature");
}

TEST_CASE("injectivity and niceness") {
  const Result inj = run({"injectivity", "-i", fixture("nice_embedding.json"), "-n", "2", "-m", "3", "--pure"});
  CHECK(inj.code == 0);
  CHECK(inj.out.rfind("Injective", 0) == 0);
  const Result bad = run({"injectivity", "-i", fixture("smooth_disc_complement.json"), "-n", "2", "-m", "2"});
  CHECK(bad.out.rfind("TheoremInapplicable", 0) == 0);
  CHECK(run({"nice-check", "-i", fixture("nice_embedding.json")}).out == "nice\n");
  CHECK(run({"nice-check", "-i", fixture("smooth_disc_complement.json")}).out.rfind("not nice", 0) == 0);
}

TEST_CASE("invalid input exits with code 2 and names the invariant") {
  const Result missing = run({"center", "-i", R"({"orientable": true})"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("orbifold_schema") != std::string::npos);
  const Result inf = run({"center", "-i", R"({"orientable":true,"genus":0,"boundary":1,"punctures":"inf","cone_orders":[]})"});
  CHECK(inf.code == 2);
  CHECK(inf.err.find("finite_punctures") != std::string::npos);
  const Result cone = run({"center", "-i", R"({"orientable":true,"genus":0,"boundary":1,"punctures":0,"cone_orders":[1]})"});
  CHECK(cone.code == 2);
  CHECK(cone.err.find("cone_order_ge_2") != std::string::npos);
  const Result sphere = run({"center", "-i", R"({"orientable":true,"genus":0,"boundary":0,"punctures":0,"cone_orders":[2,3]})"});
  CHECK(sphere.code == 2);
  CHECK(sphere.err.find("class_C0_or_C1") != std::string::npos);
  CHECK(run({"center", "-i", "{not json"}).code == 2);
  CHECK(run({"center", "-i", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"order", "-i", "[2,3]", "-w", "x1^0"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"center", "-i", fixture("torus_one_cone.json"), "extra"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output is deterministic and re-parses") {
  const std::vector<std::vector<std::string>> invocations{
      {"--json", "center", "-i", fixture("torus_one_cone.json")},
      {"--json", "braid-center", "-i", fixture("disc_two_cones.json"), "-n", "4"},
      {"--json", "injectivity", "-i", fixture("nice_embedding.json"), "-n", "2", "-m", "3"},
      {"--json", "nice-check", "-i", fixture("smooth_disc_complement.json")},
      {"--json", "abelianize", "-i", fixture("klein_one_cone.json")},
      {"--json", "order", "-i", fixture("z2z3.json"), "-w", "x1 x2"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[1]);
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(json::parse(j.dump()) == j);
  }

  // Verdict traces re-parse into replayable traces.
  const json v = json::parse(run(invocations[1]).out);
  const ProofTrace t = io::trace_from_json(v["facts"], v["trace"]);
  CHECK(replay(t).ok);
  CHECK(io::spec_from_json(v["group"]["base"]).cone_orders == std::vector<int>{2, 3});
  const json inj = json::parse(run(invocations[2]).out);
  CHECK(replay(io::trace_from_json(inj["facts"], inj["trace"])).ok);
  CHECK(io::embedding_from_json(inj["embedding"]).sub.cone_orders == std::vector<int>{2, 3});
}

TEST_CASE("subcommand flags accept --json after the subcommand") {
  const Result r = run({"center", "-i", fixture("torus_one_cone.json"), "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "Trivial");
}
