#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "orbibraid/braid.hpp"
#include "orbibraid/center.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/free_product.hpp"
#include "orbibraid/io.hpp"
#include "orbibraid/presentation.hpp"
#include "orbibraid/smith.hpp"

namespace orbibraid::cli {

namespace {

using io::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `-i` takes a path, or inline JSON when the value starts with '[' or '{'.
json load(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (source[first] == '[' || source[first] == '{')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot read input file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

void print_trace(std::ostream& out, const ProofTrace& t) {
  if (!t.facts.empty()) {
    out << "facts:\n";
    for (const auto& f : t.facts) out << "  " << f.statement.to_string() << "  [" << f.source << "]\n";
  }
  if (!t.steps.empty()) {
    out << "trace:\n";
    int i = 1;
    for (const auto& s : t.steps) {
      out << "  " << i++ << ". " << to_string(s.rule) << " (" << s.anchor << ")";
      if (s.induction) out << " [induction " << *s.induction << "]";
      out << "\n";
      for (const auto& in : s.inputs) out << "       from " << in.to_string() << "\n";
      out << "       => " << s.conclusion.to_string() << "\n";
    }
  }
  for (const auto& w : t.warnings) out << "warning: " << w << "\n";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int verdict_exit(CenterStatus s) { return is_honest_unknown(s) ? kExitHonestUnknown : kExitOk; }

// A JSON object with "generators" is a presentation, anything else a spec.
Presentation presentation_input(const json& j) {
  if (j.is_object() && j.contains("generators")) return io::presentation_from_json(j);
  return pi1_orb(io::spec_from_json(j));
}

int cmd_present(const json& in, bool simplify, bool as_json, std::ostream& out) {
  Presentation p = presentation_input(in);
  if (simplify) {
    if (!(in.is_object() && in.contains("generators")) && is_closed_klein(io::spec_from_json(in)))
      p = to_klein_convention(p);
    p = tietze_simplify(p);
  }
  if (as_json) print_json(out, io::to_json(p));
  else out << p.to_string() << "\n";
  return kExitOk;
}

int cmd_abelianize(const json& in, bool as_json, std::ostream& out) {
  const AbelianInvariants inv = abelianization(presentation_input(in));
  if (as_json) {
    print_json(out, io::to_json(inv));
  } else {
    out << inv.to_string() << "\n";
    out << "rank " << inv.rank << ", torsion " << json(inv.torsion).dump() << "\n";
  }
  return kExitOk;
}

int emit_center(const CenterVerdict& v, const BraidGroupId& id, bool as_json, std::ostream& out) {
  if (as_json) {
    print_json(out, io::to_json(v, id));
  } else {
    out << to_string(v.status) << "\n";
    out << "group: " << v.group << " over " << id.base.describe() << "\n";
    print_trace(out, v.trace);
  }
  return verdict_exit(v.status);
}

int cmd_center(const json& in, bool as_json, std::ostream& out) {
  const OrbifoldSpec spec = io::spec_from_json(in);
  const BraidGroupId id{spec, 1, true};
  return emit_center(center_pi1(spec), id, as_json, out);
}

int cmd_braid_center(const json& in, int n, bool pure, bool as_json, std::ostream& out) {
  const BraidGroupId id{io::spec_from_json(in), n, pure};
  return emit_center(braid_center(id), id, as_json, out);
}

int cmd_injectivity(const json& in, int n, int m, bool pure, bool as_json, std::ostream& out) {
  const SuborbifoldEmbedding e = io::embedding_from_json(in);
  const InjectivityVerdict v = injectivity(e, n, m, pure);
  if (as_json) {
    print_json(out, io::to_json(v, e, n, m, pure));
    return kExitOk;
  }
  out << to_string(v.status) << "\n";
  for (const auto& x : v.violations) out << "violation: component " << x.component << ": " << x.reason << "\n";
  for (const auto& note : v.notes) out << "note: " << note << "\n";
  print_trace(out, v.trace);
  return kExitOk;
}

int cmd_order(const json& in, const std::string& word, bool as_json, std::ostream& out) {
  const FreeProductContext ctx = io::context_from_json(in);
  const Word w = Word::parse(word);
  const Order o = element_order(ctx, w);
  const NormalWord nf = normal_form(ctx, w);
  if (as_json) {
    json j = {{"word", w.to_string()}, {"normal_form", to_string(ctx, nf)}};
    j["order"] = o ? json(*o) : json("infinite");
    print_json(out, j);
  } else {
    out << to_string(o) << "\n";
  }
  return kExitOk;
}

int cmd_snf(const json& in, bool witness, bool as_json, std::ostream& out) {
  const SmithResult r = smith_normal_form(io::matrix_from_json(in), witness);
  if (as_json) {
    print_json(out, io::to_json(r));
    return kExitOk;
  }
  out << "factors " << json(r.factors).dump() << "\n";
  if (r.witness) {
    out << "left " << io::to_json(r.witness->left).dump() << "\n";
    out << "right " << io::to_json(r.witness->right).dump() << "\n";
    out << "diagonal " << io::to_json(r.witness->diagonal).dump() << "\n";
  }
  return kExitOk;
}

int cmd_nice_check(const json& in, bool as_json, std::ostream& out) {
  const NiceReport r = is_nice(io::embedding_from_json(in));
  if (as_json) {
    print_json(out, io::to_json(r));
    return kExitOk;
  }
  out << (r.nice ? "nice" : "not nice") << "\n";
  for (const auto& v : r.violations) out << "violation: component " << v.component << ": " << v.reason << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold fundamental groups and orbifold braid groups"};
  app.name("orbibraid");
  app.require_subcommand(1, 1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string input;
  bool simplify = false;
  bool pure = false;
  bool witness = false;
  int n = 1;
  int m = 1;
  std::string word;

  auto* present = app.add_subcommand("present", "presentation of the orbifold fundamental group");
  present->add_option("-i,--input", input, "orbifold spec JSON")->required();
  present->add_flag("--simplify", simplify, "run Tietze simplification");

  auto* abel = app.add_subcommand("abelianize", "abelianization rank and torsion");
  abel->add_option("-i,--input", input, "orbifold spec or presentation JSON")->required();

  auto* center = app.add_subcommand("center", "center of the orbifold fundamental group");
  center->add_option("-i,--input", input, "orbifold spec JSON")->required();

  auto* bcenter = app.add_subcommand("braid-center", "center of the orbifold braid group");
  bcenter->add_option("-i,--input", input, "orbifold spec JSON")->required();
  bcenter->add_option("-n,--strings", n, "number of strings")->required();
  bcenter->add_flag("--pure", pure, "pure braid group");

  auto* inj = app.add_subcommand("injectivity", "injectivity of the inclusion-induced map");
  inj->add_option("-i,--input", input, "embedding JSON")->required();
  inj->add_option("-n", n, "strings on the sub-orbifold")->required();
  inj->add_option("-m", m, "strings on the ambient orbifold")->required();
  inj->add_flag("--pure", pure, "pure braid groups");

  auto* order = app.add_subcommand("order", "element order in a free product of cyclic groups");
  order->add_option("-i,--input", input, "factor orders JSON")->required();
  order->add_option("-w,--word", word, "word such as \"x1 x2^-1\"")->required();

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("-i,--input", input, "matrix JSON file or inline JSON")->required();
  snf->add_flag("--witness", witness, "also print unimodular transforms");

  auto* nice = app.add_subcommand("nice-check", "niceness of a sub-orbifold embedding");
  nice->add_option("-i,--input", input, "embedding JSON")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    const json in = load(input);
    if (present->parsed()) return cmd_present(in, simplify, as_json, out);
    if (abel->parsed()) return cmd_abelianize(in, as_json, out);
    if (center->parsed()) return cmd_center(in, as_json, out);
    if (bcenter->parsed()) return cmd_braid_center(in, n, pure, as_json, out);
    if (inj->parsed()) return cmd_injectivity(in, n, m, pure, as_json, out);
    if (order->parsed()) return cmd_order(in, word, as_json, out);
    if (snf->parsed()) return cmd_snf(in, witness, as_json, out);
    if (nice->parsed()) return cmd_nice_check(in, as_json, out);
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace orbibraid::cli
