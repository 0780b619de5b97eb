#include "orbibraid/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::HandleA: return "handle_a";
    case GeneratorKind::HandleB: return "handle_b";
    case GeneratorKind::Crosscap: return "crosscap";
    case GeneratorKind::Boundary: return "boundary";
    case GeneratorKind::Cone: return "cone";
    case GeneratorKind::Generic: return "generic";
  }
  return "generic";
}

void Presentation::validate() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw InvariantViolation("generator_name", "empty generator name");
    if (!names.insert(g.name).second)
      throw InvariantViolation("unique_generator_names", "duplicate generator '" + g.name + "'");
  }
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (!names.count(s.generator))
        throw InvariantViolation("relator_generators_declared",
                                 "relator uses undeclared generator '" + s.generator + "'");
}

std::optional<std::size_t> Presentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> Presentation::generator_names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i].name;
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    os << (i ? ", " : "");
    // Proper powers of multi-syllable roots print as (w)^q.
    const RootDecomposition rd = maximal_root(relators[i]);
    if (rd.exponent >= 2 && rd.root.syllables().size() >= 2)
      os << "(" << rd.root.to_string() << ")^" << rd.exponent;
    else
      os << relators[i].to_string();
  }
  os << " >";
  return os.str();
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators.size(), generators.size());
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const auto& s : relators[r].syllables()) {
      auto idx = index_of(s.generator);
      if (!idx) throw UnknownGenerator(s.generator);
      m(r, *idx) += s.exponent;
    }
  return m;
}

Presentation pi1_orb(const OrbifoldSpec& spec) {
  const auto cls = classify(spec);
  if (!cls.admissible()) throw InvariantViolation("class_C0_or_C1", cls.reason);

  Presentation p;
  std::vector<Syllable> surface;
  if (spec.orientable) {
    for (int i = 1; i <= spec.genus; ++i) {
      const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
      p.generators.push_back({a, GeneratorKind::HandleA, 0});
      p.generators.push_back({b, GeneratorKind::HandleB, 0});
      surface.insert(surface.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
  } else {
    for (int i = 1; i <= spec.genus; ++i) {
      const std::string v = "v" + std::to_string(i);
      p.generators.push_back({v, GeneratorKind::Crosscap, 0});
      surface.push_back({v, 2});
    }
  }
  const int e = spec.ends();
  for (int l = 1; l <= e; ++l) {
    const std::string c = "c" + std::to_string(l);
    p.generators.push_back({c, GeneratorKind::Boundary, 0});
    surface.push_back({c, 1});
  }
  for (int j = 1; j <= spec.cone_count(); ++j) {
    const std::string x = "x" + std::to_string(j);
    const int q = spec.cone_orders[static_cast<std::size_t>(j - 1)];
    p.generators.push_back({x, GeneratorKind::Cone, q});
    surface.push_back({x, 1});
    p.relators.push_back(Word::generator(x, q));
  }
  if (e >= 1) {
    // The last boundary loop appears once in the surface relation: solving
    // for it removes both the generator and the relation.
    const std::string last = "c" + std::to_string(e);
    p.generators.erase(std::find_if(p.generators.begin(), p.generators.end(),
                                    [&](const Generator& g) { return g.name == last; }));
  } else {
    p.relators.push_back(Word(surface).freely_reduced());
  }
  return p;
}

std::optional<StoredPresentation> stored_presentation_from_name(const std::string& name) {
  if (name == "Cc") return StoredPresentation::Cc;
  if (name == "Mbc") return StoredPresentation::Mbc;
  if (name == "Tc") return StoredPresentation::Tc;
  if (name == "Kc") return StoredPresentation::Kc;
  return std::nullopt;
}

std::string to_string(StoredPresentation which) {
  switch (which) {
    case StoredPresentation::Cc: return "Cc";
    case StoredPresentation::Mbc: return "Mbc";
    case StoredPresentation::Tc: return "Tc";
    case StoredPresentation::Kc: return "Kc";
  }
  return "?";
}

Presentation stored_presentation(StoredPresentation which, int q) {
  if (q < 2) throw InvariantViolation("cone_order_ge_2", "q = " + std::to_string(q));
  Presentation p;
  auto gen = [&](const char* n) { p.generators.push_back({n, GeneratorKind::Generic, 0}); };
  std::vector<Syllable> root;
  switch (which) {
    case StoredPresentation::Cc:
      gen("a"), gen("b"), gen("c");
      root = {{"a", 1}, {"b", 1}, {"a", -1}, {"c", 1}};
      break;
    case StoredPresentation::Mbc:
      gen("a"), gen("b"), gen("c");
      root = {{"a", 1}, {"b", 1}, {"a", 1}, {"c", 1}};
      break;
    case StoredPresentation::Tc:
      gen("a"), gen("b");
      root = {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}};
      break;
    case StoredPresentation::Kc:
      gen("a"), gen("b");
      root = {{"a", 1}, {"b", 1}, {"a", -1}, {"b", 1}};
      break;
  }
  p.relators.push_back(Word(root).power(q));
  return p;
}

Presentation stored_presentation(const std::string& name, int q) {
  auto which = stored_presentation_from_name(name);
  if (!which)
    throw InvariantViolation("stored_presentation_name",
                             "unknown presentation '" + name + "' (expected Cc, Mbc, Tc, Kc)");
  return stored_presentation(*which, q);
}

std::optional<StoredPresentation> stored_presentation_for(const OrbifoldSpec& spec) {
  if (spec.cone_count() != 1) return std::nullopt;
  const std::string name = simple_surface_name(spec.underlying());
  if (name == "cylinder") return StoredPresentation::Cc;
  if (name == "mobius") return StoredPresentation::Mbc;
  if (name == "torus") return StoredPresentation::Tc;
  if (name == "klein") return StoredPresentation::Kc;
  return std::nullopt;
}

std::optional<std::string> stored_presentation_discrepancy(const OrbifoldSpec& spec) {
  auto which = stored_presentation_for(spec);
  if (!which) return std::nullopt;
  const int q = spec.cone_orders.front();
  const auto built = abelianization(pi1_orb(spec));
  const auto stored = abelianization(stored_presentation(*which, q));
  if (built == stored) return std::nullopt;
  return "stored " + to_string(*which) + " presentation abelianizes to " + stored.to_string() +
         " but the Van Kampen presentation abelianizes to " + built.to_string();
}

bool is_closed_klein(const OrbifoldSpec& spec) {
  return !spec.orientable && spec.genus == 2 && spec.ends() == 0;
}

Presentation to_klein_convention(const Presentation& p) {
  std::vector<std::string> crosscaps;
  for (const auto& g : p.generators) {
    if (g.kind == GeneratorKind::Crosscap) crosscaps.push_back(g.name);
    else if (g.kind != GeneratorKind::Cone)
      throw InvariantViolation("closed_klein_shape",
                               "generator '" + g.name + "' is neither a crosscap nor a cone");
  }
  if (crosscaps != std::vector<std::string>{"v1", "v2"})
    throw InvariantViolation("closed_klein_shape", "expected exactly the crosscaps v1, v2");
  if (p.index_of("a") || p.index_of("b"))
    throw InvariantViolation("closed_klein_shape", "generator names a or b already in use");

  // v1 v1 v2 v2 = a (a a^-1 b)(a^-1 b) = a b a^-1 b
  const Word v1 = Word::generator("a");
  const Word v2 = Word({{"a", -1}, {"b", 1}});
  Presentation out;
  out.generators.push_back({"a", GeneratorKind::HandleA, 0});
  out.generators.push_back({"b", GeneratorKind::HandleB, 0});
  for (const auto& g : p.generators)
    if (g.kind == GeneratorKind::Cone) out.generators.push_back(g);
  for (const auto& r : p.relators)
    out.relators.push_back(r.substitute("v1", v1).substitute("v2", v2));
  return out;
}

Presentation rename_generators(const Presentation& p,
                               const std::map<std::string, std::string>& names) {
  auto rename = [&](const std::string& n) {
    auto it = names.find(n);
    return it == names.end() ? n : it->second;
  };
  Presentation out;
  for (auto g : p.generators) {
    g.name = rename(g.name);
    out.generators.push_back(std::move(g));
  }
  for (const auto& r : p.relators) {
    std::vector<Syllable> s = r.syllables();
    for (auto& syl : s) syl.generator = rename(syl.generator);
    out.relators.push_back(Word(std::move(s)));
  }
  out.validate();
  return out;
}

namespace {

// Normalizes relators in place: reduce, canonicalize, drop trivial and
// repeated relators. Order of first appearance is kept.
void normalize_relators(std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const auto& r : relators) {
    Word c = canonical_relator(r);
    if (c.empty()) continue;
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(std::move(c));
  }
  relators = std::move(out);
}

}  // namespace

Presentation tietze_simplify(const Presentation& input) {
  input.validate();
  Presentation p = input;
  normalize_relators(p.relators);

  for (;;) {
    bool eliminated = false;
    for (std::size_t gi = p.generators.size(); gi-- > 0 && !eliminated;) {
      const std::string& g = p.generators[gi].name;
      for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        if (r.occurrences(g) != 1) continue;
        // Rotate so that g leads: r ~ g^s w with g absent from w.
        const auto letters = r.letters();
        std::size_t pos = 0;
        while (letters[pos].generator != g) ++pos;
        std::vector<Letter> rest;
        for (std::size_t k = 1; k < letters.size(); ++k)
          rest.push_back(letters[(pos + k) % letters.size()]);
        const Word w = Word::from_letters(rest);
        const Word value = letters[pos].sign > 0 ? w.inverse() : w;

        const std::string name = g;
        p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(ri));
        p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(gi));
        for (auto& other : p.relators) other = other.substitute(name, value);
        normalize_relators(p.relators);
        eliminated = true;
        break;
      }
    }
    if (!eliminated) break;
  }
  return p;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (auto d : torsion) {
    os << (first ? "" : " + ") << "Z_" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianInvariants abelianization(const Presentation& p) {
  p.validate();
  const auto snf = smith_normal_form(p.exponent_matrix());
  AbelianInvariants inv;
  inv.rank = static_cast<std::int64_t>(p.generators.size()) -
             static_cast<std::int64_t>(snf.factors.size());
  for (auto d : snf.factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

bool is_cyclic(const AbelianInvariants& inv) {
  if (inv.torsion.empty()) return inv.rank <= 1;
  return inv.rank == 0 && inv.torsion.size() == 1;
}

}  // namespace orbibraid
