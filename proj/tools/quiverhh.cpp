#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quiverhh/errors.hpp"
#include "quiverhh/invariants.hpp"

using namespace quiverhh;

namespace {

struct Globals {
  std::optional<std::size_t> degree_bound;
  std::size_t support_cap = 12;
  std::size_t toral_cap = 1000000;
  std::string field;
};

ParseOptions parse_options(const Globals& g) {
  ParseOptions o;
  o.degree_bound = g.degree_bound;
  if (!g.field.empty()) o.field_override = Field::parse(g.field);
  return o;
}

AnalysisOptions analysis_options(const Globals& g) { return AnalysisOptions{g.support_cap, g.toral_cap}; }

bool is_table_file(const std::string& path) {
  return path.size() > 4 && path.compare(path.size() - 4, 4, ".alg") == 0;
}

std::string coset_string(const std::vector<Scalar>& x) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (Field::is_zero(x[i])) continue;
    std::string c = to_string(x[i]);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + "*";
    out += "x" + std::to_string(i);
    first = false;
  }
  return first ? "0" : out;
}

std::string endo_string(const Algebra& a, const Endomorphism& f) {
  std::string out;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (f.column(j).empty()) continue;
    if (!out.empty()) out += ", ";
    out += a.labels()[j] + " -> " + a.format(f.column(j));
  }
  return out.empty() ? "0" : out;
}

int cmd_betti(const Globals& g, const std::string& file) {
  Presentation p = load_presentation(file, parse_options(g));
  WalkSystem w = spanning_walk_system(p.quiver);
  std::cout << "vertices\t" << p.quiver.num_vertices() << "\n";
  std::cout << "arrows\t" << p.quiver.num_arrows() << "\n";
  std::cout << "components\t" << p.quiver.num_components() << "\n";
  std::cout << "betti\t" << betti_number(p.quiver) << "\n";
  auto loops = chord_loops(p.quiver, w);
  for (std::size_t i = 0; i < loops.size(); ++i) std::cout << "chord\t" << i << "\t" << loops[i].to_string(p.quiver) << "\n";
  return 0;
}

int cmd_pi1(const Globals& g, const std::string& file, bool complex) {
  Presentation p = load_presentation(file, parse_options(g));
  RewriteSystem rs = complete_rewriting(p);
  Algebra a = build_algebra(p, rs);
  HomotopyAnalysis h = analyze_homotopy(p, rs, a, g.support_cap);
  std::cout << "betti\t" << betti_number(p.quiver) << "\n";
  std::cout << "pi1_ab\t" << h.result.pi1_ab.to_string() << "\n";
  std::cout << "dual_dim\t" << h.result.dual_dim << "\n";
  std::cout << "relations\t" << to_string(h.status, p.field) << "\n";
  for (std::size_t c = 0; c < h.result.per_component.size(); ++c) {
    std::cout << "component\t" << c << "\t" << h.result.per_component[c].to_string() << "\n";
  }
  if (complex) {
    for (const auto& [x, y] : h.complex.pairs) {
      std::cout << "pair\t" << x.to_string(p.quiver) << "\t" << y.to_string(p.quiver) << "\n";
    }
    auto dump = [](const char* name, const IntMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::cout << name << "\t" << r << "\t";
        for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "") << m(r, c).get_str();
        std::cout << "\n";
      }
    };
    dump("delta0", h.complex.delta0);
    dump("delta1", h.complex.delta1);
  }
  return 0;
}

int cmd_hh1(const Globals& g, const std::string& file, bool show_bracket, bool show_ppower) {
  std::optional<Algebra> alg;
  if (is_table_file(file)) {
    alg.emplace(load_structure_constants(file));
  } else {
    alg.emplace(build_algebra(load_presentation(file, parse_options(g))));
  }
  const Algebra& a = *alg;
  HH1 h(a);
  std::cout << "field\t" << a.field().name() << "\n";
  std::cout << "dim_algebra\t" << a.dim() << "\n";
  std::cout << "der0_dim\t" << h.der0_dim() << "\n";
  std::cout << "inn0_dim\t" << h.inner_dim() << "\n";
  std::cout << "hh1_dim\t" << h.dim() << "\n";
  for (std::size_t i = 0; i < h.dim(); ++i) {
    std::cout << "x" << i << "\t" << endo_string(a, h.representatives()[i]) << "\n";
  }
  if (show_bracket) {
    const auto& t = h.bracket_table();
    for (std::size_t i = 0; i < h.dim(); ++i) {
      for (std::size_t j = i + 1; j < h.dim(); ++j) {
        std::cout << "bracket\tx" << i << "\tx" << j << "\t" << coset_string(t[i][j]) << "\n";
      }
    }
  }
  if (show_ppower) {
    auto t = h.ppower_table();
    for (std::size_t i = 0; i < h.dim(); ++i) std::cout << "ppower\tx" << i << "\t" << coset_string(t[i]) << "\n";
  }
  return 0;
}

int cmd_torus(const Globals& g, const std::string& file) {
  Presentation p = load_presentation(file, parse_options(g));
  RewriteSystem rs = complete_rewriting(p);
  Algebra a = build_algebra(p, rs);
  HH1 h(a);
  Torus t = diagonal_torus(p, rs, h);
  std::cout << "hh1_dim\t" << h.dim() << "\n";
  std::cout << "weight_solutions\t" << t.weight_basis.size() << "\n";
  std::cout << "torus_dim\t" << t.dim() << "\n";
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::cout << "generator\t" << i << "\t" << coset_string(t.cosets[i]) << "\t" << endo_string(a, t.derivations[i])
              << "\n";
  }
  return 0;
}

std::vector<Scalar> parse_character(const std::string& spec, std::size_t chords, const Field& k) {
  std::vector<Scalar> values(chords);
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("character entry '" + item + "' is not chord=value");
    std::size_t idx = 0;
    try {
      idx = std::stoul(item.substr(0, eq));
    } catch (const std::exception&) {
      throw InputError("bad chord index in '" + item + "'");
    }
    if (idx >= chords) throw InputError("chord index " + std::to_string(idx) + " out of range");
    try {
      mpq_class v(item.substr(eq + 1));
      v.canonicalize();
      values[idx] = k.make(v);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("bad value in '" + item + "'");
    }
  }
  return values;
}

int cmd_theta(const Globals& g, const std::string& file, const std::string& spec) {
  Presentation p = load_presentation(file, parse_options(g));
  RewriteSystem rs = complete_rewriting(p);
  Algebra a = build_algebra(p, rs);
  HH1 h(a);
  HomotopyAnalysis hom = analyze_homotopy(p, rs, a, g.support_cap);
  WalkSystem w = spanning_walk_system(p.quiver);
  auto chords = chord_arrows(p.quiver, w);
  Character f = Character::from_chord_values(p.quiver, p.field, parse_character(spec, chords.size(), p.field));
  Endomorphism d = theta_derivation(a, p.quiver, w, hom.complex, f);
  std::cout << "derivation\t" << endo_string(a, d) << "\n";
  std::cout << "coset\t" << coset_string(h.coordinates(d)) << "\n";
  return 0;
}

int cmd_check(const Globals& g, const std::vector<std::string>& files, bool records) {
  std::vector<PresentationAnalysis> analyses;
  for (const auto& f : files) analyses.push_back(analyze_presentation(load_presentation(f, parse_options(g)), analysis_options(g)));
  InvariantReport r = verify_theorem_b(analyses, analysis_options(g));
  std::cout << format_report(r);
  if (records) std::cout << format_records(r);
  return r.violations.empty() ? 0 : 3;
}

int cmd_corpus(const Globals& g, const std::string& dir) {
  CorpusOutcome out = run_corpus(dir, analysis_options(g));
  std::cout << out.text;
  return out.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups and first Hochschild cohomology of bound quiver algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--degree-bound", g.degree_bound, "Degree bound D for rewriting");
  app.add_option("--support-cap", g.support_cap, "Largest relation support searched for circuits");
  app.add_option("--toral-cap", g.toral_cap, "Largest search space for toral elements");
  app.add_option("--field", g.field, "Override the field: Q or GF(p)");

  std::string file;
  std::vector<std::string> files;
  bool complex = false, show_bracket = false, show_ppower = false, records = false;
  std::string spec;
  std::string corpus_dir = QUIVERHH_CORPUS_DIR;

  auto* betti = app.add_subcommand("betti", "Betti number and chord loops of the quiver");
  betti->add_option("FILE", file)->required();
  auto* pi1 = app.add_subcommand("pi1", "Abelianized fundamental group and its character dimension");
  pi1->add_option("FILE", file)->required();
  pi1->add_flag("--complex", complex, "Print homotopy pairs and the chain complex");
  auto* hh1 = app.add_subcommand("hh1", "First Hochschild cohomology");
  hh1->add_option("FILE", file, "A .bqv presentation or an .alg table")->required();
  hh1->add_flag("--bracket", show_bracket, "Print the bracket table");
  hh1->add_flag("--ppower", show_ppower, "Print the p-power map");
  auto* torus = app.add_subcommand("torus", "Diagonal torus of the presentation");
  torus->add_option("FILE", file)->required();
  auto* theta = app.add_subcommand("theta", "Image of a character in HH1");
  theta->add_option("FILE", file)->required();
  theta->add_option("--character", spec, "Comma separated chord_index=value")->required();
  auto* check = app.add_subcommand("check", "Cross-check invariants over presentations of one algebra");
  check->add_option("FILE", files)->required();
  check->add_flag("--records", records, "Also print one JSON record per presentation");
  auto* corpus = app.add_subcommand("corpus", "Run the bundled regression corpus");
  corpus->add_option("--dir", corpus_dir, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*betti) return cmd_betti(g, file);
    if (*pi1) return cmd_pi1(g, file, complex);
    if (*hh1) return cmd_hh1(g, file, show_bracket, show_ppower);
    if (*torus) return cmd_torus(g, file);
    if (*theta) return cmd_theta(g, file, spec);
    if (*check) return cmd_check(g, files, records);
    if (*corpus) return cmd_corpus(g, corpus_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
