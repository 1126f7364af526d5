#include "quiverhh/invariants.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

// span of the given vectors closed under right multiplication by the multipliers
Echelon right_closure(const Algebra& a, const std::vector<SparseVec>& start, const std::vector<SparseVec>& mult) {
  Echelon span(a.field());
  std::deque<SparseVec> queue;
  for (const auto& v : start) {
    if (!v.empty() && span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : mult) {
      SparseVec w = a.multiply(v, m);
      if (!w.empty() && span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span;
}

std::vector<SparseVec> rows_of(const Echelon& e) {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : e.rows()) out.push_back(row);
  return out;
}

}  // namespace

bool is_admissible(const Algebra& a, const QuiverImages& images) {
  std::vector<SparseVec> squares;
  for (const auto& x : images.arrows) {
    for (const auto& y : images.arrows) squares.push_back(a.multiply(x, y));
  }
  Echelon r2 = right_closure(a, squares, images.arrows);
  Echelon gens = r2;
  for (const auto& v : images.vertices) {
    if (!gens.insert(v)) return false;
  }
  for (const auto& v : images.arrows) {
    if (!gens.insert(v)) return false;
  }
  // R^k = R^(k-1) R, spanned by words of length >= k
  Echelon power = right_closure(a, images.arrows, images.arrows);
  while (power.rank() > 0) {
    std::vector<SparseVec> next;
    for (const auto& v : rows_of(power)) {
      for (const auto& x : images.arrows) next.push_back(a.multiply(v, x));
    }
    Echelon smaller = right_closure(a, next, images.arrows);
    if (smaller.rank() == power.rank()) return false;
    power = std::move(smaller);
  }
  return true;
}

PresentationAnalysis analyze_presentation(const Presentation& p, const AnalysisOptions& options) {
  PresentationAnalysis out;
  out.presentation = p;
  out.rewriting = std::make_unique<RewriteSystem>(complete_rewriting(p));
  out.algebra = std::make_unique<Algebra>(build_algebra(p, *out.rewriting));
  out.hh1 = std::make_unique<HH1>(*out.algebra);
  out.homotopy = analyze_homotopy(p, *out.rewriting, *out.algebra, options.support_cap);
  out.walks = spanning_walk_system(p.quiver);
  out.betti = betti_number(p.quiver);
  out.minimality = minimality_check(*out.rewriting, *out.algebra);
  out.admissible = is_admissible(*out.algebra, canonical_images(*out.algebra, *out.rewriting));
  out.character_dim = character_space_basis(p.quiver, p.field, out.homotopy.complex).size();
  out.torus_dim = diagonal_torus(p, *out.rewriting, *out.hh1).dim();
  out.theta_dim = theta_image_dimension(*out.hh1, p.quiver, out.walks, out.homotopy.complex);
  return out;
}

MtRankBounds mt_rank_bounds(const std::vector<PresentationAnalysis>& analyses) {
  MtRankBounds b;
  const PresentationAnalysis* upper_from = nullptr;
  bool any_minimal = false;
  for (const auto& a : analyses) {
    if (!a.minimality.minimal) continue;
    any_minimal = true;
    b.lower = std::max(b.lower, a.homotopy.result.dual_dim);
    if (!upper_from && a.admissible) upper_from = &a;
  }
  if (!any_minimal) throw InputError("no minimal presentation supplied");
  if (!upper_from) {
    for (const auto& a : analyses) {
      if (a.minimality.minimal) {
        upper_from = &a;
        break;
      }
    }
    b.note = "no admissible presentation; upper bound taken from " + upper_from->presentation.name;
  }
  b.upper = upper_from->betti;
  for (const auto& a : analyses) {
    if (!a.minimality.minimal) continue;
    Semimonomial s = a.homotopy.status;
    bool certified = s == Semimonomial::monomial || s == Semimonomial::semimonomial || s == Semimonomial::p_semimonomial;
    if (certified && a.homotopy.result.dual_dim == b.upper) b.exact = true;
  }
  return b;
}

void check_same_algebra(const std::vector<PresentationAnalysis>& analyses) {
  if (analyses.empty()) throw InputError("no presentation supplied");
  const PresentationAnalysis& ref = analyses.front();
  const Algebra& ra = *ref.algebra;
  for (std::size_t i = 1; i < analyses.size(); ++i) {
    const PresentationAnalysis& other = analyses[i];
    const Algebra& oa = *other.algebra;
    const std::string who = other.presentation.name.empty() ? "presentation " + std::to_string(i + 1)
                                                             : other.presentation.name;
    if (!(oa.field() == ra.field())) throw InputError(who + " is over a different field");
    if (oa.dim() != ra.dim()) {
      throw InputError("presentations disagree on the algebra: " + who + " has dimension " + std::to_string(oa.dim()) +
                       ", expected " + std::to_string(ra.dim()));
    }
    if (other.presentation.maps.empty()) {
      bool same = true;
      for (std::size_t x = 0; x < oa.dim() && same; ++x) {
        for (std::size_t y = 0; y < oa.dim() && same; ++y) same = oa.product(x, y) == ra.product(x, y);
      }
      if (!same) throw InputError("presentations disagree on the algebra: " + who + " has no maps block");
      continue;
    }
    // the maps block defines kQ' -> A_ref; it must kill I' and be onto
    const Quiver& q = other.presentation.quiver;
    QuiverImages im;
    for (const auto& label : q.vertices()) {
      auto v = ref.presentation.quiver.vertex_index(label);
      if (!v) throw InputError(who + ": vertex '" + label + "' has no counterpart in " + ref.presentation.name);
      im.vertices.push_back(ra.embed(Element::of(Path::trivial(*v))));
    }
    im.arrows.assign(q.num_arrows(), SparseVec());
    std::vector<bool> mapped(q.num_arrows(), false);
    for (const auto& m : other.presentation.maps) {
      std::size_t a = *q.arrow_index(m.arrow);
      Element e;
      try {
        e = parse_element(m.expression, ref.presentation.quiver, ra.field());
      } catch (const ParseError& err) {
        throw InputError(who + ": map of '" + m.arrow + "' (line " + std::to_string(m.line) + "): " + err.what());
      }
      im.arrows[a] = ra.embed(ref.rewriting->normal_form(e));
      mapped[a] = true;
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      if (!mapped[a]) throw InputError(who + ": maps block omits arrow '" + q.arrow(a).label + "'");
    }
    for (const auto& r : other.presentation.relations) {
      if (!evaluate(ra, im, r).empty()) {
        throw InputError(who + ": maps block does not kill the relation " + r.to_string(q));
      }
    }
    std::vector<SparseVec> gens = im.vertices;
    gens.insert(gens.end(), im.arrows.begin(), im.arrows.end());
    if (generated_subspace(ra, gens).rank() != ra.dim()) {
      throw InputError(who + ": maps block is not onto " + ref.presentation.name);
    }
  }
}

InvariantReport verify_theorem_b(const std::vector<PresentationAnalysis>& analyses, const AnalysisOptions& options) {
  check_same_algebra(analyses);
  const PresentationAnalysis& first = analyses.front();
  InvariantReport r;
  r.algebra_id = first.presentation.name;
  r.field = first.presentation.field.name();
  r.dim = first.algebra->dim();
  r.cartan_trace = cartan_trace(*first.algebra);
  r.hh1_dim = first.hh1->dim();
  r.nilpotency = nilpotency_report(*first.hh1, options.toral_cap);
  for (const auto& a : analyses) {
    ReportRow row;
    row.name = a.presentation.name;
    row.betti = a.betti;
    row.pi1 = a.homotopy.result.pi1_ab.to_string();
    row.dual_dim = a.homotopy.result.dual_dim;
    row.character_dim = a.character_dim;
    row.torus_dim = a.torus_dim;
    row.theta_dim = a.theta_dim;
    row.status = to_string(a.homotopy.status, a.presentation.field);
    row.minimal = a.minimality.minimal;
    row.admissible = a.admissible;
    if (a.hh1->dim() != r.hh1_dim) {
      r.violations.push_back(row.name + ": HH1 has dimension " + std::to_string(a.hh1->dim()) + ", expected " +
                             std::to_string(r.hh1_dim));
    }
    if (row.dual_dim > row.betti) {
      r.violations.push_back(row.name + ": dual dimension " + std::to_string(row.dual_dim) + " exceeds betti number " +
                             std::to_string(row.betti));
    }
    if (row.minimal && (row.dual_dim != row.torus_dim || row.dual_dim != row.theta_dim ||
                        row.dual_dim != row.character_dim)) {
      row.consistent = false;
      r.violations.push_back(row.name + ": dual_dim " + std::to_string(row.dual_dim) + ", character space " +
                             std::to_string(row.character_dim) + ", torus " + std::to_string(row.torus_dim) +
                             ", theta image " + std::to_string(row.theta_dim));
    }
    r.rows.push_back(std::move(row));
  }
  r.bounds = mt_rank_bounds(analyses);
  if (r.bounds.lower > r.bounds.upper) {
    r.violations.push_back("mt-rank lower bound " + std::to_string(r.bounds.lower) + " exceeds upper bound " +
                           std::to_string(r.bounds.upper));
  }
  return r;
}

std::string format_report(const InvariantReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "algebra\t" << r.algebra_id << "\n";
  out << "field\t" << r.field << "\n";
  out << "dim\t" << r.dim << "\n";
  out << "cartan_trace\t" << r.cartan_trace << "\n";
  out << "hh1_dim\t" << r.hh1_dim << "\n";
  for (const auto& row : r.rows) {
    out << "\n";
    out << "presentation\t" << row.name << "\n";
    out << "minimal\t" << yes(row.minimal) << "\n";
    out << "admissible\t" << yes(row.admissible) << "\n";
    out << "betti\t" << row.betti << "\n";
    out << "pi1_ab\t" << row.pi1 << "\n";
    out << "dual_dim\t" << row.dual_dim << "\n";
    out << "character_dim\t" << row.character_dim << "\n";
    out << "torus_dim\t" << row.torus_dim << "\n";
    out << "theta_dim\t" << row.theta_dim << "\n";
    out << "relations\t" << row.status << "\n";
    out << "check\t" << (!row.minimal ? "skipped (not minimal)" : row.consistent ? "ok" : "VIOLATION") << "\n";
  }
  out << "\n";
  out << "mt_rank_lower\t" << r.bounds.lower << "\n";
  out << "mt_rank_upper\t" << r.bounds.upper << "\n";
  out << "mt_rank_exact\t" << yes(r.bounds.exact) << "\n";
  if (!r.bounds.note.empty()) out << "mt_rank_note\t" << r.bounds.note << "\n";
  out << "lie_nilpotent\t" << yes(r.nilpotency.lie_nilpotent) << "\n";
  out << "nilpotency_class\t"
      << (r.nilpotency.nilpotency_class ? std::to_string(*r.nilpotency.nilpotency_class) : std::string("inf")) << "\n";
  out << "lower_central_series\t";
  for (std::size_t i = 0; i < r.nilpotency.lower_central_series.size(); ++i) {
    out << (i ? " " : "") << r.nilpotency.lower_central_series[i];
  }
  out << "\n";
  if (r.field != "Q") {
    out << "toral_search_complete\t" << yes(r.nilpotency.toral_search_complete) << "\n";
    out << "p_nilpotent_witnessed\t" << yes(r.nilpotency.p_nilpotent_witnessed) << "\n";
  }
  for (const auto& v : r.violations) out << "violation\t" << v << "\n";
  return out.str();
}

std::string format_records(const InvariantReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    nlohmann::ordered_json j;
    j["algebra"] = r.algebra_id;
    j["presentation"] = row.name;
    j["field"] = r.field;
    j["minimal"] = row.minimal;
    j["admissible"] = row.admissible;
    j["betti"] = row.betti;
    j["pi1_ab"] = row.pi1;
    j["dual_dim"] = row.dual_dim;
    j["character_dim"] = row.character_dim;
    j["torus_dim"] = row.torus_dim;
    j["theta_dim"] = row.theta_dim;
    j["relations"] = row.status;
    j["consistent"] = row.consistent;
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

template <class T>
void expect_eq(std::vector<std::string>& bad, const std::string& what, const T& got, const T& want) {
  if (!(got == want)) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    bad.push_back(s.str());
  }
}

struct CaseResult {
  std::vector<std::string> bad;
  std::vector<std::string> notes;
};

CaseResult run_case(const std::filesystem::path& dir, const nlohmann::json& c, const AnalysisOptions& options) {
  CaseResult res;
  auto& bad = res.bad;
  auto& notes = res.notes;
  try {
    std::vector<PresentationAnalysis> analyses;
    for (const auto& f : c.at("files")) {
      analyses.push_back(analyze_presentation(load_presentation((dir / f.get<std::string>()).string()), options));
    }
    InvariantReport r = verify_theorem_b(analyses, options);
    for (const auto& v : r.violations) bad.push_back("violation: " + v);
    const auto& e = c.at("expect");
    if (e.contains("dim")) expect_eq(bad, "dim", r.dim, e["dim"].get<std::size_t>());
    if (e.contains("hh1_dim")) expect_eq(bad, "hh1_dim", r.hh1_dim, e["hh1_dim"].get<std::size_t>());
    if (e.contains("cartan_trace")) expect_eq(bad, "cartan_trace", r.cartan_trace, e["cartan_trace"].get<std::size_t>());
    if (e.contains("mt_rank")) {
      const auto& m = e["mt_rank"];
      expect_eq(bad, "mt_rank_lower", r.bounds.lower, m.at(0).get<std::size_t>());
      expect_eq(bad, "mt_rank_upper", r.bounds.upper, m.at(1).get<std::size_t>());
      expect_eq(bad, "mt_rank_exact", r.bounds.exact, m.at(2).get<bool>());
    }
    if (e.contains("lie_nilpotent")) {
      expect_eq(bad, "lie_nilpotent", r.nilpotency.lie_nilpotent, e["lie_nilpotent"].get<bool>());
    }
    if (e.contains("rows")) {
      for (const auto& [name, want] : e["rows"].items()) {
        auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const ReportRow& row) { return row.name == name; });
        if (it == r.rows.end()) {
          bad.push_back("no presentation named " + name);
          continue;
        }
        const std::string pre = name + ".";
        if (want.contains("betti")) expect_eq(bad, pre + "betti", it->betti, want["betti"].get<std::size_t>());
        if (want.contains("pi1_ab")) expect_eq(bad, pre + "pi1_ab", it->pi1, want["pi1_ab"].get<std::string>());
        if (want.contains("dual_dim")) expect_eq(bad, pre + "dual_dim", it->dual_dim, want["dual_dim"].get<std::size_t>());
        if (want.contains("torus_dim")) expect_eq(bad, pre + "torus_dim", it->torus_dim, want["torus_dim"].get<std::size_t>());
        if (want.contains("theta_dim")) expect_eq(bad, pre + "theta_dim", it->theta_dim, want["theta_dim"].get<std::size_t>());
        if (want.contains("relations")) expect_eq(bad, pre + "relations", it->status, want["relations"].get<std::string>());
        if (want.contains("minimal")) expect_eq(bad, pre + "minimal", it->minimal, want["minimal"].get<bool>());
        if (want.contains("admissible")) expect_eq(bad, pre + "admissible", it->admissible, want["admissible"].get<bool>());
      }
    }
    if (c.contains("reference")) {
      const auto& ref = c["reference"];
      const std::string name = ref.at("presentation").get<std::string>();
      const std::string stated = ref.at("pi1_ab").get<std::string>();
      auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const ReportRow& row) { return row.name == name; });
      if (it != r.rows.end()) {
        if (it->pi1 == stated) {
          notes.push_back("published value " + stated + " confirmed");
        } else {
          notes.push_back("published-value discrepant (" + stated + "), oracle value recorded (" + it->pi1 + ")");
        }
      }
    }
  } catch (const std::exception& ex) {
    bad.push_back(std::string("error: ") + ex.what());
  }
  return res;
}

}  // namespace

CorpusOutcome run_corpus(const std::string& corpus_dir, const AnalysisOptions& options) {
  namespace fs = std::filesystem;
  fs::path dir(corpus_dir);
  std::ifstream in(dir / "manifest.json");
  if (!in) throw InputError("cannot open " + (dir / "manifest.json").string());
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("manifest.json: ") + e.what());
  }

  // cases are independent; results are joined in manifest order
  std::vector<std::future<CaseResult>> jobs;
  for (const auto& c : manifest.at("cases")) {
    jobs.push_back(std::async(std::launch::async, run_case, std::cref(dir), std::cref(c), std::cref(options)));
  }

  CorpusOutcome out;
  std::ostringstream text;
  std::size_t i = 0;
  for (const auto& c : manifest.at("cases")) {
    const std::string id = c.at("id").get<std::string>();
    CaseResult r = jobs[i++].get();
    text << "case\t" << id << "\t" << (r.bad.empty() ? "PASS" : "FAIL") << "\t" << c.value("origin", "") << "\n";
    for (const auto& n : r.notes) text << "note\t" << id << "\t" << n << "\n";
    for (const auto& b : r.bad) text << "mismatch\t" << id << "\t" << b << "\n";
    if (!r.bad.empty()) ++out.failures;
  }
  text << "summary\t" << manifest.at("cases").size() - out.failures << " passed, " << out.failures << " failed\n";
  out.text = text.str();
  return out;
}

}  // namespace quiverhh
