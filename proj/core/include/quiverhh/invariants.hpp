#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/hochschild.hpp"
#include "quiverhh/homotopy.hpp"

namespace quiverhh {

struct AnalysisOptions {
  std::size_t support_cap = 12;
  std::size_t toral_cap = 1000000;
};

/// Everything computed for one presentation. The algebra is heap allocated so
/// that the HH1 reference to it stays valid when the analysis moves.
struct PresentationAnalysis {
  Presentation presentation;
  std::unique_ptr<RewriteSystem> rewriting;
  std::unique_ptr<Algebra> algebra;
  std::unique_ptr<HH1> hh1;
  HomotopyAnalysis homotopy;
  WalkSystem walks;
  std::size_t betti = 0;
  MinimalityResult minimality;
  bool admissible = false;
  std::size_t character_dim = 0;
  std::size_t torus_dim = 0;
  std::size_t theta_dim = 0;
};

PresentationAnalysis analyze_presentation(const Presentation& p, const AnalysisOptions& options = {});

/// Arrows and idempotents independent modulo the square of the arrow ideal,
/// and the arrow ideal nilpotent.
bool is_admissible(const Algebra& a, const QuiverImages& images);

struct MtRankBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::string note;
};

/// Throws InputError when no supplied presentation is minimal.
MtRankBounds mt_rank_bounds(const std::vector<PresentationAnalysis>& analyses);

/// Throws InputError unless every presentation is certified isomorphic to the
/// first, either through its maps block or by identical structure constants.
void check_same_algebra(const std::vector<PresentationAnalysis>& analyses);

struct ReportRow {
  std::string name;
  std::size_t betti = 0;
  std::string pi1;
  std::size_t dual_dim = 0;
  std::size_t character_dim = 0;
  std::size_t torus_dim = 0;
  std::size_t theta_dim = 0;
  std::string status;
  bool minimal = false;
  bool admissible = false;
  bool consistent = true;
};

struct InvariantReport {
  std::string algebra_id;
  std::string field;
  std::size_t dim = 0;
  std::vector<ReportRow> rows;
  MtRankBounds bounds;
  std::size_t cartan_trace = 0;
  std::size_t hh1_dim = 0;
  NilpotencyReport nilpotency;
  std::vector<std::string> violations;
};

/// Builds the report; violations of the three-way equality on minimal rows are
/// collected in the report, not thrown.
InvariantReport verify_theorem_b(const std::vector<PresentationAnalysis>& analyses, const AnalysisOptions& options = {});

std::string format_report(const InvariantReport& r);
/// One JSON object per row, one per line.
std::string format_records(const InvariantReport& r);

struct CorpusOutcome {
  std::string text;
  std::size_t failures = 0;
};

/// Runs every case of manifest.json inside corpus_dir.
CorpusOutcome run_corpus(const std::string& corpus_dir, const AnalysisOptions& options = {});

}  // namespace quiverhh
