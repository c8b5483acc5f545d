#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convexa/json_io.hpp"
#include "convexa/rigidity.hpp"

namespace convexa {

struct AnalyzeOptions {
  RigidSearchBudget rigid;
  CanonicalFormOptions canonical;
  int threads = 1;
  bool timing = true;
};

struct GraphSummary {
  std::string shape;  // "empty", "path", "cycle" or "other"
  std::optional<LinearOrdering> ordering;
  bool triplewise = false;
  std::optional<IntervalViolation> interval_violation;  // paths only
  std::optional<bool> alternating;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
};

GraphSummary summarize_graph(const NeuralCode& code);

struct RealizationCheck {
  NeuralCode realized;
  std::vector<NeuronSet> missing;  // in the code, not realized
  std::vector<NeuronSet> extra;    // realized, not in the code
  bool match = false;
  // Closed realizations compare against interiors, open ones against closures.
  std::optional<std::string> nondegeneracy;  // nondegenerate | degenerate | inapplicable
  std::optional<NeuralCode> companion_code;
  std::vector<int> lower_dimensional;
};

RealizationCheck verify_realization(const NeuralCode& code, const Realization& r, bool nondegeneracy,
                                    const AtomOptions& options = {});

struct AnalysisReport {
  NeuralCode code;
  std::vector<std::string> warnings;
  std::optional<CanonicalForm> canonical_form;
  std::optional<std::string> canonical_form_error;
  std::vector<RFRelation> rf_relations;
  GraphSummary graph;
  std::optional<ObstructionCertificate> cycle;
  RigidSearchResult rigid;
  std::vector<RFMatch> rf_tuples;
  std::vector<ObstructionCertificate> certificates;
  std::optional<RealizationCheck> realization;
  std::map<std::string, double> timing_ms;

  bool obstruction_found() const { return !certificates.empty(); }
};

AnalysisReport analyze(const NeuralCode& code, const AnalyzeOptions& options = {});

// Shared wording for text and JSON renderings.
std::string verdict_text(const AnalysisReport& report);

Json to_json(const GraphSummary& g);
Json to_json(const RealizationCheck& check);
Json to_json(const AnalysisReport& report, bool with_timing = true);
std::string render_text(const AnalysisReport& report);
std::string render_text(const RealizationCheck& check, int n);

}  // namespace convexa
