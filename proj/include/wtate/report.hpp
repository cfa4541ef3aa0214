#pragma once

#include <string>

#include <json.hpp>

#include "wtate/jobspec.hpp"
#include "wtate/tate.hpp"

namespace wtate {

using Document = nlohmann::ordered_json;

struct RegularityReport {
  int reg = 0;
  int sigma = 0;
  bool h0m_vanishes = false;
  int r = 0;
};

RegularityReport regularity_report(const ModulePresentation& M);

/// Machine-readable documents. Every text rendering below is produced from
/// the document alone, so rendering a parsed document reproduces the text.
Document regularity_document(const JobSpec& job, const RegularityReport& rep);
Document hilbert_document(const JobSpec& job, const ModulePresentation& M, Range range);
Document cohomology_document(const JobSpec& job, const CohomologyTable& table);
Document tate_document(const JobSpec& job, const TateWindow& w, int steps);

std::string render_regularity(const Document& doc);
std::string render_hilbert(const Document& doc);
/// Rows h^0 .. h^imax, columns j descending, then the provenance grid.
std::string render_cohomology(const Document& doc);
/// Flag pieces by descending filtration, then the R-side, the drop counts
/// and the one-line window.
std::string render_tate(const Document& doc);

/// Single-letter provenance code: D, V or S.
char provenance_code(Provenance p);

}  // namespace wtate
