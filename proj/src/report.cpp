#include "wtate/report.hpp"

#include <algorithm>
#include <sstream>

namespace wtate {

namespace {

Document job_header(const JobSpec& job) {
  Document doc;
  if (!job.name.empty()) doc["name"] = job.name;
  doc["weights"] = job.weights;
  doc["char"] = job.characteristic;
  doc["vars"] = job.vars;
  doc["permutation"] = job.permutation;
  return doc;
}

std::string join_ints(const Document& a) {
  std::ostringstream os;
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? " " : "") << a[k].get<long>();
  return os.str();
}

std::string join_strings(const Document& a) {
  std::ostringstream os;
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? " " : "") << a[k].get<std::string>();
  return os.str();
}

void header_text(std::ostringstream& os, const Document& doc) {
  if (doc.contains("name")) os << "job: " << doc["name"].get<std::string>() << "\n";
  os << "weights: " << join_ints(doc["weights"]) << "\n";
  os << "vars: " << join_strings(doc["vars"]) << "\n";
  os << "char: " << doc["char"].get<long>() << "\n";
}

Document summands_document(const std::map<int, std::map<Twist, int>>& pieces) {
  Document out = Document::array();
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    Document summands = Document::array();
    std::vector<std::pair<Twist, int>> sorted(it->second.begin(), it->second.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first.c > b.first.c; });
    for (const auto& [t, m] : sorted) summands.push_back({{"c", t.c}, {"s", t.s}, {"mult", m}});
    out.push_back({{"l", it->first}, {"summands", summands}});
  }
  return out;
}

std::map<int, std::map<Twist, int>> pieces_from(const Document& a) {
  std::map<int, std::map<Twist, int>> out;
  for (const auto& piece : a) {
    auto& counts = out[piece["l"].get<int>()];
    for (const auto& s : piece["summands"]) counts[Twist{s["c"].get<int>(), s["s"].get<int>()}] = s["mult"].get<int>();
  }
  return out;
}

void pieces_text(std::ostringstream& os, const Document& a) {
  auto pieces = pieces_from(a);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    os << "l=" << it->first << ": " << format_summands(it->second) << "\n";
}

}  // namespace

char provenance_code(Provenance p) {
  switch (p) {
    case Provenance::DimensionCount: return 'D';
    case Provenance::RegularityVanishing: return 'V';
    case Provenance::ResolutionSocle: return 'S';
  }
  return '?';
}

RegularityReport regularity_report(const ModulePresentation& M) {
  RegularityReport rep;
  rep.reg = regularity(M);
  rep.sigma = M.ring().symonds();
  rep.h0m_vanishes = h0m_vanishes(M, rep.reg);
  rep.r = rep.h0m_vanishes ? rep.reg : rep.reg + 1;
  return rep;
}

Document regularity_document(const JobSpec& job, const RegularityReport& rep) {
  Document doc = job_header(job);
  doc["reg"] = rep.reg;
  doc["sigma"] = rep.sigma;
  doc["h0m_vanishes"] = rep.h0m_vanishes;
  doc["r"] = rep.r;
  return doc;
}

std::string render_regularity(const Document& doc) {
  std::ostringstream os;
  header_text(os, doc);
  os << "reg = " << doc["reg"].get<int>() << "\n";
  os << "sigma = " << doc["sigma"].get<int>() << "\n";
  os << "h0m_vanishes = " << (doc["h0m_vanishes"].get<bool>() ? "true" : "false") << "\n";
  os << "r = " << doc["r"].get<int>() << "\n";
  return os.str();
}

Document hilbert_document(const JobSpec& job, const ModulePresentation& M, Range range) {
  Document doc = job_header(job);
  doc["range"] = {range.first, range.second};
  Document dims = Document::array();
  for (int d = range.first; d <= range.second; ++d) dims.push_back(hilbert_function(M, d));
  doc["dims"] = dims;
  return doc;
}

std::string render_hilbert(const Document& doc) {
  std::ostringstream os;
  os << "degrees " << doc["range"][0].get<int>() << ".." << doc["range"][1].get<int>() << "\n";
  os << join_ints(doc["dims"]) << "\n";
  return os.str();
}

Document cohomology_document(const JobSpec& job, const CohomologyTable& table) {
  Document doc = job_header(job);
  doc["r_used"] = table.r_used;
  doc["twists"] = {table.j_min, table.j_max};
  doc["imax"] = table.i_max;
  Document values, provenance;
  for (int i = 0; i <= table.i_max; ++i) {
    Document row, prow;
    for (int j = table.j_max; j >= table.j_min; --j) {
      const auto& e = table.entries.at({i, j});
      row[std::to_string(j)] = e.value;
      prow[std::to_string(j)] = to_string(e.provenance);
    }
    values["h" + std::to_string(i)] = row;
    provenance["h" + std::to_string(i)] = prow;
  }
  doc["table"] = values;
  doc["provenance"] = provenance;
  return doc;
}

std::string render_cohomology(const Document& doc) {
  const int lo = doc["twists"][0].get<int>(), hi = doc["twists"][1].get<int>();
  const int imax = doc["imax"].get<int>();
  auto code = [](const std::string& name) {
    for (auto p : {Provenance::DimensionCount, Provenance::RegularityVanishing, Provenance::ResolutionSocle})
      if (to_string(p) == name) return std::string(1, provenance_code(p));
    return std::string("?");
  };

  std::vector<std::string> headers;
  for (int j = hi; j >= lo; --j) headers.push_back("j=" + std::to_string(j));
  std::vector<std::vector<std::string>> values(imax + 1), codes(imax + 1);
  for (int i = 0; i <= imax; ++i) {
    const auto& row = doc["table"]["h" + std::to_string(i)];
    const auto& prow = doc["provenance"]["h" + std::to_string(i)];
    for (int j = hi; j >= lo; --j) {
      values[i].push_back(std::to_string(row[std::to_string(j)].get<long>()));
      codes[i].push_back(code(prow[std::to_string(j)].get<std::string>()));
    }
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : values) width[c] = std::max(width[c], row[c].size());
  }
  const std::string label_pad(5, ' ');
  auto line = [&](std::ostringstream& os, const std::string& label, const std::vector<std::string>& cells) {
    os << label << std::string(label_pad.size() - label.size(), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c)
      os << "  " << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    os << "\n";
  };

  std::ostringstream os;
  header_text(os, doc);
  os << "r_used: " << doc["r_used"].get<int>() << "\n\n";
  line(os, "", headers);
  for (int i = 0; i <= imax; ++i) line(os, "h^" + std::to_string(i), values[i]);
  os << "\nprovenance:\n";
  line(os, "", headers);
  for (int i = 0; i <= imax; ++i) line(os, "h^" + std::to_string(i), codes[i]);
  os << "D = " << to_string(Provenance::DimensionCount) << ", V = " << to_string(Provenance::RegularityVanishing)
     << ", S = " << to_string(Provenance::ResolutionSocle) << "\n";
  return os.str();
}

Document tate_document(const JobSpec& job, const TateWindow& w, int steps) {
  Document doc = job_header(job);
  doc["r"] = w.r;
  doc["sigma"] = w.sigma;
  doc["steps"] = steps;
  doc["resolution_side"] = summands_document(w.resolution_side);
  doc["r_side"] = summands_document(w.r_side);
  std::map<int, int> drops;
  for (const auto& link : w.links) ++drops[link.drop];
  Document d = Document::object();
  for (const auto& [drop, count] : drops) d[std::to_string(drop)] = count;
  doc["drops"] = d;
  return doc;
}

std::string render_tate(const Document& doc) {
  std::ostringstream os;
  header_text(os, doc);
  os << "r = " << doc["r"].get<int>() << ", sigma = " << doc["sigma"].get<int>()
     << ", steps = " << doc["steps"].get<int>() << "\n";
  os << "resolution side:\n";
  pieces_text(os, doc["resolution_side"]);
  os << "R-side:\n";
  pieces_text(os, doc["r_side"]);
  os << "drops:";
  if (doc["drops"].empty()) os << " none";
  for (auto it = doc["drops"].begin(); it != doc["drops"].end(); ++it)
    os << " " << it.key() << " x" << it.value().get<int>();
  os << "\n";
  TateWindow w;
  w.resolution_side = pieces_from(doc["resolution_side"]);
  w.r_side = pieces_from(doc["r_side"]);
  os << "window: " << format_window(w) << "\n";
  return os.str();
}

}  // namespace wtate
