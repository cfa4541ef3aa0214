#include "wtate/jobspec.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wtate {

using nlohmann::json;

std::optional<Range> parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  auto number = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    if (s.empty()) return std::nullopt;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  auto lo = number(text.substr(0, dots));
  auto hi = number(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return Range{*lo, *hi};
}

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  offset = std::min(offset, text.size());
  for (std::size_t k = 0; k < offset; ++k) {
    if (text[k] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Offset of the first occurrence of the quoted string `s` at or after `from`.
std::size_t find_literal(std::string_view text, const std::string& s, std::size_t from = 0) {
  std::string quoted = json(s).dump();
  auto k = text.find(quoted, from);
  return k == std::string_view::npos ? 0 : k;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& msg) {
  Position p = position_of(text, offset);
  throw SpecError(msg, p.line, p.column);
}

[[noreturn]] void fail_key(std::string_view text, const std::string& key, const std::string& msg) {
  fail_at(text, find_literal(text, key), msg);
}

int as_int(std::string_view text, const std::string& key, const json& v) {
  if (!v.is_number_integer()) fail_key(text, key, "'" + key + "' must be an integer");
  auto x = v.get<long long>();
  if (x < INT_MIN || x > INT_MAX) fail_key(text, key, "'" + key + "' is out of range");
  return static_cast<int>(x);
}

std::vector<std::string> as_strings(std::string_view text, const std::string& key, const json& v) {
  if (!v.is_array()) fail_key(text, key, "'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) fail_key(text, key, "'" + key + "' must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Range as_range(std::string_view text, const std::string& key, const json& v) {
  if (v.is_string()) {
    if (auto r = parse_range(v.get<std::string>())) return *r;
  } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    int lo = v[0].get<int>(), hi = v[1].get<int>();
    if (lo <= hi) return {lo, hi};
  }
  fail_key(text, key, "'" + key + "' must be a range \"LO..HI\" or [LO, HI] with LO <= HI");
}

void reject_unknown(std::string_view text, const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail_key(text, it.key(), "unknown key '" + it.key() + "' in " + where);
}

}  // namespace

JobSpec parse_job_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // Drop the library's own "[json.exception...] parse error at line L, column C: " prefix.
    auto column = msg.find("column ");
    auto colon = column == std::string::npos ? std::string::npos : msg.find(": ", column);
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON: " + msg);
  }
  if (!doc.is_object()) fail_at(text, 0, "job specification must be a JSON object");
  reject_unknown(text, doc, {"name", "weights", "char", "vars", "module", "defaults"}, "the job specification");

  JobSpec job;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail_key(text, "name", "'name' must be a string");
    job.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("weights")) fail_at(text, 0, "missing 'weights'");
  const json& w = doc["weights"];
  if (!w.is_array() || w.empty()) fail_key(text, "weights", "'weights' must be a nonempty array of positive integers");
  std::vector<int> raw;
  for (const auto& x : w) {
    int v = as_int(text, "weights", x);
    if (v < 1) fail_key(text, "weights", "weights must be positive");
    raw.push_back(v);
  }
  if (raw.size() > 30) fail_key(text, "weights", "at most 30 variables are supported");

  if (doc.contains("char")) {
    int p = as_int(text, "char", doc["char"]);
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail_key(text, "char", "'char' must be a prime");
    job.characteristic = static_cast<std::uint32_t>(p);
  }

  std::vector<std::string> names;
  if (doc.contains("vars")) {
    names = as_strings(text, "vars", doc["vars"]);
    if (names.size() != raw.size()) fail_key(text, "vars", "'vars' must name every variable");
  } else {
    for (std::size_t i = 0; i < raw.size(); ++i) names.push_back("x" + std::to_string(i));
  }

  job.permutation.resize(raw.size());
  std::iota(job.permutation.begin(), job.permutation.end(), 0);
  std::stable_sort(job.permutation.begin(), job.permutation.end(), [&](int a, int b) { return raw[a] < raw[b]; });
  for (int k : job.permutation) {
    job.weights.push_back(raw[k]);
    job.vars.push_back(names[k]);
  }
  try {
    WeightedRing(job.weights, PrimeField(job.characteristic), job.vars);
  } catch (const Error& e) {
    fail_key(text, doc.contains("vars") ? "vars" : "weights", e.what());
  }

  if (!doc.contains("module")) fail_at(text, 0, "missing 'module'");
  const json& m = doc["module"];
  if (!m.is_object()) fail_key(text, "module", "'module' must be an object");
  if (!m.contains("kind") || !m["kind"].is_string())
    fail_key(text, "module", "'module' needs a string 'kind'");
  job.module.kind = m["kind"].get<std::string>();
  if (job.module.kind == "quotient-by-ideal") {
    reject_unknown(text, m, {"kind", "generators"}, "'module'");
    if (m.contains("generators")) job.module.generators = as_strings(text, "generators", m["generators"]);
  } else if (job.module.kind == "cokernel") {
    reject_unknown(text, m, {"kind", "ambient_degrees", "matrix"}, "'module'");
    if (!m.contains("ambient_degrees") || !m["ambient_degrees"].is_array())
      fail_key(text, "module", "a cokernel needs an 'ambient_degrees' array");
    for (const auto& x : m["ambient_degrees"]) job.module.ambient_degrees.push_back(as_int(text, "ambient_degrees", x));
    if (m.contains("matrix")) {
      const json& rows = m["matrix"];
      if (!rows.is_array()) fail_key(text, "matrix", "'matrix' must be an array of rows");
      for (const auto& row : rows) job.module.matrix.push_back(as_strings(text, "matrix", row));
      if (job.module.matrix.size() != job.module.ambient_degrees.size())
        fail_key(text, "matrix", "'matrix' needs one row per ambient degree");
      for (const auto& row : job.module.matrix)
        if (row.size() != job.module.matrix.front().size()) fail_key(text, "matrix", "'matrix' rows differ in length");
    }
  } else {
    fail_at(text, find_literal(text, job.module.kind), "unknown module kind '" + job.module.kind +
                                                           "' (expected \"quotient-by-ideal\" or \"cokernel\")");
  }

  if (doc.contains("defaults")) {
    const json& d = doc["defaults"];
    if (!d.is_object()) fail_key(text, "defaults", "'defaults' must be an object");
    reject_unknown(text, d, {"twists", "imax", "r", "steps", "range", "max_dimension"}, "'defaults'");
    if (d.contains("twists")) job.defaults.twists = as_range(text, "twists", d["twists"]);
    if (d.contains("range")) job.defaults.range = as_range(text, "range", d["range"]);
    if (d.contains("imax")) job.defaults.imax = as_int(text, "imax", d["imax"]);
    if (d.contains("r")) job.defaults.r = as_int(text, "r", d["r"]);
    if (d.contains("steps")) job.defaults.steps = as_int(text, "steps", d["steps"]);
    if (d.contains("max_dimension")) {
      int cap = as_int(text, "max_dimension", d["max_dimension"]);
      if (cap < 1) fail_key(text, "max_dimension", "'max_dimension' must be positive");
      job.defaults.max_dimension = static_cast<std::size_t>(cap);
    }
  }
  return job;
}

JobSpec load_job_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open job specification '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job_spec(ss.str());
}

WeightedRing build_ring(const JobSpec& job) {
  return WeightedRing(job.weights, PrimeField(job.characteristic), job.vars);
}

ModulePresentation build_module(const JobSpec& job, std::string_view text) {
  WeightedRing R = build_ring(job);
  const std::size_t module_at = text.find("\"module\"");
  auto fail_poly = [&](const std::string& s, std::size_t column, const std::string& msg) -> void {
    if (text.empty()) throw SpecError(msg + " in \"" + s + "\"", 1, column);
    std::size_t at = find_literal(text, s, module_at == std::string_view::npos ? 0 : module_at);
    fail_at(text, at + column, msg);  // +1 for the quote, -1 for the 1-based column
  };
  auto parse = [&](const std::string& s) {
    try {
      return parse_polynomial(s, R);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto cut = msg.rfind(" at column ");
      fail_poly(s, e.column(), cut == std::string::npos ? msg : msg.substr(0, cut));
    } catch (const OverflowError& e) {
      fail_poly(s, 1, e.what());
    }
    return Polynomial();
  };

  if (job.module.kind == "quotient-by-ideal") {
    std::vector<Polynomial> gens;
    for (const auto& s : job.module.generators) {
      Polynomial f = parse(s);
      if (!f.is_zero() && !f.homogeneous_degree()) fail_poly(s, 1, "ideal generator is not homogeneous");
      gens.push_back(std::move(f));
    }
    return ModulePresentation::quotient(R, gens);
  }

  const auto& rows = job.module.matrix;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<ModuleElement> relations;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::vector<Polynomial> comps;
    for (const auto& row : rows) comps.push_back(parse(row[c]));
    ModuleElement col = ModuleElement::from_components(comps, R.field());
    if (!col.is_zero() && !col.homogeneous_degree(job.module.ambient_degrees)) {
      const std::string& first = rows.front()[c];
      fail_poly(first, 1, "matrix column " + std::to_string(c + 1) + " is not homogeneous for the ambient degrees");
    }
    relations.push_back(std::move(col));
  }
  return ModulePresentation(R, job.module.ambient_degrees, std::move(relations));
}

}  // namespace wtate
