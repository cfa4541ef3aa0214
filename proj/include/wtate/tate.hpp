#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtate/bgg.hpp"

namespace wtate {

/// reg(M) if H^0_m(M) = 0, else reg(M) + 1. Throws ZeroModuleError for M = 0.
int choose_r(const ModulePresentation& M);

/// Which branch of the algorithm produced an entry.
enum class Provenance {
  DimensionCount,       ///< j >= r, i = 0: dim M_j
  RegularityVanishing,  ///< r <= i + j (and not the case above): 0
  ResolutionSocle,      ///< socle of the free flag resolution of N + im(d|N)
};

std::string to_string(Provenance p);

struct CohomologyQuery {
  int j_min = 0;
  int j_max = 0;
  /// Highest cohomological index; negative means n.
  int i_max = -1;
  /// Truncation degree; must be at least choose_r(M). Empty means choose_r(M).
  std::optional<int> r;
  /// Cap on the expanded dimension of any differential module built.
  std::size_t max_dimension = 100000;
  /// Scan candidate cycles in reverse order in the twisted flag algorithm.
  bool reverse_order = false;
};

struct CohomologyEntry {
  long value = 0;
  Provenance provenance = Provenance::ResolutionSocle;
};

struct CohomologyTable {
  int j_min = 0;
  int j_max = 0;
  int i_max = 0;
  int r_used = 0;
  /// Keyed by (i, j).
  std::map<std::pair<int, int>, CohomologyEntry> entries;

  long at(int i, int j) const { return entries.at({i, j}).value; }
};

/// h^i(F(j)) for the sheaf F associated with M, over the query's ranges.
/// One resolution serves every entry that needs it.
CohomologyTable sheaf_cohomology(const ModulePresentation& M, const CohomologyQuery& q);

/// A nonzero differential entry between two generators of the window.
struct WindowLink {
  Twist source;
  Twist target;
  /// Filtration drop source.filtration() - target.filtration().
  int drop = 0;
};

/// Part of T(F) around the truncation degree r: the resolution side
/// T(F)_{> -r} from the twisted flag resolution and the R-side
/// omega_E(-d;0)^{dim M_d}, d = r .. r + sigma + 1, of T(F)_{<= -r}.
struct TateWindow {
  int r = 0;
  int sigma = 0;
  /// Filtration index -> summand multiplicities.
  std::map<int, std::map<Twist, int>> resolution_side;
  std::map<int, std::map<Twist, int>> r_side;
  std::vector<WindowLink> links;
};

struct TateOptions {
  std::optional<int> r;
  std::size_t max_dimension = 100000;
  bool reverse_order = false;
};

/// Runs `steps` iterations of the twisted flag algorithm on finite_piece(M, r).
TateWindow tate_window(const ModulePresentation& M, int steps, const TateOptions& options = {});

/// Summand constraint (-i-j > -r and i = 0 implies j < r on the resolution
/// side) and jump bound (1 <= drop <= sigma + 1). Returns the violations.
std::vector<std::string> validate_window(const TateWindow& w, int r, int sigma);

/// Highest filtration first, pieces separated by " | ", resolution side
/// before the R-side, ending in " | ..." when the R-side is present.
std::string format_window(const TateWindow& w);

}  // namespace wtate
