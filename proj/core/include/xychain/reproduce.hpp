#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xychain/sweep.hpp"

namespace xychain {

/// A computed quantity next to its reference value.
struct ReferenceCheck {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;

  double delta() const { return computed - reference; }
  bool passed() const;
};

struct Reproduction {
  std::string figure;
  std::string csv;
  std::vector<ReferenceCheck> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Figure ids: fig1, fig2, fig3, fig4, scalars. Throws std::invalid_argument otherwise.
/// `grid` is the time grid used by the time-resolved figures (fig3, fig4).
Reproduction reproduce(std::string_view figure_id, const TimeGrid& grid = {});

inline constexpr std::string_view kFigureIds[] = {"fig1", "fig2", "fig3", "fig4", "scalars"};

/// A series vanishes and then revives: some t1 < t2 < t3 with values above `high`,
/// below `low`, above `high`.
bool has_echo(std::span<const double> series, double high, double low);

/// Pairs whose concurrence exceeds `epsilon` at some grid time.
std::vector<NodePair> entangled_pairs(const ChainSpec& spec, Representation rep,
                                      const TimeGrid& grid, double epsilon);

}  // namespace xychain
