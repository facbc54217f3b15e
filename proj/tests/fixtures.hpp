#pragma once

#include <vector>

#include "bipower/graph.hpp"
#include "bipower/intervals.hpp"
#include "bipower/mca.hpp"

namespace fixtures {

using namespace bipower;

/// Interval bigraph with 6 X and 5 Y vertices used to show that the
/// unclamped right endpoint can fall left of the left endpoint.
inline BipartiteGraph okamoto_graph() {
  return build_graph(6, 5,
                     {{0, 0}, {0, 1}, {0, 2},          // x1: y1 y2 y3
                      {1, 0}, {1, 1}, {1, 2}, {1, 3},  // x2: y1 y2 y3 y4
                      {2, 0}, {2, 1}, {2, 2}, {2, 4},  // x3: y1 y2 y3 y5
                      {3, 0},                          // x4: y1
                      {4, 1},                          // x5: y2
                      {5, 2}});                        // x6: y3
}

inline IntervalRepresentation okamoto_intervals() {
  return {{{4, 8}, {2, 8}, {5, 9}, {3, 4}, {6, 7}, {7, 8}},
          {{2, 5}, {5, 6}, {8, 9}, {0, 2}, {9, 10}}};
}

/// 6x7 staircase matrix shown with its R/C zero labelling.
inline Grid staircase_grid() {
  return {{1, 1, 0, 0, 0, 0, 0},
          {1, 1, 1, 0, 0, 0, 0},
          {0, 1, 1, 1, 1, 0, 0},
          {0, 0, 1, 1, 1, 0, 0},
          {0, 0, 0, 1, 1, 1, 0},
          {0, 0, 0, 0, 1, 1, 1}};
}

/// The printed labelling, row by row: '1' for ones, 'R'/'C' for zeros.
inline std::vector<const char*> staircase_labels() {
  return {"11RRRRR", "111RRRR", "C1111RR", "CC111RR", "CCC111R", "CCCC111"};
}

/// C_6 plus the chord a1-b2, on sides {a1,a2,a3} and {b1,b2,b3}:
/// cycle a1 b1 a2 b2 a3 b3.
inline BipartiteGraph c6_with_chord() {
  return build_graph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}, {0, 1}});
}

inline BipartiteGraph c6() { return build_graph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}); }

}  // namespace fixtures
