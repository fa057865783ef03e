#pragma once

#include <optional>

#include <json.hpp>

#include "irrhodge/toric_model.hpp"

namespace irrhodge {

struct BoundaryComponent {
  int id = 0;
  int64_t a = 0;  // pole order of f1 along the component
  int64_t b = 0;  // pole order of f2
};

struct BlowupRecord {
  int step = 0;
  std::pair<int, int> center{0, 0};
  int exceptional_id = 0;
  int64_t ea = 0, eb = 0;
  int64_t min_delta_before = 0, min_delta_after = 0;
};

enum class EliminationMode { surface, nerve };

/// Boundary-component incidence state of the blowup elimination.
/// Surface mode keeps the incidence graph; nerve mode carries the full dual
/// complex (its maximal cells) and blowups subdivide the center edge.
struct EliminationState {
  EliminationMode mode = EliminationMode::surface;
  std::map<int, BoundaryComponent> components;
  std::set<std::pair<int, int>> edges;    // id pairs, first < second
  std::vector<std::vector<int>> cells;    // nerve mode: maximal cells
  std::vector<BlowupRecord> history;
  int next_id = 0;

  int add_component(int64_t a, int64_t b);
  void add_edge(int i, int j);
  bool adjacent(int i, int j) const;
};

int64_t delta(const EliminationState& s, int d1, int d2);

/// Minimum of delta over all pairs (0 for fewer than two components).
int64_t min_delta(const EliminationState& s);

/// The smallest-delta pair when negative, ties broken lexicographically.
std::optional<std::pair<int, int>> select_center(const EliminationState& s);

/// One blowup: removes the center edge, adds the exceptional component with
/// summed orders. Asserts the recomputed delta table against the update
/// formulas.
EliminationState blowup_step(const EliminationState& s, std::pair<int, int> center);

bool check_nondegenerate_config(const EliminationState& s);

struct EliminationExhausted : MaxStepsError {
  EliminationExhausted(const std::string& msg, EliminationState st)
      : MaxStepsError(msg), state(std::move(st)) {}
  EliminationState state;
};

/// Repeats blowup_step until every delta is >= 0.
EliminationState eliminate(EliminationState s, int max_steps = 500);

nlohmann::json trace_json(const std::vector<BlowupRecord>& trace);

struct ToricEliminationResult {
  ToricModel model;                              // final surface model for f1 + f2
  std::map<LatticePoint, int> ray_component;     // boundary ray -> component id
  EliminationState state;                        // final abstract state (with history)
};

/// The blowup elimination on the product of two curve compactifications,
/// realized by stellar subdivisions; the abstract state and the fan-derived
/// orders are cross-checked after every step.
ToricEliminationResult toric_eliminate(const ToricModel& c1, const ToricModel& c2,
                                       int max_steps = 500);

}  // namespace irrhodge
