#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dmapf/grid.hpp"

namespace dmapf {

using AgentId = int;

struct AgentTask {
  AgentId id = 0;
  Position start;
  Position goal;
  int join_time = 0;
};

// One agent's position at every timestep 0..T. Agents occupy their goal cell
// after arrival and keep conflicting there; states is a total function of t.
struct Path {
  AgentId agent = 0;
  std::vector<Position> states;

  int length() const { return static_cast<int>(states.size()); }
  const Position& at(int t) const { return states[static_cast<size_t>(t)]; }

  friend bool operator==(const Path&, const Path&) = default;
};

using PlanMap = std::map<AgentId, Path>;

struct Solution {
  int makespan = 0;
  PlanMap paths;
};

struct Conflict {
  enum class Kind { Vertex, Swap };

  AgentId a = 0;  // a < b always
  AgentId b = 0;
  int time = 0;
  Kind kind = Kind::Vertex;
  Position p;  // Vertex: the shared cell. Swap: a moves p->q, b moves q->p.
  Position q;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

std::string to_string(const Conflict& c);

// forbid_swaps governs hard feasibility (head-on exchanges are collisions);
// count_swaps_in_penalty governs whether the cross-set penalty counts them.
struct ConflictConfig {
  bool forbid_swaps = true;
  bool count_swaps_in_penalty = true;
};

// Empty result iff the path is a valid length-(T+1) walk for this task.
// Violations name the offending timestep.
std::vector<std::string> validate_path(const GridMap& grid,
                                       const AgentTask& task, const Path& path,
                                       int makespan);

// Every vertex conflict over all unordered pairs and timesteps, plus every
// swap conflict when cfg.forbid_swaps. Sorted by (time, a, b). Throws on
// mismatched path lengths.
std::vector<Conflict> find_conflicts(const GridMap& grid, const Solution& sol,
                                     const ConflictConfig& cfg);

// Vertex and swap conflicts between two disjoint plan groups, with the swap
// part controlled by count_swaps. Used for penalty accounting and for
// conflict-set expansion; not subject to cfg.forbid_swaps.
std::vector<Conflict> cross_conflicts(const PlanMap& group_a,
                                      const PlanMap& group_b,
                                      bool count_swaps);

// The weak-constraint objective: number of (candidate agent, fixed agent, t)
// cell co-occupancies, plus candidate/fixed swap events when
// cfg.count_swaps_in_penalty. A cell shared with k fixed agents adds k.
int count_cross_conflicts(const PlanMap& candidate, const PlanMap& fixed,
                          const ConflictConfig& cfg);

std::set<AgentId> conflict_participants(const std::vector<Conflict>& conflicts);

}  // namespace dmapf
