#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dmapf/deadline.hpp"
#include "dmapf/plan.hpp"
#include "dmapf/solver.hpp"
#include "dmapf/subsets.hpp"

namespace dmapf {

struct TeamMember {
  AgentTask task;
  Path path;
};

// The resolver's working partition: agents whose stored plans are mutually
// conflict-free (non_conflict) versus agents awaiting repair (conflict).
// Conflict-set plans never conflict with each other, but may conflict with
// non-conflict-set plans.
struct TeamState {
  GridMap grid;
  int makespan = 0;
  ConflictConfig cfg;
  std::map<AgentId, TeamMember> non_conflict;
  std::map<AgentId, TeamMember> conflict;

  TeamState(GridMap g, int T, ConflictConfig c = {})
      : grid(std::move(g)), makespan(T), cfg(c) {}

  std::size_t size() const { return non_conflict.size() + conflict.size(); }
  Solution to_solution() const;
};

enum class ResolveOutcome { Solved, Unsolvable };

struct ResolveReport {
  ResolveOutcome outcome = ResolveOutcome::Solved;
  int conflict_set_cardinality = 0;       // largest conflict set reached
  int winning_subset_cardinality = 0;     // 0 when no replanning was needed
  std::uint64_t winning_subset_number = 0;
  int decision_solver_calls = 0;
  int expansion_rounds = 0;
  std::set<AgentId> replanned_agents;     // paths changed during resolve
  bool guard_triggered = false;           // termination guard intervened
};

// Admits newly joined agents. If they can be planned without touching any
// existing path they land in non_conflict; otherwise they enter conflict
// carrying penalty-minimal plans. Requires fresh ids and an empty conflict
// set.
TeamState admit_agents(TeamState state, const std::vector<AgentTask>& new_tasks,
                       const Deadline& deadline = {});

// The conflict repair loop. Enumerates subsets of the conflict set by
// cardinality and replans the first subset that restores a collision-free
// team; when no subset suffices, expands the conflict set by the
// non-conflict agents involved in a penalty-minimal plan's remaining
// conflicts and releases conflict agents that are no longer involved. Falls
// back to a full-team replan in the worst case.
std::pair<TeamState, ResolveReport> resolve(TeamState state,
                                            const Deadline& deadline = {});

// Plans a team from scratch by admitting agents one at a time with earlier
// paths fixed, with a joint solve of all tasks as fallback. Returns nullopt
// when no collision-free joint plan exists at this makespan.
std::optional<Solution> plan_initial_team(const GridMap& grid,
                                          const std::vector<AgentTask>& tasks,
                                          int makespan,
                                          const ConflictConfig& cfg,
                                          const Deadline& deadline = {});

}  // namespace dmapf
