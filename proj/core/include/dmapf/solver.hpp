#pragma once

#include <optional>
#include <vector>

#include "dmapf/deadline.hpp"
#include "dmapf/grid.hpp"
#include "dmapf/plan.hpp"

namespace dmapf {

// A bounded-makespan planning request: find paths of length makespan+1 for
// `tasks`, treating `fixed` paths as immutable facts. Task ids and fixed ids
// must be disjoint; every fixed path must span the makespan.
struct SolveRequest {
  GridMap grid;
  std::vector<AgentTask> tasks;
  PlanMap fixed;
  int makespan = 0;
  ConflictConfig cfg;
};

// Complete decision procedure. Returns plans with zero conflicts among the
// tasks and against every fixed path, or nullopt iff no such plans exist at
// this makespan. Deterministic. Throws std::invalid_argument for malformed
// requests (blocked start/goal, overlapping id sets).
std::optional<PlanMap> solve_decision(const SolveRequest& req,
                                      const Deadline& deadline = {});

struct MinConflictResult {
  PlanMap plans;
  int penalty = 0;
};

// Optimal conflict-count minimisation. Returns plans that are valid, have
// zero conflicts among the tasks (hard, per cfg.forbid_swaps), and minimise
// count_cross_conflicts against `fixed`; the returned penalty is the global
// minimum. Throws IntrinsicallyInfeasibleError when the tasks admit no joint
// plan even ignoring the fixed agents.
MinConflictResult solve_min_conflict(const SolveRequest& req,
                                     const Deadline& deadline = {});

// Cheap necessary condition: every task's start-to-goal distance fits in the
// makespan. false implies solve_decision returns nullopt.
bool lower_bound_feasible(const SolveRequest& req);

}  // namespace dmapf
