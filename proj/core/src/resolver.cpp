#include "dmapf/resolver.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmapf/errors.hpp"

namespace dmapf {

namespace {

PlanMap paths_of(const std::map<AgentId, TeamMember>& members) {
  PlanMap out;
  for (const auto& [id, m] : members) out.emplace(id, m.path);
  return out;
}

std::vector<AgentId> ids_of(const std::map<AgentId, TeamMember>& members) {
  std::vector<AgentId> out;
  out.reserve(members.size());
  for (const auto& [id, m] : members) out.push_back(id);
  return out;
}

bool covers(const std::vector<AgentId>& subset,
            const std::vector<Conflict>& conflicts) {
  for (const Conflict& c : conflicts) {
    bool touches = std::binary_search(subset.begin(), subset.end(), c.a) ||
                   std::binary_search(subset.begin(), subset.end(), c.b);
    if (!touches) return false;
  }
  return true;
}

}  // namespace

Solution TeamState::to_solution() const {
  Solution sol;
  sol.makespan = makespan;
  for (const auto& [id, m] : non_conflict) sol.paths.emplace(id, m.path);
  for (const auto& [id, m] : conflict) sol.paths.emplace(id, m.path);
  return sol;
}

TeamState admit_agents(TeamState state, const std::vector<AgentTask>& new_tasks,
                       const Deadline& deadline) {
  if (!state.conflict.empty()) {
    throw std::invalid_argument(
        "admit_agents: previous join not fully resolved");
  }
  for (const AgentTask& task : new_tasks) {
    if (state.non_conflict.count(task.id)) {
      throw std::invalid_argument("admit_agents: duplicate agent id " +
                                  std::to_string(task.id));
    }
  }
  SolveRequest req{state.grid, new_tasks, paths_of(state.non_conflict),
                   state.makespan, state.cfg};
  if (auto plans = solve_decision(req, deadline)) {
    for (const AgentTask& task : new_tasks) {
      state.non_conflict.emplace(task.id,
                                 TeamMember{task, plans->at(task.id)});
    }
    return state;
  }
  MinConflictResult mc = solve_min_conflict(req, deadline);
  for (const AgentTask& task : new_tasks) {
    state.conflict.emplace(task.id, TeamMember{task, mc.plans.at(task.id)});
  }
  return state;
}

std::pair<TeamState, ResolveReport> resolve(TeamState state,
                                            const Deadline& deadline) {
  ResolveReport report;
  report.conflict_set_cardinality = static_cast<int>(state.conflict.size());

  PlanMap entry_paths = paths_of(state.non_conflict);
  for (const auto& [id, m] : state.conflict) entry_paths.emplace(id, m.path);

  std::set<AgentId> ever_conflicted;
  for (const auto& [id, m] : state.conflict) ever_conflicted.insert(id);
  bool releases_enabled = true;

  auto promote_all = [&state]() {
    for (auto& [id, m] : state.conflict) {
      state.non_conflict.emplace(id, std::move(m));
    }
    state.conflict.clear();
  };

  while (true) {
    deadline.check();
    std::vector<Conflict> team_conflicts =
        find_conflicts(state.grid, state.to_solution(), state.cfg);
    std::vector<Conflict> relevant;
    for (const Conflict& c : team_conflicts) {
      if (state.conflict.count(c.a) || state.conflict.count(c.b)) {
        relevant.push_back(c);
      } else {
        throw std::logic_error(
            "team invariant broken: conflict between two non-conflict-set "
            "agents (" + to_string(c) + ")");
      }
    }
    if (relevant.empty()) {
      promote_all();
      report.outcome = ResolveOutcome::Solved;
      break;
    }

    // Step (a): replan the first subset, in cardinality order, that can
    // cover every remaining conflict and admits a collision-free repair.
    bool won = false;
    SubsetEnumerator enumerator(ids_of(state.conflict));
    while (auto item = enumerator.next()) {
      deadline.check();
      const std::vector<AgentId>& subset = item->members;
      if (!covers(subset, relevant)) continue;

      SolveRequest req;
      req.grid = state.grid;
      req.makespan = state.makespan;
      req.cfg = state.cfg;
      for (AgentId id : subset) {
        req.tasks.push_back(state.conflict.at(id).task);
      }
      req.fixed = paths_of(state.non_conflict);
      for (const auto& [id, m] : state.conflict) {
        if (!std::binary_search(subset.begin(), subset.end(), id)) {
          req.fixed.emplace(id, m.path);
        }
      }
      if (!lower_bound_feasible(req)) continue;

      report.decision_solver_calls++;
      if (auto plans = solve_decision(req, deadline)) {
        for (AgentId id : subset) {
          state.conflict.at(id).path = plans->at(id);
        }
        if (!find_conflicts(state.grid, state.to_solution(), state.cfg)
                 .empty()) {
          throw std::logic_error("subset repair left residual conflicts");
        }
        promote_all();
        report.winning_subset_cardinality = static_cast<int>(subset.size());
        report.winning_subset_number = item->number;
        report.outcome = ResolveOutcome::Solved;
        won = true;
        break;
      }
    }
    if (won) break;

    if (state.non_conflict.empty()) {
      // Full-team replanning was the final subset above and it failed.
      report.outcome = ResolveOutcome::Unsolvable;
      break;
    }

    // Step (c): penalty-minimal plans for the whole conflict set, then pull
    // in the non-conflict agents involved in the remaining conflicts.
    report.expansion_rounds++;
    SolveRequest req;
    req.grid = state.grid;
    req.makespan = state.makespan;
    req.cfg = state.cfg;
    for (const auto& [id, m] : state.conflict) req.tasks.push_back(m.task);
    req.fixed = paths_of(state.non_conflict);
    MinConflictResult mc = solve_min_conflict(req, deadline);
    for (auto& [id, m] : state.conflict) m.path = mc.plans.at(id);

    PlanMap conflict_paths = paths_of(state.conflict);
    PlanMap outside_paths = paths_of(state.non_conflict);
    std::vector<Conflict> penalty_view = cross_conflicts(
        conflict_paths, outside_paths, state.cfg.count_swaps_in_penalty);
    std::vector<Conflict> feasibility_view = cross_conflicts(
        conflict_paths, outside_paths, state.cfg.forbid_swaps);

    std::set<AgentId> pull = conflict_participants(penalty_view);
    if (pull.empty() && !feasibility_view.empty()) {
      // The penalty objective is blind to the remaining conflicts (possible
      // when swaps are forbidden but not penalised); fall back to the
      // feasibility view so the loop keeps making progress.
      pull = conflict_participants(feasibility_view);
      report.guard_triggered = true;
    }

    bool grew = false;
    for (AgentId id : pull) {
      if (state.non_conflict.count(id) && !ever_conflicted.count(id)) {
        grew = true;
      }
    }
    if (!grew) {
      // No agent joins the conflict set for the first time; disable releases
      // so the set grows monotonically and the loop terminates.
      releases_enabled = false;
      report.guard_triggered = true;
    }

    std::set<AgentId> involved = conflict_participants(feasibility_view);
    for (AgentId id : conflict_participants(penalty_view)) involved.insert(id);

    for (AgentId id : pull) {
      auto it = state.non_conflict.find(id);
      if (it == state.non_conflict.end()) continue;
      ever_conflicted.insert(id);
      state.conflict.emplace(id, std::move(it->second));
      state.non_conflict.erase(it);
    }
    if (releases_enabled) {
      // Step (d): release conflict agents not involved in any remaining
      // conflict.
      for (auto it = state.conflict.begin(); it != state.conflict.end();) {
        if (!involved.count(it->first)) {
          state.non_conflict.emplace(it->first, std::move(it->second));
          it = state.conflict.erase(it);
        } else {
          ++it;
        }
      }
    }
    report.conflict_set_cardinality =
        std::max(report.conflict_set_cardinality,
                 static_cast<int>(state.conflict.size()));
  }

  for (const auto& [id, m] : state.non_conflict) {
    auto it = entry_paths.find(id);
    if (it != entry_paths.end() && !(it->second == m.path)) {
      report.replanned_agents.insert(id);
    }
  }
  return {std::move(state), report};
}

std::optional<Solution> plan_initial_team(const GridMap& grid,
                                          const std::vector<AgentTask>& tasks,
                                          int makespan,
                                          const ConflictConfig& cfg,
                                          const Deadline& deadline) {
  std::vector<AgentTask> ordered = tasks;
  std::sort(ordered.begin(), ordered.end(),
            [](const AgentTask& a, const AgentTask& b) { return a.id < b.id; });
  Solution sol;
  sol.makespan = makespan;
  bool incremental_ok = true;
  for (const AgentTask& task : ordered) {
    SolveRequest req{grid, {task}, sol.paths, makespan, cfg};
    if (auto plans = solve_decision(req, deadline)) {
      sol.paths.emplace(task.id, plans->at(task.id));
    } else {
      incremental_ok = false;
      break;
    }
  }
  if (incremental_ok) return sol;

  // One agent at a time failed; fall back to a joint solve of the team.
  SolveRequest req{grid, ordered, PlanMap{}, makespan, cfg};
  if (auto plans = solve_decision(req, deadline)) {
    return Solution{makespan, *plans};
  }
  return std::nullopt;
}

}  // namespace dmapf
