#include "dmapf/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "dmapf/errors.hpp"

// Bounded-makespan search. The high level is a conflict-tree search over the
// planned agents: each node holds per-agent reservations (banned cells and
// banned moves), the first remaining conflict is split into two child
// reservations, and nodes are expanded best-first. The low level plans one
// agent over the time-expanded grid by dynamic programming and extracts the
// canonically smallest optimal path, so identical requests always produce
// identical plans.
//
// Two modes share the machinery. In decision mode the fixed paths are hard
// obstacles and all costs are zero: the first conflict-free node is a
// witness, exhaustion is a proof of infeasibility at this horizon. In
// penalty mode the fixed paths only cost (one unit per co-occupancy, plus
// swap overlaps when configured) and node costs are lower bounds, so the
// first conflict-free node popped carries the minimum penalty.

namespace dmapf {
namespace {

constexpr int kInfCost = std::numeric_limits<int>::max() / 4;

struct Constraints {
  std::set<std::pair<int, int>> vertex;          // (t, cell)
  std::set<std::tuple<int, int, int>> edge;      // (t, from, to)
};

// Occupancy of the fixed paths, per timestep.
class FixedTables {
 public:
  FixedTables(const GridMap& grid, const PlanMap& fixed, int makespan)
      : cells_(grid.cell_count()) {
    occupancy_.assign(static_cast<std::size_t>(makespan + 1) * cells_, 0);
    swap_edges_.resize(makespan > 0 ? makespan : 0);
    for (const auto& [id, path] : fixed) {
      for (int t = 0; t <= makespan; ++t) {
        occupancy_[static_cast<std::size_t>(t) * cells_ +
                   grid.index(path.at(t))]++;
      }
      for (int t = 0; t < makespan; ++t) {
        int from = grid.index(path.at(t));
        int to = grid.index(path.at(t + 1));
        if (from != to) {
          // a planned agent moving to->from at step t would swap with this one
          swap_edges_[t][{to, from}]++;
        }
      }
    }
  }

  int occupancy(int t, int cell) const {
    return occupancy_[static_cast<std::size_t>(t) * cells_ + cell];
  }

  int swap_count(int t, int from, int to) const {
    const auto& m = swap_edges_[t];
    auto it = m.find({from, to});
    return it == m.end() ? 0 : it->second;
  }

 private:
  int cells_;
  std::vector<int> occupancy_;
  std::vector<std::map<std::pair<int, int>, int>> swap_edges_;
};

struct AgentPlan {
  std::vector<int> cells;  // cell index per timestep
  int cost = 0;
};

class LowLevel {
 public:
  LowLevel(const GridMap& grid, const FixedTables& fixed, int makespan,
           const ConflictConfig& cfg, bool fixed_hard)
      : grid_(grid),
        fixed_(fixed),
        horizon_(makespan),
        fixed_hard_(fixed_hard),
        hard_swaps_(fixed_hard && cfg.forbid_swaps),
        penalize_swaps_(!fixed_hard && cfg.count_swaps_in_penalty) {
    successors_.resize(grid.cell_count());
    for (int c = 0; c < grid.cell_count(); ++c) {
      Position p = grid.position(c);
      if (!grid.passable(p)) continue;
      for (const Position& q : neighbors(grid, p)) {
        successors_[c].push_back(grid.index(q));  // canonical order
      }
    }
  }

  // Minimum-cost walk start -> goal over exactly horizon_ steps, honoring the
  // agent's reservations; among optima, the canonically smallest path.
  std::optional<AgentPlan> plan(int start, int goal,
                                const Constraints& cons) const {
    const int cells = grid_.cell_count();
    std::vector<int> cost(static_cast<std::size_t>(horizon_ + 1) * cells,
                          kInfCost);
    auto at = [&](int t, int c) -> int& {
      return cost[static_cast<std::size_t>(t) * cells + c];
    };
    if (!cell_banned(goal, horizon_, cons)) {
      at(horizon_, goal) = vertex_cost(goal, horizon_);
    }
    for (int t = horizon_ - 1; t >= 0; --t) {
      for (int c = 0; c < cells; ++c) {
        if (successors_[c].empty() || cell_banned(c, t, cons)) continue;
        int best = kInfCost;
        for (int q : successors_[c]) {
          if (!move_allowed(c, q, t, cons)) continue;
          int tail = at(t + 1, q);
          if (tail >= kInfCost) continue;
          best = std::min(best, edge_cost(c, q, t) + tail);
        }
        if (best < kInfCost) at(t, c) = vertex_cost(c, t) + best;
      }
    }
    if (at(0, start) >= kInfCost) return std::nullopt;

    AgentPlan out;
    out.cost = at(0, start);
    out.cells.reserve(horizon_ + 1);
    out.cells.push_back(start);
    int cur = start;
    for (int t = 0; t < horizon_; ++t) {
      int need = at(t, cur) - vertex_cost(cur, t);
      for (int q : successors_[cur]) {  // first match is canonically smallest
        if (!move_allowed(cur, q, t, cons)) continue;
        int tail = at(t + 1, q);
        if (tail < kInfCost && edge_cost(cur, q, t) + tail == need) {
          cur = q;
          break;
        }
      }
      out.cells.push_back(cur);
    }
    return out;
  }

 private:
  bool cell_banned(int c, int t, const Constraints& cons) const {
    if (fixed_hard_ && fixed_.occupancy(t, c) > 0) return true;
    return cons.vertex.count({t, c}) > 0;
  }

  bool move_allowed(int from, int to, int t, const Constraints& cons) const {
    if (hard_swaps_ && from != to && fixed_.swap_count(t, from, to) > 0) {
      return false;
    }
    return cons.edge.count({t, from, to}) == 0;
  }

  int vertex_cost(int c, int t) const {
    return fixed_hard_ ? 0 : fixed_.occupancy(t, c);
  }

  int edge_cost(int from, int to, int t) const {
    if (!penalize_swaps_ || from == to) return 0;
    return fixed_.swap_count(t, from, to);
  }

  const GridMap& grid_;
  const FixedTables& fixed_;
  int horizon_;
  bool fixed_hard_;
  bool hard_swaps_;
  bool penalize_swaps_;
  std::vector<std::vector<int>> successors_;
};

struct CtNode {
  std::map<AgentId, Constraints> constraints;
  PlanMap paths;
  std::map<AgentId, int> agent_cost;
  int total_cost = 0;
  std::vector<Conflict> conflicts;
};

Path to_path(const GridMap& grid, AgentId id, const AgentPlan& plan) {
  Path p;
  p.agent = id;
  p.states.reserve(plan.cells.size());
  for (int c : plan.cells) p.states.push_back(grid.position(c));
  return p;
}

void validate_request(const SolveRequest& req) {
  if (req.makespan < 0) {
    throw std::invalid_argument("makespan must be non-negative");
  }
  std::set<AgentId> ids;
  for (const AgentTask& task : req.tasks) {
    if (!ids.insert(task.id).second) {
      throw std::invalid_argument("duplicate task id " +
                                  std::to_string(task.id));
    }
    if (req.fixed.count(task.id)) {
      throw std::invalid_argument("task id " + std::to_string(task.id) +
                                  " also appears in the fixed set");
    }
    if (!req.grid.passable(task.start)) {
      throw std::invalid_argument("agent " + std::to_string(task.id) +
                                  ": start " + to_string(task.start) +
                                  " is blocked or out of bounds");
    }
    if (!req.grid.passable(task.goal)) {
      throw std::invalid_argument("agent " + std::to_string(task.id) +
                                  ": goal " + to_string(task.goal) +
                                  " is blocked or out of bounds");
    }
  }
  for (const auto& [id, path] : req.fixed) {
    if (path.length() != req.makespan + 1) {
      throw std::invalid_argument("fixed path for agent " +
                                  std::to_string(id) +
                                  " does not span the makespan");
    }
  }
}

std::vector<Conflict> intra_conflicts(const GridMap& grid, const PlanMap& paths,
                                      int makespan,
                                      const ConflictConfig& cfg) {
  Solution sol{makespan, paths};
  return find_conflicts(grid, sol, cfg);
}

// Best-first conflict-tree search shared by both modes.
std::optional<std::pair<PlanMap, int>> search(const SolveRequest& req,
                                              bool fixed_hard,
                                              const Deadline& deadline) {
  validate_request(req);
  if (req.tasks.empty()) return std::make_pair(PlanMap{}, 0);

  FixedTables fixed(req.grid, req.fixed, req.makespan);
  LowLevel low(req.grid, fixed, req.makespan, req.cfg, fixed_hard);

  auto root = std::make_unique<CtNode>();
  for (const AgentTask& task : req.tasks) {
    auto plan = low.plan(req.grid.index(task.start), req.grid.index(task.goal),
                         root->constraints[task.id]);
    if (!plan) return std::nullopt;
    root->paths[task.id] = to_path(req.grid, task.id, *plan);
    root->agent_cost[task.id] = plan->cost;
    root->total_cost += plan->cost;
  }
  root->conflicts = intra_conflicts(req.grid, root->paths, req.makespan,
                                    req.cfg);

  struct HeapEntry {
    int cost;
    std::size_t conflicts;
    std::uint64_t seq;
    CtNode* node;
    bool operator>(const HeapEntry& o) const {
      return std::tie(cost, conflicts, seq) >
             std::tie(o.cost, o.conflicts, o.seq);
    }
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>,
                      std::greater<HeapEntry>>
      open;
  std::vector<std::unique_ptr<CtNode>> arena;
  std::uint64_t seq = 0;
  open.push({root->total_cost, root->conflicts.size(), seq++, root.get()});
  arena.push_back(std::move(root));

  while (!open.empty()) {
    deadline.check();
    CtNode* node = open.top().node;
    open.pop();
    if (node->conflicts.empty()) {
      return std::make_pair(node->paths, node->total_cost);
    }
    const Conflict& c = node->conflicts.front();
    for (int side = 0; side < 2; ++side) {
      AgentId agent = side == 0 ? c.a : c.b;
      auto child = std::make_unique<CtNode>(*node);
      Constraints& cons = child->constraints[agent];
      if (c.kind == Conflict::Kind::Vertex) {
        cons.vertex.insert({c.time, req.grid.index(c.p)});
      } else if (side == 0) {
        cons.edge.insert({c.time, req.grid.index(c.p), req.grid.index(c.q)});
      } else {
        cons.edge.insert({c.time, req.grid.index(c.q), req.grid.index(c.p)});
      }
      const AgentTask& task = *std::find_if(
          req.tasks.begin(), req.tasks.end(),
          [&](const AgentTask& t) { return t.id == agent; });
      auto plan = low.plan(req.grid.index(task.start),
                           req.grid.index(task.goal), cons);
      if (!plan) continue;
      child->total_cost -= child->agent_cost[agent];
      child->agent_cost[agent] = plan->cost;
      child->total_cost += plan->cost;
      child->paths[agent] = to_path(req.grid, agent, *plan);
      child->conflicts = intra_conflicts(req.grid, child->paths, req.makespan,
                                         req.cfg);
      open.push({child->total_cost, child->conflicts.size(), seq++,
                 child.get()});
      arena.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PlanMap> solve_decision(const SolveRequest& req,
                                      const Deadline& deadline) {
  auto result = search(req, /*fixed_hard=*/true, deadline);
  if (!result) return std::nullopt;
  return result->first;
}

MinConflictResult solve_min_conflict(const SolveRequest& req,
                                     const Deadline& deadline) {
  auto result = search(req, /*fixed_hard=*/false, deadline);
  if (!result) {
    throw IntrinsicallyInfeasibleError(
        "no joint plan exists for the tasks even ignoring fixed agents");
  }
  return {result->first, result->second};
}

bool lower_bound_feasible(const SolveRequest& req) {
  for (const AgentTask& task : req.tasks) {
    if (!req.grid.passable(task.start) || !req.grid.passable(task.goal)) {
      return false;
    }
    auto d = shortest_distance(req.grid, task.start, task.goal);
    if (!d || *d > req.makespan) return false;
  }
  return true;
}

}  // namespace dmapf
