#include "dmapf/plan.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmapf {

std::string to_string(const Conflict& c) {
  std::string s = "t=" + std::to_string(c.time) + " agents " +
                  std::to_string(c.a) + "/" + std::to_string(c.b);
  if (c.kind == Conflict::Kind::Vertex) {
    return s + " vertex " + to_string(c.p);
  }
  return s + " swap " + to_string(c.p) + "<->" + to_string(c.q);
}

std::vector<std::string> validate_path(const GridMap& grid,
                                       const AgentTask& task, const Path& path,
                                       int makespan) {
  std::vector<std::string> out;
  auto agent = std::to_string(path.agent);
  if (path.agent != task.id) {
    out.push_back("agent " + agent + ": path/task id mismatch");
  }
  if (path.length() != makespan + 1) {
    out.push_back("agent " + agent + ": path has " +
                  std::to_string(path.length()) + " states, expected " +
                  std::to_string(makespan + 1));
    return out;  // timestep checks below assume the full horizon
  }
  for (int t = 0; t <= makespan; ++t) {
    const Position& p = path.at(t);
    if (!grid.in_bounds(p)) {
      out.push_back("agent " + agent + ": out of bounds at t=" +
                    std::to_string(t));
    } else if (grid.blocked(p)) {
      out.push_back("agent " + agent + ": blocked cell " + to_string(p) +
                    " at t=" + std::to_string(t));
    }
  }
  if (!out.empty()) return out;  // adjacency needs in-bounds cells
  for (int t = 0; t < makespan; ++t) {
    const Position& p = path.at(t);
    const Position& q = path.at(t + 1);
    auto moves = neighbors(grid, p);
    if (std::find(moves.begin(), moves.end(), q) == moves.end()) {
      out.push_back("agent " + agent + ": non-adjacent move " + to_string(p) +
                    "->" + to_string(q) + " at t=" + std::to_string(t));
    }
  }
  if (path.at(0) != task.start) {
    out.push_back("agent " + agent + ": starts at " + to_string(path.at(0)) +
                  ", expected " + to_string(task.start));
  }
  if (path.at(makespan) != task.goal) {
    out.push_back("agent " + agent + ": goal not reached at T=" +
                  std::to_string(makespan));
  }
  return out;
}

namespace {

void append_pair_conflicts(const Path& pa, const Path& pb, int horizon,
                           bool include_swaps, std::vector<Conflict>& out) {
  AgentId a = std::min(pa.agent, pb.agent);
  AgentId b = std::max(pa.agent, pb.agent);
  const Path& first = pa.agent == a ? pa : pb;
  const Path& second = pa.agent == a ? pb : pa;
  for (int t = 0; t <= horizon; ++t) {
    if (first.at(t) == second.at(t)) {
      out.push_back({a, b, t, Conflict::Kind::Vertex, first.at(t), {}});
    }
    if (include_swaps && t < horizon && first.at(t) == second.at(t + 1) &&
        first.at(t + 1) == second.at(t) && first.at(t) != first.at(t + 1)) {
      out.push_back(
          {a, b, t, Conflict::Kind::Swap, first.at(t), first.at(t + 1)});
    }
  }
}

void sort_conflicts(std::vector<Conflict>& conflicts) {
  std::sort(conflicts.begin(), conflicts.end(),
            [](const Conflict& x, const Conflict& y) {
              if (x.time != y.time) return x.time < y.time;
              if (x.a != y.a) return x.a < y.a;
              if (x.b != y.b) return x.b < y.b;
              return x.kind < y.kind;
            });
}

}  // namespace

std::vector<Conflict> find_conflicts(const GridMap& grid, const Solution& sol,
                                     const ConflictConfig& cfg) {
  (void)grid;
  for (const auto& [id, path] : sol.paths) {
    if (path.length() != sol.makespan + 1) {
      throw std::invalid_argument("find_conflicts: path for agent " +
                                  std::to_string(id) +
                                  " does not span the makespan");
    }
  }
  std::vector<Conflict> out;
  for (auto ia = sol.paths.begin(); ia != sol.paths.end(); ++ia) {
    for (auto ib = std::next(ia); ib != sol.paths.end(); ++ib) {
      append_pair_conflicts(ia->second, ib->second, sol.makespan,
                            cfg.forbid_swaps, out);
    }
  }
  sort_conflicts(out);
  return out;
}

std::vector<Conflict> cross_conflicts(const PlanMap& group_a,
                                      const PlanMap& group_b,
                                      bool count_swaps) {
  std::vector<Conflict> out;
  for (const auto& [ida, pa] : group_a) {
    for (const auto& [idb, pb] : group_b) {
      if (ida == idb) {
        throw std::invalid_argument("cross_conflicts: groups overlap");
      }
      if (pa.length() != pb.length()) {
        throw std::invalid_argument("cross_conflicts: path length mismatch");
      }
      append_pair_conflicts(pa, pb, pa.length() - 1, count_swaps, out);
    }
  }
  sort_conflicts(out);
  return out;
}

int count_cross_conflicts(const PlanMap& candidate, const PlanMap& fixed,
                          const ConflictConfig& cfg) {
  return static_cast<int>(
      cross_conflicts(candidate, fixed, cfg.count_swaps_in_penalty).size());
}

std::set<AgentId> conflict_participants(
    const std::vector<Conflict>& conflicts) {
  std::set<AgentId> out;
  for (const Conflict& c : conflicts) {
    out.insert(c.a);
    out.insert(c.b);
  }
  return out;
}

}  // namespace dmapf
