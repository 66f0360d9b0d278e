#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dmapf/plan.hpp"

namespace dmapf {

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// Cumulative 1-based index of a subset in the enumeration ordered by
// cardinality starting at 2, then lexicographically:
// sum of C(set_size, j) for j in [2, cardinality) plus index_within.
std::uint64_t subset_number(int set_size, int cardinality,
                            std::uint64_t index_within);

// Yields all subsets of the given ids with cardinality 2, 3, ... up to the
// full set, lexicographic within each cardinality, numbered cumulatively
// from 1. Fewer than two ids yields nothing. Ids must be sorted ascending.
class SubsetEnumerator {
 public:
  struct Item {
    std::vector<AgentId> members;
    std::uint64_t number = 0;
  };

  explicit SubsetEnumerator(std::vector<AgentId> ids);

  std::optional<Item> next();

 private:
  std::vector<AgentId> ids_;
  std::vector<int> indices_;  // current combination, as indices into ids_
  std::size_t cardinality_ = 2;
  std::uint64_t counter_ = 0;
  bool fresh_ = true;
  bool done_ = false;
};

}  // namespace dmapf
