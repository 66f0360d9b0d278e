#include "dmapf/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmapf {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("binomial coefficient overflows 64 bits");
    }
    result = result * factor / i;  // exact: C(n-k+i, i) is integral
  }
  return result;
}

std::uint64_t subset_number(int set_size, int cardinality,
                            std::uint64_t index_within) {
  if (cardinality < 2 || cardinality > set_size || index_within < 1) {
    throw std::invalid_argument("subset_number: arguments out of range");
  }
  std::uint64_t offset = 0;
  for (int j = 2; j < cardinality; ++j) offset += binomial(set_size, j);
  return offset + index_within;
}

SubsetEnumerator::SubsetEnumerator(std::vector<AgentId> ids)
    : ids_(std::move(ids)) {
  if (!std::is_sorted(ids_.begin(), ids_.end()) ||
      std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("SubsetEnumerator: ids must be sorted and "
                                "distinct");
  }
  if (ids_.size() < 2) done_ = true;
}

std::optional<SubsetEnumerator::Item> SubsetEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    indices_.resize(cardinality_);
    for (std::size_t i = 0; i < cardinality_; ++i) {
      indices_[i] = static_cast<int>(i);
    }
  } else {
    // advance to the next combination of the current cardinality
    int n = static_cast<int>(ids_.size());
    int k = static_cast<int>(cardinality_);
    int i = k - 1;
    while (i >= 0 && indices_[i] == n - k + i) --i;
    if (i < 0) {
      ++cardinality_;
      if (cardinality_ > ids_.size()) {
        done_ = true;
        return std::nullopt;
      }
      indices_.resize(cardinality_);
      for (std::size_t j = 0; j < cardinality_; ++j) {
        indices_[j] = static_cast<int>(j);
      }
    } else {
      ++indices_[i];
      for (int j = i + 1; j < k; ++j) indices_[j] = indices_[j - 1] + 1;
    }
  }
  Item item;
  item.number = ++counter_;
  item.members.reserve(cardinality_);
  for (int idx : indices_) item.members.push_back(ids_[idx]);
  return item;
}

}  // namespace dmapf
