#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "sdikit/nfa.hpp"

namespace sdikit::detail {

/// Assigns dense ids to composite states discovered during a worklist
/// exploration.
template <typename Key>
class StateIndex {
 public:
  /// Returns (id, inserted).
  std::pair<State, bool> intern(const Key& key) {
    auto [it, inserted] = ids_.try_emplace(key, static_cast<State>(keys_.size()));
    if (inserted) {
      keys_.push_back(key);
      pending_.push_back(it->second);
    }
    return {it->second, inserted};
  }

  bool has_pending() const noexcept { return !pending_.empty(); }
  State next_pending() {
    State q = pending_.front();
    pending_.pop_front();
    return q;
  }

  const Key& key(State q) const { return keys_[q]; }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::map<Key, State> ids_;
  std::vector<Key> keys_;
  std::deque<State> pending_;
};

}  // namespace sdikit::detail
