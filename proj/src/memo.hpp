#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace spschub::detail {

/// Thread-safe memo table. Values are computed outside the lock, so two
/// threads may race to fill the same key; the first write wins and both see
/// the same value.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  Value get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace spschub::detail
