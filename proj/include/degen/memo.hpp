#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace degen {

/// Keyed cache of immutable values. Lookups take a shared lock; a miss
/// computes outside any lock and the first inserted value wins, so every
/// caller observes the same object for a given key.
template <typename Key, typename Value>
class MemoCache {
 public:
  template <typename Compute>
  std::shared_ptr<const Value> get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

}  // namespace degen
