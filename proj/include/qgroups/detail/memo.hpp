#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace qgroups::detail {

/// Build-once memo table, safe for concurrent lookups. The value is computed
/// outside the lock so that recursive computations may re-enter the table.
/// Entries are never erased, so returned references stay valid.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Fn>
  const Value& get(const Key& key, Fn&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace qgroups::detail
