#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace symop::detail {

// Insert-only memo table safe for concurrent readers and writers. Entries are
// never erased, so returned references stay valid.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
 public:
  const Value* find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    if (const Value* v = find(key)) return *v;
    return insert(key, compute());
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value, Compare> map_;
};

}  // namespace symop::detail
