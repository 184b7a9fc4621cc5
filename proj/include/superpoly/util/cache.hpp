#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>

namespace superpoly::util {

/// Append-only memo table.  The first caller for a key computes the value;
/// concurrent callers for the same key wait on the same shared future.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentCache {
 public:
  template <class Fn>
  const Value& get(const Key& key, Fn&& compute) {
    std::shared_future<Value> fut;
    std::promise<Value> prom;
    bool owner = false;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it == table_.end()) {
        fut = prom.get_future().share();
        table_.emplace(key, fut);
        owner = true;
      } else {
        fut = it->second;
      }
    }
    if (owner) {
      try {
        prom.set_value(compute());
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(mu_);
          table_.erase(key);
        }
        prom.set_exception(std::current_exception());
      }
    }
    // The map entry shares the state with fut, so the reference outlives this
    // local copy.  A failed computation was erased and get() rethrows.
    return fut.get();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<Key, std::shared_future<Value>, Compare> table_;
};

}  // namespace superpoly::util
