#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace subnil {

// Keyed compute-once cache. Builders run outside the lock, so two threads
// may build the same value concurrently; the first insert wins and both
// results are required to be identical, which holds for every user here
// (all cached values are deterministic functions of an immutable group).
class SlotCache {
public:
  template <class T, class Fn>
  const T &get_or_build(const std::string &key, Fn &&build) const {
    {
      std::lock_guard<std::mutex> lock(_mutex);
      auto it = _slots.find(key);
      if (it != _slots.end())
        return *static_cast<const T *>(it->second.get());
    }
    auto value = std::make_shared<T>(build());
    std::lock_guard<std::mutex> lock(_mutex);
    auto [it, inserted] = _slots.try_emplace(
        key, std::shared_ptr<const void>(std::move(value)));
    (void)inserted;
    return *static_cast<const T *>(it->second.get());
  }

private:
  mutable std::mutex _mutex;
  mutable std::map<std::string, std::shared_ptr<const void>> _slots;
};

} // namespace subnil
