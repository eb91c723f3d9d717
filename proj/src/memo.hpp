#pragma once

// Thread-safe memo table. Values are computed outside the lock, so recursive
// computations may re-enter the same table; a racing duplicate computation
// produces an identical value and the first insert wins.

#include "forest_hopf/forest.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace fhopf::detail {

struct PairHash {
    std::size_t operator()(const std::pair<Forest, Forest>& p) const noexcept {
        std::size_t h = hash_value(p.first);
        return h ^ (hash_value(p.second) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};

template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
public:
    template <class Compute>
    Value get(const Key& key, Compute&& compute) {
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
    std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace fhopf::detail
