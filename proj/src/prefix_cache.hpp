#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace schreier::detail {

// Grow-only prefix cache. Published prefixes are immutable; extension builds a
// fresh vector and swaps it in under the write lock, so concurrent readers
// only ever hold complete snapshots.
template <typename Key, typename Elem>
class PrefixCache {
public:
    using Prefix = std::vector<Elem>;

    template <typename Extend>
    std::shared_ptr<const Prefix> at_least(const Key& key, std::size_t len, Extend&& extend) {
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end() && it->second->size() >= len) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto& slot = entries_[key];
        if (slot && slot->size() >= len) return slot;
        auto grown = std::make_shared<Prefix>(slot ? *slot : Prefix{});
        extend(*grown, len);
        slot = std::move(grown);
        return slot;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Prefix>> entries_;
};

}  // namespace schreier::detail
