#include "icnsim/content_store.hpp"

#include <algorithm>

namespace icnsim {

const char* to_string(ReplacementPolicy policy) {
  switch (policy) {
    case ReplacementPolicy::Lru: return "lru";
    case ReplacementPolicy::Fifo: return "fifo";
    case ReplacementPolicy::Lfu: return "lfu";
    case ReplacementPolicy::Random: return "random";
  }
  return "?";
}

std::optional<ReplacementPolicy> parse_policy(const std::string& text) {
  if (text == "lru") return ReplacementPolicy::Lru;
  if (text == "fifo") return ReplacementPolicy::Fifo;
  if (text == "lfu") return ReplacementPolicy::Lfu;
  if (text == "random") return ReplacementPolicy::Random;
  return std::nullopt;
}

ContentStore::ContentStore(std::size_t capacity, ReplacementPolicy policy,
                           std::uint64_t seed)
    : capacity_(capacity), policy_(policy), rng_(seed) {}

bool ContentStore::contains(const ContentName& name) const {
  return entries_.find(name) != entries_.end();
}

void ContentStore::touch(const ContentName& name, Entry& entry) {
  switch (policy_) {
    case ReplacementPolicy::Lru:
      order_.splice(order_.begin(), order_, entry.order_it);
      break;
    case ReplacementPolicy::Lfu:
      lfu_order_.erase({{entry.freq, entry.seq}, name});
      ++entry.freq;
      lfu_order_.insert({{entry.freq, entry.seq}, name});
      break;
    case ReplacementPolicy::Fifo:
    case ReplacementPolicy::Random:
      break;
  }
}

bool ContentStore::lookup(const ContentName& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) return false;
  touch(name, it->second);
  return true;
}

ContentName ContentStore::pick_victim() {
  switch (policy_) {
    case ReplacementPolicy::Lru:
    case ReplacementPolicy::Fifo:
      return order_.back();
    case ReplacementPolicy::Lfu:
      return lfu_order_.begin()->second;
    case ReplacementPolicy::Random:
      return slots_[rng_.next_below(slots_.size())];
  }
  return {};
}

void ContentStore::erase_entry(const ContentName& name, const Entry& entry) {
  switch (policy_) {
    case ReplacementPolicy::Lru:
    case ReplacementPolicy::Fifo:
      order_.erase(entry.order_it);
      break;
    case ReplacementPolicy::Lfu:
      lfu_order_.erase({{entry.freq, entry.seq}, name});
      break;
    case ReplacementPolicy::Random: {
      const std::size_t slot = entry.slot;
      slots_[slot] = slots_.back();
      entries_[slots_[slot]].slot = slot;
      slots_.pop_back();
      break;
    }
  }
  entries_.erase(name);
}

InsertResult ContentStore::insert(const ContentName& name) {
  if (capacity_ == 0) return {};
  if (auto it = entries_.find(name); it != entries_.end()) {
    touch(name, it->second);
    return {};
  }

  InsertResult result;
  result.inserted = true;
  if (entries_.size() >= capacity_) {
    ContentName victim = pick_victim();
    erase_entry(victim, entries_.at(victim));
    result.evicted = victim;
  }

  Entry entry;
  entry.seq = next_seq_++;
  switch (policy_) {
    case ReplacementPolicy::Lru:
    case ReplacementPolicy::Fifo:
      order_.push_front(name);
      entry.order_it = order_.begin();
      break;
    case ReplacementPolicy::Lfu:
      entry.freq = 1;
      lfu_order_.insert({{entry.freq, entry.seq}, name});
      break;
    case ReplacementPolicy::Random:
      entry.slot = slots_.size();
      slots_.push_back(name);
      break;
  }
  entries_.emplace(name, entry);
  return result;
}

std::optional<ContentName> ContentStore::eviction_candidate() const {
  if (entries_.empty()) return std::nullopt;
  switch (policy_) {
    case ReplacementPolicy::Lru:
    case ReplacementPolicy::Fifo:
      return order_.back();
    case ReplacementPolicy::Lfu:
      return lfu_order_.begin()->second;
    case ReplacementPolicy::Random:
      return slots_.front();
  }
  return std::nullopt;
}

std::vector<ContentName> ContentStore::contents() const {
  std::vector<ContentName> out;
  out.reserve(entries_.size());
  for (const auto& [name, entry] : entries_) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace icnsim
