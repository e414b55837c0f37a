#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "icnsim/content_name.hpp"
#include "icnsim/rng.hpp"

namespace icnsim {

enum class ReplacementPolicy : std::uint8_t { Lru, Fifo, Lfu, Random };

const char* to_string(ReplacementPolicy policy);
std::optional<ReplacementPolicy> parse_policy(const std::string& text);

struct InsertResult {
  bool inserted = false;  // false: already resident or zero capacity
  std::optional<ContentName> evicted;
};

/// Capacity-bounded chunk cache. One class covers the four replacement
/// policies; only the structures the active policy needs are maintained.
///
/// lookup() touches policy metadata (LRU recency, LFU frequency);
/// contains() never does. Re-inserting a resident name is a lookup-touch.
class ContentStore {
 public:
  ContentStore(std::size_t capacity, ReplacementPolicy policy,
               std::uint64_t seed = 0);

  bool lookup(const ContentName& name);
  bool contains(const ContentName& name) const;
  InsertResult insert(const ContentName& name);

  /// The entry the active policy would evict next, if an insertion had to
  /// make room now. Random policy reports its first slot.
  std::optional<ContentName> eviction_candidate() const;

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  ReplacementPolicy policy() const { return policy_; }

  /// Sorted snapshot, for tests and oracles.
  std::vector<ContentName> contents() const;

 private:
  struct Entry {
    std::list<ContentName>::iterator order_it;  // LRU/FIFO
    std::uint64_t freq = 0;                     // LFU
    std::uint64_t seq = 0;                      // LFU insertion order
    std::size_t slot = 0;                       // Random
  };
  using LfuKey = std::pair<std::pair<std::uint64_t, std::uint64_t>,
                           ContentName>;  // ((freq, seq), name)

  void touch(const ContentName& name, Entry& entry);
  ContentName pick_victim();
  void erase_entry(const ContentName& name, const Entry& entry);

  std::size_t capacity_;
  ReplacementPolicy policy_;
  Rng rng_;
  std::uint64_t next_seq_ = 0;
  std::unordered_map<ContentName, Entry, ContentNameHash> entries_;
  std::list<ContentName> order_;  // front = most recent / newest insertion
  std::set<LfuKey> lfu_order_;
  std::vector<ContentName> slots_;
};

}  // namespace icnsim
