#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace icnsim {

using NodeId = std::uint32_t;
using ObjectId = std::uint64_t;  // 1-based popularity rank

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// Downstream face of a PIT entry: a neighbor router, or the locally
// attached client.
using FaceId = std::int32_t;
inline constexpr FaceId kLocalFace = -1;

inline NodeId face_node(FaceId face) { return static_cast<NodeId>(face); }
inline FaceId node_face(NodeId node) { return static_cast<FaceId>(node); }

// Name of one cacheable unit: object rank plus chunk index.
struct ContentName {
  ObjectId object = 0;
  std::uint32_t chunk = 0;

  friend auto operator<=>(const ContentName&, const ContentName&) = default;
};

struct ContentNameHash {
  std::size_t operator()(const ContentName& name) const {
    std::uint64_t x = name.object * 0x9e3779b97f4a7c15ULL + name.chunk;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace icnsim
