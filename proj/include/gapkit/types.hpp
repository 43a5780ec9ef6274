// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_TYPES_HPP_
#define GAPKIT_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <vector>

namespace gapkit {

// Vertex identifiers are 32 bits; offset arrays are 64 bits so graphs with
// more than 2^32 edges stay representable.
using NodeId = uint32_t;
using EdgeWeight = int32_t;

// BFS parent entries: a vertex id, or a negative sentinel while unvisited.
using ParentEntry = int32_t;
using ParentArray = std::vector<ParentEntry>;

using Distance = int32_t;
using DistanceArray = std::vector<Distance>;
inline constexpr Distance kDistanceInf = std::numeric_limits<Distance>::max();

using Score = float;
using ScoreArray = std::vector<Score>;

using LabelArray = std::vector<NodeId>;

// Default seed for source selection and synthetic generation. Fixed so
// published runs are comparable; every consumer accepts an override.
inline constexpr uint64_t kDefaultSeed = 24601;

}  // namespace gapkit

#endif  // GAPKIT_TYPES_HPP_
