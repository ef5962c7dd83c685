#pragma once

#include <cstddef>
#include <vector>

#include "ordwalk/ordinal.hpp"

namespace ordwalk {

inline constexpr std::size_t kDefaultProbeLimit = 1'000'000;

/// Finite, deterministic stand-in for "all ordinals below cap".
///
/// Members are exactly the ordinals below `cap` of nesting depth <= tier,
/// with at most tier+1 terms at every level and every coefficient <= tier+1,
/// listed in increasing order.
struct ProbeSet {
  Ordinal cap;
  std::size_t tier = 0;
  std::vector<Ordinal> members;
};

/// Throws DomainError when cap is 0 and ResourceError when more than
/// `limit` members would be produced.
ProbeSet enumerate_probe(const Ordinal& cap, std::size_t tier,
                         std::size_t limit = kDefaultProbeLimit);

}  // namespace ordwalk
