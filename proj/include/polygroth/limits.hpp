#pragma once

#include <cstddef>

namespace polygroth {

/// Size caps for the exponential enumerations. Exceeding one raises
/// ResourceError instead of running for an unbounded amount of time.
struct Limits {
  std::size_t max_dim = 6;
  std::size_t max_rows = 40;
  std::size_t max_hyperplanes = 14;
};

void check_dim(std::size_t dim, const Limits& limits);
void check_rows(std::size_t rows, const Limits& limits);
void check_hyperplanes(std::size_t count, const Limits& limits);

}  // namespace polygroth
