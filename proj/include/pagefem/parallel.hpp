#pragma once

#include <cstddef>
#include <functional>

namespace pagefem {

/// Number of worker threads used by page loops. Defaults to 1.
std::size_t num_threads();
void set_num_threads(std::size_t n);

/// Runs body(begin, end) over a static partition of [0, count).
///
/// Each index is visited exactly once and chunk boundaries depend only on
/// count and the thread setting, so any body that writes disjoint outputs per
/// index gives bitwise identical results for every thread count. Small ranges
/// run inline.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

} // namespace pagefem
