#pragma once

#include <cstddef>
#include <functional>

namespace easp {

// Runs fn(0..n-1) on up to `jobs` threads, each owning a contiguous index
// range. jobs <= 1 runs inline. Exceptions are rethrown on the caller (the
// one from the lowest failing range wins).
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace easp
