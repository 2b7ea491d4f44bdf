#pragma once

#include <cstddef>
#include <functional>

namespace superpres {

/// Worker count used by data-parallel loops; 1 runs everything inline.
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Calls body(i) for every i in [0, count). Each index is visited exactly
/// once; callers write results into pre-sized slots so the outcome does not
/// depend on the worker count. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace superpres
