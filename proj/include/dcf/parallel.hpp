#pragma once

#include <functional>

namespace dcf {

// Worker count: DCF_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_budget();

// Runs fn(0..count-1) across the thread budget in fixed contiguous blocks.
// Each index must write only its own output slot, which keeps results
// bit-identical regardless of the budget.  Exceptions propagate to the
// caller (first one wins).
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace dcf
