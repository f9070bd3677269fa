// Small shared utilities: worker pool sizing and content hashing.
#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace cubeknot {

// Worker count for internal parallelism; CUBEKNOT_THREADS caps it.
int worker_count();

// Runs fn(i) for i in [0, count) across workers; results must be written to
// disjoint slots so the merged output is deterministic.
void parallel_for(long long count, const std::function<void(long long)>& fn);

// FNV-1a over bytes, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace cubeknot
