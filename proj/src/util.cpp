#include "cubeknot/util.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace cubeknot {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = hw ? (int)hw : 1;
    if (const char* env = std::getenv("CUBEKNOT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < workers) workers = cap;
        if (cap >= 1 && workers < 1) workers = cap;
    }
    return workers < 1 ? 1 : workers;
}

void parallel_for(long long count, const std::function<void(long long)>& fn) {
    int workers = worker_count();
    if (workers <= 1 || count < 64) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (long long i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace cubeknot
