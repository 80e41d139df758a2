#include "clutterlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace clutterlab {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("CLUTTERLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(std::uint64_t total, const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    std::uint64_t workers = static_cast<std::uint64_t>(worker_count());
    workers = std::min<std::uint64_t>(workers, total);
    if (workers <= 1) {
        fn(0, total);
        return;
    }
    std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(fn, begin, end);
    }
    for (auto& t : threads) t.join();
}

}  // namespace clutterlab
