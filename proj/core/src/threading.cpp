#include "hlgt/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace hlgt {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    const char* env = std::getenv("HLGT_THREADS");
    if (env == nullptr) return 1;
    int requested = std::atoi(env);
    if (requested <= 1) return 1;
    return std::min(requested, hw);
}

void parallel_for(long n, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    int workers = std::min<long>(worker_count(), n);
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long begin = w * chunk;
        long end = std::min(n, begin + chunk);
        threads.emplace_back([&, w, begin, end] {
            try {
                for (long i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace hlgt
