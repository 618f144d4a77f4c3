#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

/// Runs fn(i) for i in [0, count) across a small thread pool. The first
/// exception wins and is rethrown after all threads join.
template <typename Fn>
void parallel_for(u64 count, Fn&& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers =
        static_cast<unsigned>(std::min<u64>(count, std::max(1u, std::min(hw, 8u))));
    if (workers <= 1) {
        for (u64 i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<u64> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                const u64 i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace vpal
