#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rmideal {

/// 0 means "all hardware threads".
inline std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, runs `work(begin, end)` on up to
/// `jobs` threads and returns the partial results in chunk order. Callers
/// merge with an associative, commutative operation so the final value does
/// not depend on `jobs`.
template <class Work>
auto parallel_chunks(std::uint64_t total, std::size_t jobs, Work work) {
    using Result = decltype(work(std::uint64_t{0}, std::uint64_t{0}));
    jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(total, 1)));
    std::vector<Result> results(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto run = [&](std::size_t k) {
        const std::uint64_t begin = total * k / jobs;
        const std::uint64_t end = total * (k + 1) / jobs;
        try {
            results[k] = work(begin, end);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (std::size_t k = 0; k < jobs; ++k) threads.emplace_back(run, k);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace rmideal
