/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWISTGAB_PARALLEL_HPP
#define TWISTGAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace twistgab {

/**
 * Splits [0, total) into `workers` contiguous ranges, runs fn(begin, end) on
 * each (in its own thread when workers > 1) and returns the results in range
 * order. The caller merges them left to right, so the outcome never depends on
 * thread scheduling. The first exception, by range order, is rethrown.
 */
template <class Fn>
auto parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
    using R = decltype(fn(std::uint64_t{0}, std::uint64_t{0}));
    workers = std::max(1u, workers);
    if (total < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    std::vector<R> results(workers);
    if (workers == 1) {
        results[0] = fn(std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            try {
                results[w] = fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace twistgab

#endif  // TWISTGAB_PARALLEL_HPP
