/*
 * Copyright 2026 The insproc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace insproc::detail {

/**
 * Runs check(state, i) for i in [0, count) and returns the failure with the
 * smallest index, independent of how indices are split across workers.
 * make_state() is called once per worker. Exceptions propagate to the caller.
 */
template <class Failure, class MakeState, class Check>
std::optional<Failure> first_failure(std::size_t count, std::size_t threads, MakeState make_state, Check check) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::optional<Failure> result;
    std::mutex mutex;
    std::exception_ptr error;

    auto worker = [&](std::size_t begin, std::size_t end) {
        try {
            auto state = make_state();
            for (std::size_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i) {
                if (std::optional<Failure> f = check(state, i)) {
                    std::lock_guard lock(mutex);
                    if (i < best.load()) {
                        best = i;
                        result = std::move(f);
                    }
                    return;
                }
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!error)
                error = std::current_exception();
            best = 0;
        }
    };

    if (threads == 1) {
        worker(0, count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin < end)
                pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);
    return result;
}

} // namespace insproc::detail
