#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tfbs {

template <typename Result>
std::vector<Result> parallel_indexed(std::size_t count, std::size_t threads,
                                     const std::function<Result(std::size_t)>& task) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);

    std::vector<std::optional<Result>> slots(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(task(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            workers.reserve(threads);
            for (std::size_t w = 0; w < threads; ++w) {
                workers.emplace_back([&] {
                    for (std::size_t i = next++; i < count; i = next++) {
                        try {
                            slots[i].emplace(task(i));
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                        }
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace tfbs
