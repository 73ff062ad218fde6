#ifndef QPOS_PARALLEL_HPP
#define QPOS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qpos
{

// Runs f(0) .. f(count - 1) on up to `threads` workers that pull the next
// index from a shared counter. Results land in index order, so the output
// never depends on the thread count. If tasks throw, the exception of the
// lowest failing index is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t count, unsigned threads, F &&f) -> std::vector<std::invoke_result_t<F &, std::size_t>>
{
    using R = std::invoke_result_t<F &, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t pool = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) {
            workers.emplace_back(worker);
        }
    }

    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace qpos

#endif
