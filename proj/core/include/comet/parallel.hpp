#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace comet {

// Block-parallel map with an ordered sink: items are processed in blocks
// of `block_size`; within a block workers compute results by index, then
// the sink consumes them sequentially in input order. Output is
// independent of the worker count.
template <typename Result, typename Work, typename Sink>
void parallel_for_ordered(std::size_t n, int jobs, Work&& work, Sink&& sink,
                          std::size_t block_size = 1024) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) sink(i, work(i));
        return;
    }
    std::vector<Result> block(block_size);
    for (std::size_t base = 0; base < n; base += block_size) {
        const std::size_t count = std::min(block_size, n - base);
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t k = static_cast<std::size_t>(w); k < count;
                     k += static_cast<std::size_t>(jobs))
                    block[k] = work(base + k);
            });
        }
        for (auto& t : workers) t.join();
        for (std::size_t k = 0; k < count; ++k) sink(base + k, std::move(block[k]));
    }
}

} // namespace comet
