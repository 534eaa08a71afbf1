#pragma once

#include <future>
#include <vector>

namespace deltagas {

// Evaluates f on every input concurrently; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& inputs, F f) {
    using R = decltype(f(inputs.front()));
    std::vector<std::future<R>> futures;
    futures.reserve(inputs.size());
    for (const T& x : inputs) futures.push_back(std::async(std::launch::async, f, x));
    std::vector<R> out;
    out.reserve(inputs.size());
    for (auto& fu : futures) out.push_back(fu.get());
    return out;
}

}  // namespace deltagas
