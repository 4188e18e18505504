#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace socle::exec {

/// Serial runs every loop in index order on the calling thread and is the
/// reference against which the OpenMP path is tested and benchmarked.
enum class Policy { Serial, Parallel };

Policy default_policy();
void set_default_policy(Policy policy);

/// Number of OpenMP worker threads (1 when built without OpenMP).
int max_threads();

/// Calls fn(i) for i in [0, n). Exceptions thrown by fn are collected and the
/// one from the smallest index is rethrown after the loop.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Policy policy = default_policy());

template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& fn, Policy policy = default_policy()) {
  std::vector<std::optional<T>> slots(n);
  for_each_index(n, [&](std::size_t i) { slots[i].emplace(fn(i)); }, policy);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace socle::exec
