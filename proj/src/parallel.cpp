#include "socle/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace socle::exec {

namespace {

std::atomic<Policy> g_policy{Policy::Parallel};

}  // namespace

Policy default_policy() { return g_policy.load(); }

void set_default_policy(Policy policy) { g_policy.store(policy); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Policy policy) {
  std::vector<std::exception_ptr> errors(n);
  if (policy == Policy::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace socle::exec
