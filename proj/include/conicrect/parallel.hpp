#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace conicrect {

/// out[i] = f(in[i]) with the points spread over OpenMP threads.  Results keep
/// input order; if any evaluation throws, the exception from the lowest index
/// is rethrown after the loop.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F&& f) {
  using R = std::decay_t<decltype(f(in.front()))>;
  const long n = static_cast<long>(in.size());
  std::vector<R> out(in.size());
  std::vector<std::exception_ptr> errors(in.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(in[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Serial reference for parallel_map; same contract, one thread.
template <class T, class F>
auto serial_map(const std::vector<T>& in, F&& f) {
  using R = std::decay_t<decltype(f(in.front()))>;
  std::vector<R> out;
  out.reserve(in.size());
  for (const T& v : in) out.push_back(f(v));
  return out;
}

}  // namespace conicrect
