#include "qns/exec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qns {
namespace {

std::atomic<Summation> g_mode{Summation::Parallel};
std::atomic<unsigned> g_workers{std::max(1u, std::thread::hardware_concurrency())};

}  // namespace

void set_summation(Summation mode) { g_mode.store(mode); }
Summation summation() { return g_mode.load(); }

void set_worker_count(unsigned count) { g_workers.store(std::max(1u, count)); }
unsigned worker_count() { return g_workers.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const unsigned workers = summation() == Summation::Deterministic ? 1u : worker_count();
  if (workers <= 1 || n < 2 * static_cast<std::size_t>(workers)) {
    body(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    if (begin < end) pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(0, std::min(n, chunk));
}

}  // namespace qns
