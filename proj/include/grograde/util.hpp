#pragma once
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace grograde {

// Deterministic RNG for sampling in tests and search routines. Avoids
// std::uniform_int_distribution, whose output is implementation-defined;
// modulo bias is irrelevant here.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next(uint64_t n) { return n ? eng() % n : 0; }
};

// Worker count resolution: explicit flag wins, then GROGRADE_THREADS, then 1.
int resolve_threads(int flag_value);

// Static partition of [0, n) across `threads` workers. fn(i) must be safe to
// run concurrently for distinct i. threads <= 1 degrades to a plain loop.
void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn);

// FNV-1a 64-bit, rendered as 16 hex digits. Used for input digests in reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace grograde
