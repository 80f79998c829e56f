#pragma once

// Corpus streaming and a small deterministic worker pool.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <istream>
#include <string>
#include <thread>
#include <vector>

namespace bootperc {

struct CorpusLine {
  std::size_t line_no = 0;  // 1-based
  std::string text;
};

/// Reads graph lines, dropping blank lines and "#" comments.
inline std::vector<CorpusLine> read_corpus(std::istream& in) {
  std::vector<CorpusLine> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back({no, line});
  }
  return out;
}

/// Runs work(i) for i in [0, count) on `workers` threads and returns the results in index
/// order, so merged output does not depend on scheduling.
template <typename Result, typename Work>
std::vector<Result> parallel_map(std::size_t count, int workers, Work&& work) {
  std::vector<Result> results(count);
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = work(i);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace bootperc
