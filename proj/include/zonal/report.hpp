#pragma once

// Verification report records and a bounded worker pool whose results are merged in
// submission order, so reports are independent of the thread count.

#include "zonal/json_io.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace zonal {

struct Cell {
  Json params = Json::object();
  std::string status = "pass";  // pass | fail | skipped
  std::string lhs_digest;
  std::string rhs_digest;
  Json witness;  // null unless the cell failed
  double elapsed_ms = 0;

  void fail(Json w) {
    status = "fail";
    witness = std::move(w);
  }
};

struct CellOutput {
  Cell cell;
  std::vector<Json> findings;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Cell> cells;
  std::vector<Json> findings;

  bool passed() const {
    for (const auto& c : cells)
      if (c.status == "fail") return false;
    return true;
  }
  std::size_t count(const std::string& status) const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.status == status;
    return n;
  }

  Json to_json(bool timings = false) const {
    Json cells_json = Json::array();
    for (const auto& c : cells) {
      Json j = {{"params", c.params},
                {"status", c.status},
                {"lhs_digest", c.lhs_digest},
                {"rhs_digest", c.rhs_digest},
                {"witness", c.witness}};
      if (timings) j["elapsed_ms"] = c.elapsed_ms;
      cells_json.push_back(std::move(j));
    }
    return {{"suite", suite}, {"seed", seed}, {"cells", cells_json}, {"passed", passed()}, {"findings", findings}};
  }
};

using CellTask = std::function<CellOutput()>;

/// Runs tasks on up to `threads` workers; output i belongs to task i. A task that throws
/// becomes a failing cell carrying the exception text.
inline std::vector<CellOutput> run_tasks(const std::vector<CellTask>& tasks, int threads) {
  std::vector<CellOutput> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i].cell.fail({{"kind", "exception"}, {"what", e.what()}});
      }
      out[i].cell.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (threads <= 0) threads = int(std::max(1u, std::thread::hardware_concurrency()));
  threads = int(std::min<std::size_t>(std::size_t(threads), std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace zonal
