// Times the serial and OpenMP batch runners on randomized double-append
// queries against the conjunctive specialization.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "pd/batch.hpp"
#include "pd/global.hpp"
#include "pd/syntax.hpp"

namespace {

pd::Program load(const std::string& name) {
  std::ifstream in(std::string(PD_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  auto p = pd::parse_program(ss.str());
  p.reindex();
  return p;
}

std::string random_list(std::mt19937& rng, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(rng() % 10);
  return s + "]";
}

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int rows = argc > 1 ? std::atoi(argv[1]) : 400;
  int len = argc > 2 ? std::atoi(argv[2]) : 20;
  pd::Program p = load("double_append.pl");
  pd::GlobalConfig cfg;
  cfg.conjunctive = true;
  auto result = pd::specialize(p, {pd::parse_goal("app(X,Y,I), app(I,Z,R)")}, cfg);

  std::mt19937 rng(7);
  std::vector<pd::Conjunction> goals;
  for (int i = 0; i < rows; ++i)
    goals.push_back(pd::parse_goal("app(" + random_list(rng, len) + "," + random_list(rng, len) + ",I), app(I," +
                                   random_list(rng, len) + ",R)"));

  pd::CompareJob job{&p, &result.residual.program, &result.residual.map, 1000000};
  std::vector<pd::CompareRow> serial, parallel;
  double ts = seconds([&] { serial = pd::run_batch_serial(job, goals); });
  double tp = seconds([&] { parallel = pd::run_batch_parallel(job, goals); });

  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i)
    same = serial[i].steps_specialized == parallel[i].steps_specialized &&
           serial[i].answers_equal == parallel[i].answers_equal;
  std::printf("rows=%d len=%d threads=%d serial=%.3fs parallel=%.3fs speedup=%.2f identical=%s\n", rows, len,
              omp_get_max_threads(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "no");
  return same ? 0 : 1;
}
