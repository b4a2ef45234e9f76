// Loss-and-gradient timing: serial tape reference vs batched kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "ptpinn/loss.hpp"
#include "ptpinn/problems.hpp"
#include "ptpinn/sampling.hpp"

using namespace ptpinn;

namespace {

template <class F>
double seconds_per_call(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void run_case(const std::string& label, const ProblemPtr& problem, const NetworkSpec& spec, DataSizes sizes,
              bool with_reference) {
  const TrainingData data = sample_training_data(*problem, problem->horizon(), sizes, 7);
  const NetworkParams params = xavier_init(spec, 3);
  Eigen::VectorXd grad;
  LossWeights w;
  LossEvaluator ev64(*problem, w, Precision::kDouble);
  LossEvaluator ev32(*problem, w, Precision::kFloat);
  ev64.evaluate(params, data, false, &grad);
  const double t64 = seconds_per_call([&] { ev64.evaluate(params, data, false, &grad); }, 20);
  const double t32 = seconds_per_call([&] { ev32.evaluate(params, data, false, &grad); }, 20);
  std::printf("%-24s batched64 %9.3f ms  batched32 %9.3f ms", label.c_str(), 1e3 * t64, 1e3 * t32);
  if (with_reference) {
    // The tape holds every node of the whole loss, so time it on a slice and
    // scale by point count.
    const DataSizes small{sizes.initial / 20, sizes.boundary / 20, sizes.residual / 20, 0};
    const TrainingData sub = sample_training_data(*problem, problem->horizon(), small, 7);
    const double tr = seconds_per_call([&] { reference_loss(params, sub, w, *problem, false, &grad); }, 1) * 20.0;
    std::printf("  tape (scaled) %9.1f ms  speedup %.0fx", 1e3 * tr, tr / t64);
  }
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  const bool reference = argc < 2 || std::string(argv[1]) != "--no-tape";
  std::printf("openmp threads: %d\n", omp_get_max_threads());
  run_case("reaction 5x50", make_reaction(5.0), MlpSpec{2, 5, 50, 1}, {400, 200, 1000, 0}, reference);
  run_case("convection 5x50", make_convection(30.0), MlpSpec{2, 5, 50, 1}, {400, 200, 1000, 0}, reference);
  run_case("heat1d_nl 5x50", make_heat1d_nl(3), MlpSpec{2, 5, 50, 1}, {400, 200, 2000, 0}, reference);
  run_case("heat3d 5x50", make_heat3d(), MlpSpec{4, 5, 50, 1}, {400, 600, 500, 0}, reference);
  run_case("heat2d_hf resnet 5x3x50", make_heat2d_hf(), ResNetSpec{3, 5, 3, 50}, {400, 400, 4000, 0}, reference);
  for (int threads : {1, 2, 4}) {
    if (threads > omp_get_num_procs()) break;
    omp_set_num_threads(threads);
    std::printf("-- %d thread(s)\n", threads);
    run_case("heat1d_nl 5x50", make_heat1d_nl(3), MlpSpec{2, 5, 50, 1}, {400, 200, 4000, 0}, false);
  }
  return 0;
}
