// Serial versus OpenMP batch evaluation of group elements and exponentials.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieclosed/batch.hpp"

using namespace lieclosed;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class T>
double max_gap(const std::vector<T>& a, const std::vector<T>& b) {
  double g = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) g = std::max(g, double((a[i] - b[i]).cwiseAbs().maxCoeff()));
  return g;
}

template <class In, class Out>
void row(const char* name, const std::vector<In>& in, int reps,
         const std::function<std::vector<Out>(const std::vector<In>&, Execution)>& run) {
  std::vector<Out> s, p;
  const double ts = best_of(reps, [&] { s = run(in, Execution::serial); });
  const double tp = best_of(reps, [&] { p = run(in, Execution::parallel); });
  std::printf("%-10s %8zu %12.3f %12.3f %8.2f %10.1e\n", name, in.size(), 1e3 * ts, 1e3 * tp, ts / tp,
              max_gap(s, p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch kernel benchmark: serial reference against the OpenMP path"};
  std::size_t count = 20000;
  int reps = 3;
  unsigned seed = 7;
  app.add_option("-n,--count", count, "Items per batch")->capture_default_str();
  app.add_option("-r,--reps", reps, "Repetitions, best time is reported")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto v3 = [&] { return Vec3(u(gen), u(gen), u(gen)); };

  std::vector<LorentzParams> lp(count);
  std::vector<PoincareParams> pp(count);
  std::vector<GalileiParams> gp(count);
  for (std::size_t i = 0; i < count; ++i) {
    lp[i] = {v3(), v3()};
    pp[i] = {v3(), v3(), v3(), u(gen)};
    gp[i] = {v3(), v3(), v3(), u(gen)};
  }
  // the generic paths are much slower, so they get a tenth of the items
  std::vector<Matrix> mats(std::max<std::size_t>(1, count / 10));
  for (auto& m : mats) {
    m = Matrix(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = Complex(u(gen), u(gen));
  }

  std::printf("threads: %d\n", batch_threads());
  std::printf("%-10s %8s %12s %12s %8s %10s\n", "kernel", "items", "serial[ms]", "parallel[ms]", "speedup",
              "max|diff|");
  row<LorentzParams, Mat4>("lorentz", lp, reps, [](const auto& in, Execution e) { return lorentz_exp_batch(in, e); });
  row<PoincareParams, Mat5>("poincare", pp, reps,
                            [](const auto& in, Execution e) { return poincare_exp_batch(in, e); });
  row<GalileiParams, Mat5>("galilei", gp, reps, [](const auto& in, Execution e) { return galilei_exp_batch(in, e); });
  row<Matrix, Matrix>("zmethod", mats, reps, [](const auto& in, Execution e) { return matrix_exp_batch(in, e); });
  row<Matrix, Matrix>("series", mats, reps,
                      [](const auto& in, Execution e) { return series_exp_batch(in, 1e-13, e); });
  return 0;
}
