// Compares the OpenMP kernels against their serial reference twins on
// moderately sized random instances and prints a timing table. Outputs are
// required to match exactly before any timing is reported.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "nls/polytope.hpp"
#include "nls/span.hpp"
#include "nls/vector_field.hpp"

using namespace nls;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<ExponentVector> random_points(std::mt19937& rng, int d, int n,
                                          int radius) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::vector<ExponentVector> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    ExponentVector c;
    for (int k = 0; k < d; ++k) c.push_back(coord(rng));
    pts.push_back(std::move(c));
  }
  return pts;
}

std::vector<VectorField> random_fields(std::mt19937& rng, int d, int count) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<VectorField> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<LaurentPolynomial> comps;
    for (int i = 0; i < d; ++i) {
      LaurentPolynomial p = LaurentPolynomial::zero(d);
      int nt = terms(rng);
      for (int t = 0; t < nt; ++t) {
        ExponentVector m;
        for (int k = 0; k < d; ++k) m.push_back(expo(rng));
        p.add_term(m, Rational(coeff(rng)));
      }
      comps.push_back(std::move(p));
    }
    VectorField f(std::move(comps));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

template <typename F>
double best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    body();
    double ms = ms_since(t0);
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937 rng(777);

  auto points = random_points(rng, 3, 160, 6);
  auto serial_vertices = vertex_set_serial(points);
  auto parallel_vertices = vertex_set(points);
  if (serial_vertices != parallel_vertices) {
    std::fprintf(stderr, "vertex_set outputs disagree\n");
    return 1;
  }
  double vs_serial = best_of(3, [&] { vertex_set_serial(points); });
  double vs_parallel = best_of(3, [&] { vertex_set(points); });

  auto fields = random_fields(rng, 3, 12);
  auto serial_closure = add_pairwise_commutators_serial(fields);
  auto parallel_closure = add_pairwise_commutators(fields);
  if (!(span_of(serial_closure) == span_of(parallel_closure)) ||
      serial_closure.size() != parallel_closure.size()) {
    std::fprintf(stderr, "commutator outputs disagree\n");
    return 1;
  }
  double cm_serial = best_of(3, [&] { add_pairwise_commutators_serial(fields); });
  double cm_parallel = best_of(3, [&] { add_pairwise_commutators(fields); });

  std::printf("kernel                     serial-ms  parallel-ms  speedup\n");
  std::printf("vertex_set (160 pts, d=3)  %9.2f  %11.2f  %6.2fx\n", vs_serial,
              vs_parallel, vs_serial / vs_parallel);
  std::printf("commutator round (12 ops)  %9.2f  %11.2f  %6.2fx\n", cm_serial,
              cm_parallel, cm_serial / cm_parallel);
  return 0;
}
