// Copyright 2026 The pbtsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pbtsim/numerics.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_roots.h>

namespace pbtsim {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct MinParams {
  const Objective* f;
  std::vector<double> scratch;
};

double call_objective(const gsl_vector* v, void* params) {
  auto* p = static_cast<MinParams*>(params);
  for (std::size_t i = 0; i < p->scratch.size(); ++i) p->scratch[i] = gsl_vector_get(v, i);
  return (*p->f)(p->scratch);
}

double call_scalar(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

// GSL's default handler aborts; errors are reported through return codes.
struct QuietGsl {
  QuietGsl() : prev(gsl_set_error_handler_off()) {}
  ~QuietGsl() { gsl_set_error_handler(prev); }
  gsl_error_handler_t* prev;
};

}  // namespace

SimplexResult nelder_mead_minimize(const Objective& f, std::vector<double> x0,
                                   const SimplexOptions& opts) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead_minimize: empty start point");
  QuietGsl quiet;
  MinParams params{&f, std::vector<double>(dim)};
  gsl_multimin_function fn{&call_objective, dim, &params};

  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(dim),
                                                           &gsl_vector_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(dim),
                                                              &gsl_vector_free);
  for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(step.get(), opts.initial_step);

  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim),
      &gsl_multimin_fminimizer_free);
  gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());

  SimplexResult out;
  int status = GSL_CONTINUE;
  // Below about sqrt(eps) the simplex stops shrinking; give up after a
  // stretch without a new smallest size.
  const int patience = 50 * static_cast<int>(dim);
  double smallest = gsl_multimin_fminimizer_size(s.get());
  int stalled = 0;
  while (status == GSL_CONTINUE && out.iterations < opts.max_iter && stalled < patience) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(s.get());
    if (size < smallest) {
      smallest = size;
      stalled = 0;
    } else {
      ++stalled;
    }
    status = gsl_multimin_test_size(size, opts.size_tol);
  }
  out.converged = status == GSL_SUCCESS;
  out.value = gsl_multimin_fminimizer_minimum(s.get());
  const gsl_vector* best = gsl_multimin_fminimizer_x(s.get());
  out.x.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.x[i] = gsl_vector_get(best, i);
  return out;
}

std::optional<double> bisect_root(const std::function<double(double)>& f, double lo, double hi,
                                  double xtol) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_root: need lo < hi");
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;

  QuietGsl quiet;
  gsl_function fn{&call_scalar, const_cast<std::function<double(double)>*>(&f)};
  std::unique_ptr<gsl_root_fsolver, decltype(&gsl_root_fsolver_free)> s(
      gsl_root_fsolver_alloc(gsl_root_fsolver_bisection), &gsl_root_fsolver_free);
  if (gsl_root_fsolver_set(s.get(), &fn, lo, hi) != GSL_SUCCESS) return std::nullopt;
  for (int iter = 0; iter < 200; ++iter) {
    if (gsl_root_fsolver_iterate(s.get()) != GSL_SUCCESS) return std::nullopt;
    const double a = gsl_root_fsolver_x_lower(s.get());
    const double b = gsl_root_fsolver_x_upper(s.get());
    if (gsl_root_test_interval(a, b, xtol, 0.0) == GSL_SUCCESS) break;
  }
  return gsl_root_fsolver_root(s.get());
}

}  // namespace pbtsim
