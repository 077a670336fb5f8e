/* Copyright 2026 gradsim developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gradsim/stragglers.hpp"

#include <stdexcept>

#include "gradsim/rng.hpp"

namespace gradsim {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void StragglerParams::validate() const {
  check_probability(p_hat, "p_hat");
  check_probability(p_ss, "p_ss");
  check_probability(p_as, "p_as");
  if (p_ss < p_as) {
    throw std::invalid_argument("p_ss must be at least p_as");
  }
}

std::string to_string(WorkerClass c) {
  return c == WorkerClass::Slow ? "slow" : "active";
}

WorkerClass worker_class_from_string(const std::string& name) {
  if (name == "slow") return WorkerClass::Slow;
  if (name == "active") return WorkerClass::Active;
  throw std::invalid_argument("unknown worker class \"" + name + "\"");
}

int ClassAssignment::slow_count() const {
  int m = 0;
  for (WorkerClass c : labels) {
    if (c == WorkerClass::Slow) ++m;
  }
  return m;
}

ClassAssignment assign_classes(int n, double p_hat, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_probability(p_hat, "p_hat");
  ClassAssignment out;
  out.labels.resize(n);
  for (int j = 0; j < n; ++j) {
    out.labels[j] = bernoulli(rng, p_hat) ? WorkerClass::Slow : WorkerClass::Active;
  }
  return out;
}

ClassAssignment assign_classes_fixed(int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m < 0 || m > n) throw std::invalid_argument("m must lie in [0, n]");
  ClassAssignment out;
  out.labels.assign(n, WorkerClass::Active);
  for (int j = 0; j < m; ++j) out.labels[j] = WorkerClass::Slow;
  return out;
}

Realization draw_realization(const ClassAssignment& assignment,
                             const StragglerParams& params, int iteration,
                             std::mt19937_64& rng) {
  params.validate();
  if (iteration < 1) throw std::invalid_argument("iteration index starts at 1");
  Realization out;
  out.iteration = iteration;
  for (int j = 0; j < assignment.n(); ++j) {
    double p = assignment.labels[j] == WorkerClass::Slow ? params.p_ss : params.p_as;
    if (!bernoulli(rng, p)) out.nonstragglers.push_back(j);
  }
  return out;
}

}  // namespace gradsim
