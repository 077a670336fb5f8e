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

#ifndef GRADSIM_STRAGGLERS_HPP
#define GRADSIM_STRAGGLERS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gradsim {

/// Two-class straggler model. A worker is slow-class with probability p_hat,
/// fixed for a whole experiment; per iteration a slow worker straggles with
/// probability p_ss and an active one with p_as (p_ss >= p_as).
struct StragglerParams {
  double p_hat = 0.0;
  double p_ss = 0.0;
  double p_as = 0.0;

  void validate() const;
};

enum class WorkerClass : std::uint8_t { Slow, Active };

std::string to_string(WorkerClass c);
WorkerClass worker_class_from_string(const std::string& name);

struct ClassAssignment {
  std::vector<WorkerClass> labels;

  int n() const { return static_cast<int>(labels.size()); }
  int slow_count() const;
};

// Each worker slow independently with probability p_hat.
ClassAssignment assign_classes(int n, double p_hat, std::mt19937_64& rng);

// Deterministic placement: the first m workers slow. Under column shuffling
// only m matters; explicit placements for no-shuffle baselines go through
// the labels field of ExperimentConfig.
ClassAssignment assign_classes_fixed(int n, int m);

/// Workers that returned in time in one iteration.
struct Realization {
  int iteration = 0;
  std::vector<int> nonstragglers;  // ascending worker indices

  int r() const { return static_cast<int>(nonstragglers.size()); }
};

// Each slow worker excluded independently with probability p_ss, each active
// one with p_as. Draws are independent across iterations.
Realization draw_realization(const ClassAssignment& assignment,
                             const StragglerParams& params, int iteration,
                             std::mt19937_64& rng);

}  // namespace gradsim

#endif  // GRADSIM_STRAGGLERS_HPP
