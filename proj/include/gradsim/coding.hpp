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

#ifndef GRADSIM_CODING_HPP
#define GRADSIM_CODING_HPP

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace gradsim {

enum class Scheme { Frc, Crc };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// Binary n-by-n assignment matrix. Rows are data partitions, columns are
/// workers; entry (i, j) = 1 means worker j computes the partial gradient of
/// partition i. Every row and every column has exactly s ones.
class EncodingMatrix {
 public:
  // Block replication: n/s groups of s workers, each group shares the same
  // s partitions. Requires s | n.
  static EncodingMatrix frc(int n, int s);

  // Circulant: column j covers partitions {j, j+1, ..., j+s-1} mod n, so each
  // column is a one-step cyclic shift of the previous one.
  static EncodingMatrix crc(int n, int s);

  Scheme scheme() const { return scheme_; }
  int n() const { return n_; }
  int s() const { return s_; }
  const Eigen::MatrixXd& entries() const { return entries_; }

  // Support of row `partition` (0-based): the s workers assigned to it.
  std::vector<int> assigned_workers(int partition) const;

  // Dense CSV, one row per partition.
  std::string to_csv() const;

 private:
  EncodingMatrix(Scheme scheme, int n, int s, Eigen::MatrixXd entries)
      : scheme_(scheme), n_(n), s_(s), entries_(std::move(entries)) {}

  Scheme scheme_;
  int n_;
  int s_;
  Eigen::MatrixXd entries_;
};

/// Columns of an encoding matrix restricted to the workers that returned,
/// in the listed order.
struct NonStragglerMatrix {
  Eigen::MatrixXd entries;    // n x r
  std::vector<int> workers;   // source column indices, 0-based
};

// Selects columns `workers` of B. Indices must be distinct and in range.
NonStragglerMatrix nonstraggler_submatrix(const EncodingMatrix& B,
                                          std::span<const int> workers);

// Same column selection on a plain matrix (e.g. a shuffled encoding matrix).
Eigen::MatrixXd select_columns(const Eigen::MatrixXd& M,
                               std::span<const int> columns);

}  // namespace gradsim

#endif  // GRADSIM_CODING_HPP
