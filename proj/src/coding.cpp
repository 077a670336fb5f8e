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

#include "gradsim/coding.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace gradsim {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::Frc ? "frc" : "crc";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "frc") return Scheme::Frc;
  if (name == "crc") return Scheme::Crc;
  throw std::invalid_argument("unknown scheme \"" + name + "\" (expected \"frc\" or \"crc\")");
}

namespace {

void check_replication(int n, int s) {
  if (n < 1) throw std::invalid_argument("worker count n must be positive");
  if (s < 1 || s > n) {
    throw std::invalid_argument("replication factor s must satisfy 1 <= s <= n");
  }
}

}  // namespace

EncodingMatrix EncodingMatrix::frc(int n, int s) {
  check_replication(n, s);
  if (n % s != 0) {
    throw std::invalid_argument("FRC requires s to divide n");
  }
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(n, n);
  for (int block = 0; block < n / s; ++block) {
    entries.block(block * s, block * s, s, s).setOnes();
  }
  return EncodingMatrix(Scheme::Frc, n, s, std::move(entries));
}

EncodingMatrix EncodingMatrix::crc(int n, int s) {
  check_replication(n, s);
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < s; ++t) {
      entries((j + t) % n, j) = 1.0;
    }
  }
  return EncodingMatrix(Scheme::Crc, n, s, std::move(entries));
}

std::vector<int> EncodingMatrix::assigned_workers(int partition) const {
  if (partition < 0 || partition >= n_) {
    throw std::invalid_argument("partition index out of range");
  }
  std::vector<int> workers;
  workers.reserve(s_);
  for (int j = 0; j < n_; ++j) {
    if (entries_(partition, j) != 0.0) workers.push_back(j);
  }
  return workers;
}

std::string EncodingMatrix::to_csv() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out << ',';
      out << (entries_(i, j) != 0.0 ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

NonStragglerMatrix nonstraggler_submatrix(const EncodingMatrix& B,
                                          std::span<const int> workers) {
  std::set<int> seen;
  for (int w : workers) {
    if (w < 0 || w >= B.n()) throw std::invalid_argument("worker index out of range");
    if (!seen.insert(w).second) throw std::invalid_argument("duplicate worker index");
  }
  NonStragglerMatrix A;
  A.workers.assign(workers.begin(), workers.end());
  A.entries = select_columns(B.entries(), workers);
  return A;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& M,
                               std::span<const int> columns) {
  Eigen::MatrixXd out(M.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] < 0 || columns[k] >= M.cols()) {
      throw std::invalid_argument("column index out of range");
    }
    out.col(static_cast<Eigen::Index>(k)) = M.col(columns[k]);
  }
  return out;
}

}  // namespace gradsim
