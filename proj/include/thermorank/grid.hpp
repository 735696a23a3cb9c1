// Copyright 2026 The thermorank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace thermorank {

/// Dense row-major 2-D array.
template <class T>
class Grid2 {
 public:
  Grid2() = default;
  Grid2(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<T>& values() const noexcept { return data_; }

  friend bool operator==(const Grid2&, const Grid2&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Dense 3-D array indexed (decision maker, alternative, criterion).
template <class T>
class Grid3 {
 public:
  Grid3() = default;
  Grid3(std::size_t dms, std::size_t alternatives, std::size_t criteria,
        const T& fill = T{})
      : k_(dms),
        m_(alternatives),
        n_(criteria),
        data_(dms * alternatives * criteria, fill) {}

  std::size_t dms() const noexcept { return k_; }
  std::size_t alternatives() const noexcept { return m_; }
  std::size_t criteria() const noexcept { return n_; }

  T& operator()(std::size_t k, std::size_t i, std::size_t j) {
    assert(k < k_ && i < m_ && j < n_);
    return data_[(k * m_ + i) * n_ + j];
  }
  const T& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    assert(k < k_ && i < m_ && j < n_);
    return data_[(k * m_ + i) * n_ + j];
  }

  const std::vector<T>& values() const noexcept { return data_; }

  friend bool operator==(const Grid3&, const Grid3&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace thermorank
