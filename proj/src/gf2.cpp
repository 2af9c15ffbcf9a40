// Copyright 2026 The chainq Authors
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

#include "chainq/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace chainq {

Mask unit_mask(std::size_t n, std::size_t k) {
  Mask m(n);
  m.set(k);
  return m;
}

std::vector<Mask> identity_rows(std::size_t n) {
  std::vector<Mask> rows;
  rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rows.push_back(unit_mask(n, k));
  return rows;
}

std::size_t gf2_rank(std::vector<Mask> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(c)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Mask>> gf2_inverse(const std::vector<Mask>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("gf2_inverse: matrix is not square");
  }
  std::vector<Mask> a = rows;
  std::vector<Mask> inv = identity_rows(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !a[pivot].test(c)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a[r].test(c)) {
        a[r] ^= a[c];
        inv[r] ^= inv[c];
      }
    }
  }
  return inv;
}

Mask gf2_apply(const std::vector<Mask>& rows, const Mask& x) {
  Mask y(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (((rows[j] & x).count() & 1U) != 0) y.set(j);
  }
  return y;
}

std::string mask_to_hex(const Mask& m) {
  static const char* kDigits = "0123456789abcdef";
  const std::size_t nibbles = m.size() == 0 ? 1 : (m.size() + 3) / 4;
  std::string out(nibbles, '0');
  for (std::size_t k = 0; k < nibbles; ++k) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * k + b;
      if (bit < m.size() && m.test(bit)) v |= 1U << b;
    }
    out[nibbles - 1 - k] = kDigits[v];
  }
  return out;
}

Mask mask_from_hex(const std::string& hex, std::size_t n) {
  Mask m(n);
  const std::size_t len = hex.size();
  for (std::size_t k = 0; k < len; ++k) {
    const char ch = hex[len - 1 - k];
    unsigned v = 0;
    if (ch >= '0' && ch <= '9') {
      v = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      v = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      v = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw std::invalid_argument("mask_from_hex: invalid digit '" + std::string(1, ch) + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if ((v >> b) & 1U) {
        const std::size_t bit = 4 * k + b;
        if (bit >= n) throw std::invalid_argument("mask_from_hex: bit beyond width");
        m.set(bit);
      }
    }
  }
  return m;
}

}  // namespace chainq
