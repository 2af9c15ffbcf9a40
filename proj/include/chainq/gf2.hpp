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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace chainq {

// A GF(2) row vector; bit i refers to logical qubit i.
using Mask = boost::dynamic_bitset<std::uint64_t>;

Mask unit_mask(std::size_t n, std::size_t k);

// Rows of the identity matrix of size n.
std::vector<Mask> identity_rows(std::size_t n);

// Rank of a GF(2) matrix given by its rows.
std::size_t gf2_rank(std::vector<Mask> rows);

// Inverse of a square GF(2) matrix, or nullopt if it is singular.
std::optional<std::vector<Mask>> gf2_inverse(const std::vector<Mask>& rows);

// Matrix-vector product: result bit j is the parity of rows[j] & x.
Mask gf2_apply(const std::vector<Mask>& rows, const Mask& x);

// Hex encoding with the most significant nibble first (bit 0 is the
// least significant bit of the last character).
std::string mask_to_hex(const Mask& m);
Mask mask_from_hex(const std::string& hex, std::size_t n);

}  // namespace chainq
