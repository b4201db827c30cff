// Copyright 2026 The fairspread Authors.
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

#ifndef FAIRSPREAD_UTILITY_HPP_
#define FAIRSPREAD_UTILITY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "fairspread/errors.hpp"

namespace fairspread {

// Per-community expected influenced fraction u_c together with n_c.
struct UtilityVector {
  std::vector<double> values;
  std::vector<std::size_t> sizes;

  std::size_t num_communities() const { return values.size(); }

  void validate() const {
    if (values.size() != sizes.size()) {
      throw InvalidArgument("utility vector has " +
                            std::to_string(values.size()) + " values but " +
                            std::to_string(sizes.size()) + " sizes");
    }
    for (double u : values) {
      if (!(u >= 0.0 && u <= 1.0)) {
        throw InvalidArgument("utility outside [0, 1]: " + std::to_string(u));
      }
    }
    for (std::size_t s : sizes) {
      if (s == 0) throw InvalidArgument("community size must be >= 1");
    }
  }

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
};

inline UtilityVector equal_sized(std::vector<double> values, std::size_t size) {
  UtilityVector u{std::move(values), {}};
  u.sizes.assign(u.values.size(), size);
  return u;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_UTILITY_HPP_
