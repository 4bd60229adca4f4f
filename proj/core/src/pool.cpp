// Copyright 2026 The mobo Authors
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


#include "mobo/pool.hpp"

#include <stdexcept>

namespace mobo {

CandidatePool::CandidatePool(std::vector<Molecule> molecules)
    : molecules_(std::move(molecules)) {
  index_.reserve(molecules_.size());
  for (std::size_t i = 0; i < molecules_.size(); ++i) {
    const auto& m = molecules_[i];
    if (m.objectives.size() != dims()) {
      throw std::invalid_argument("molecule '" + m.id + "' has " +
                                  std::to_string(m.objectives.size()) +
                                  " objectives, expected " +
                                  std::to_string(dims()));
    }
    if (!index_.emplace(m.id, i).second) {
      throw std::invalid_argument("duplicate molecule id '" + m.id + "'");
    }
  }
}

std::optional<std::size_t> CandidatePool::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace mobo
