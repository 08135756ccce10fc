// Copyright 2026 The bqa-route Authors
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

#include "bqa/layout.hpp"

#include <numeric>
#include <utility>

#include "bqa/error.hpp"

namespace bqa {

Layout Layout::identity(std::size_t n) {
  Layout l;
  l.log2phys_.resize(n);
  std::iota(l.log2phys_.begin(), l.log2phys_.end(), Qubit{0});
  l.phys2log_ = l.log2phys_;
  return l;
}

Layout Layout::from_logical_to_physical(std::span<const Qubit> log2phys) {
  Layout l;
  const auto n = log2phys.size();
  l.log2phys_.assign(log2phys.begin(), log2phys.end());
  l.phys2log_.assign(n, static_cast<Qubit>(n));
  for (Qubit logical = 0; logical < n; ++logical) {
    Qubit p = log2phys[logical];
    if (p >= n || l.phys2log_[p] != n) {
      throw Error("initial layout is not a permutation of 0.." + std::to_string(n - 1));
    }
    l.phys2log_[p] = logical;
  }
  return l;
}

void Layout::swap_physical(Qubit x, Qubit y) {
  Qubit lx = phys2log_.at(x);
  Qubit ly = phys2log_.at(y);
  std::swap(phys2log_[x], phys2log_[y]);
  log2phys_[lx] = y;
  log2phys_[ly] = x;
}

bool Layout::is_bijection() const noexcept {
  if (log2phys_.size() != phys2log_.size()) return false;
  for (Qubit q = 0; q < log2phys_.size(); ++q) {
    if (log2phys_[q] >= phys2log_.size() || phys2log_[log2phys_[q]] != q) return false;
  }
  return true;
}

bool Layout::is_identity() const noexcept {
  for (Qubit q = 0; q < log2phys_.size(); ++q) {
    if (log2phys_[q] != q) return false;
  }
  return true;
}

}  // namespace bqa
