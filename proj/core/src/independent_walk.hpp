// Copyright 2026 The qlattice Authors
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

#include <cstdint>
#include <vector>

#include "qlattice/error.hpp"
#include "qlattice/field.hpp"
#include "qlattice/lattice.hpp"

namespace qlattice::detail {

// Depth-first enumeration of sequences of candidate vectors that stay
// linearly independent. The current span is kept as an explicit membership
// bitmap over all q^n vector codes, so every candidate test is a lookup.
class IndependentWalker {
 public:
  IndependentWalker(const Field& field, std::size_t n, std::vector<Vec> candidates,
                    std::uint64_t budget)
      : field_(field), n_(n), candidates_(std::move(candidates)), budget_(budget) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= field.order();
    in_span_.assign(size, 0);
    codes_.reserve(candidates_.size());
    for (const auto& c : candidates_) codes_.push_back(vector_code(field, c));
    members_.push_back(Vec(n));
    in_span_[0] = 1;
  }

  // Adds v to the span permanently. v must be independent of the current span.
  void fix(const Vec& v) {
    if (in_span_[vector_code(field_, v)]) throw InvalidArgument("fixed vectors are dependent");
    push(v);
  }

  std::size_t span_dim() const { return dim_; }

  // Calls leaf(chosen) for every sequence of `length` candidate indices that
  // extends the current span independently. With `increasing`, indices are
  // strictly increasing (unordered subsets); otherwise all orders are visited.
  template <class Leaf>
  void run(std::size_t length, bool increasing, Leaf&& leaf) {
    std::vector<std::size_t> chosen;
    chosen.reserve(length);
    descend(length, increasing, 0, chosen, leaf);
  }

  std::uint64_t count(std::size_t length, bool increasing) {
    std::uint64_t total = 0;
    run(length, increasing, [&total](const std::vector<std::size_t>&) { ++total; });
    return total;
  }

 private:
  template <class Leaf>
  void descend(std::size_t remaining, bool increasing, std::size_t start,
               std::vector<std::size_t>& chosen, Leaf& leaf) {
    if (remaining == 0) {
      leaf(static_cast<const std::vector<std::size_t>&>(chosen));
      return;
    }
    for (std::size_t i = increasing ? start : 0; i < candidates_.size(); ++i) {
      if (++steps_ > budget_) throw BudgetExceeded("enumeration exceeded its step budget");
      if (in_span_[codes_[i]]) continue;
      chosen.push_back(i);
      if (remaining == 1) {
        leaf(static_cast<const std::vector<std::size_t>&>(chosen));
      } else {
        const std::size_t mark = members_.size();
        push(candidates_[i]);
        descend(remaining - 1, increasing, i + 1, chosen, leaf);
        pop(mark);
      }
      chosen.pop_back();
    }
  }

  void push(const Vec& v) {
    const std::size_t base = members_.size();
    steps_ += base * (field_.order() - 1);
    if (steps_ > budget_) throw BudgetExceeded("enumeration exceeded its step budget");
    for (std::uint32_t c = 1; c < field_.order(); ++c) {
      const FieldElement scale{c};
      for (std::size_t m = 0; m < base; ++m) {
        Vec w(n_);
        for (std::size_t k = 0; k < n_; ++k) w[k] = field_.add(members_[m][k], field_.mul(scale, v[k]));
        in_span_[vector_code(field_, w)] = 1;
        members_.push_back(std::move(w));
      }
    }
    ++dim_;
  }

  void pop(std::size_t mark) {
    for (std::size_t m = mark; m < members_.size(); ++m) in_span_[vector_code(field_, members_[m])] = 0;
    members_.resize(mark);
    --dim_;
  }

  const Field& field_;
  std::size_t n_;
  std::vector<Vec> candidates_;
  std::vector<std::uint64_t> codes_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<std::uint8_t> in_span_;
  std::vector<Vec> members_;
  std::size_t dim_ = 0;
};

}  // namespace qlattice::detail
