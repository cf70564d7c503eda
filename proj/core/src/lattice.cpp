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

#include "qlattice/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 26;

std::uint64_t checked_space_size(const Field& field, std::size_t n) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= field.order();
    if (size > kMaxEnumeration) {
      throw BudgetExceeded("GF(" + std::to_string(field.order()) + ")^" + std::to_string(n) +
                           " is too large to enumerate");
    }
  }
  return size;
}

// In-place reduction of `rows` to RREF; returns pivot columns and drops zero
// rows.
std::vector<std::size_t> reduce_rref(const Field& f, std::size_t n, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].rep == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldElement scale = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].rep == 0) continue;
      const FieldElement factor = rows[r][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

std::uint64_t vector_code(const Field& field, std::span<const FieldElement> v) {
  std::uint64_t code = 0;
  for (FieldElement x : v) code = code * field.order() + x.rep;
  return code;
}

Vec vector_from_code(const Field& field, std::size_t n, std::uint64_t code) {
  Vec v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = {static_cast<std::uint32_t>(code % field.order())};
    code /= field.order();
  }
  return v;
}

Subspace::Subspace(FieldPtr field, std::size_t n, std::vector<Vec> rows)
    : field_(std::move(field)), n_(n), rows_(std::move(rows)) {
  if (!field_) throw InvalidArgument("subspace needs a field");
  for (const auto& r : rows_) {
    if (r.size() != n_) throw InvalidArgument("row length does not match ambient dimension");
  }
  pivots_ = reduce_rref(*field_, n_, rows_);
}

Subspace Subspace::full(FieldPtr field, std::size_t n) {
  std::vector<Vec> rows(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = field->one();
  return Subspace(std::move(field), n, std::move(rows));
}

bool Subspace::contains(std::span<const FieldElement> v) const {
  if (v.size() != n_) throw InvalidArgument("vector length does not match ambient dimension");
  const Field& f = *field_;
  Vec w(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement c = w[pivots_[r]];
    if (c.rep == 0) continue;
    for (std::size_t col = pivots_[r]; col < n_; ++col) {
      w[col] = f.sub(w[col], f.mul(c, rows_[r][col]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](FieldElement x) { return x.rep == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& r) { return contains(r); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return *a.field_ == *b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.rows_ < b.rows_;
}

std::vector<ProjPoint> enum_points(std::size_t n, const FieldPtr& field) {
  if (n == 0) throw InvalidArgument("ambient dimension must be at least 1");
  const std::uint64_t size = checked_space_size(*field, n);
  std::vector<ProjPoint> points;
  for (std::uint64_t code = 1; code < size; ++code) {
    Vec v = vector_from_code(*field, n, code);
    const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.rep != 0; });
    if (lead->rep != 1) continue;
    points.push_back({field, std::move(v), points.size()});
  }
  return points;
}

std::vector<Subspace> enum_level(std::size_t n, std::size_t j, const FieldPtr& field) {
  if (j > n) {
    throw InvalidArgument("level " + std::to_string(j) + " out of range for dimension " +
                          std::to_string(n));
  }
  checked_space_size(*field, n);
  const std::uint32_t q = field->order();
  std::vector<Subspace> out;

  // Pivot columns as a lexicographically increasing combination.
  std::vector<std::size_t> pivots(j);
  for (std::size_t i = 0; i < j; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < j; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(r, c);
      }
    }
    std::uint64_t fillings = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
      fillings *= q;
      if (fillings > kMaxEnumeration) throw BudgetExceeded("level set too large to enumerate");
    }
    for (std::uint64_t code = 0; code < fillings; ++code) {
      std::vector<Vec> rows(j, Vec(n));
      for (std::size_t r = 0; r < j; ++r) rows[r][pivots[r]] = field->one();
      std::uint64_t rest = code;
      for (std::size_t s = free_slots.size(); s-- > 0;) {
        rows[free_slots[s].first][free_slots[s].second] = {static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      out.emplace_back(field, n, std::move(rows));
    }

    // Next combination.
    std::size_t i = j;
    while (i > 0 && pivots[i - 1] == n - j + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t k = i; k < j; ++k) pivots[k] = pivots[k - 1] + 1;
  }
  return out;
}

Subspace span(std::span<const ProjPoint> points) {
  if (points.empty()) throw InvalidArgument("span of an empty point list needs an explicit ambient space");
  const FieldPtr& field = points.front().field;
  const std::size_t n = points.front().coords.size();
  std::vector<Vec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (!p.field || !(*p.field == *field)) throw InvalidArgument("points from different fields");
    if (p.coords.size() != n) throw InvalidArgument("points of different dimensions");
    rows.push_back(p.coords);
  }
  return Subspace(field, n, std::move(rows));
}

Subspace dual(const Subspace& w) {
  const Field& f = w.field();
  const std::size_t n = w.ambient_dim();
  const auto& pivots = w.pivots();
  std::vector<Vec> rows;
  for (std::size_t col = 0; col < n; ++col) {
    if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
    Vec v(n);
    v[col] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(w.rows()[r][col]);
    rows.push_back(std::move(v));
  }
  return Subspace(w.field_ptr(), n, std::move(rows));
}

bool contains(const Subspace& w, const ProjPoint& v) { return w.contains(v.coords); }

std::size_t point_index(std::span<const ProjPoint> points, std::span<const FieldElement> v) {
  if (points.empty()) throw InvalidArgument("empty point list");
  const Field& f = *points.front().field;
  const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.rep != 0; });
  if (lead == v.end()) throw InvalidArgument("zero vector has no projective point");
  const FieldElement scale = f.inv(*lead);
  Vec normalized(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) normalized[i] = f.mul(v[i], scale);
  const std::uint64_t code = vector_code(f, normalized);
  const auto it = std::lower_bound(points.begin(), points.end(), code, [&f](const ProjPoint& p, std::uint64_t c) {
    return vector_code(f, p.coords) < c;
  });
  if (it == points.end() || it->coords != normalized) throw InvalidArgument("vector is not in the point list");
  return static_cast<std::size_t>(it - points.begin());
}

namespace {

struct ChainSearch {
  const std::vector<ProjPoint>& points;
  std::size_t n;
  std::uint64_t budget;
  std::uint64_t steps = 0;

  BigInt walk(const Subspace& w) {
    if (w.dim() == n) return 1;
    std::vector<Subspace> covers;
    for (const auto& p : points) {
      if (++steps > budget) throw BudgetExceeded("chain enumeration exceeded its step budget");
      if (w.contains(p.coords)) continue;
      std::vector<Vec> rows = w.rows();
      rows.push_back(p.coords);
      covers.emplace_back(w.field_ptr(), n, std::move(rows));
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    BigInt total = 0;
    for (const auto& c : covers) total += walk(c);
    return total;
  }
};

}  // namespace

BigInt count_paths_bruteforce(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  const auto points = enum_points(n, field);
  ChainSearch search{points, n, budget};
  return search.walk(Subspace(field, n));
}

}  // namespace qlattice
