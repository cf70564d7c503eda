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

#include "qlattice/gorenstein.hpp"

#include "independent_walk.hpp"
#include "qlattice/error.hpp"
#include "qlattice/incidence.hpp"

namespace qlattice {

namespace {

void require_n(std::size_t n) {
  if (n < 2) throw InvalidArgument("need n >= 2, got " + std::to_string(n));
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

FieldElement dot(const Field& f, const Vec& a, const Vec& b) {
  FieldElement s = f.zero();
  for (std::size_t k = 0; k < a.size(); ++k) s = f.add(s, f.mul(a[k], b[k]));
  return s;
}

}  // namespace

BasisSet build_basis_set(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  require_n(n);
  const auto points = enum_points(n, field);
  std::vector<Vec> vectors;
  vectors.reserve(points.size());
  for (const auto& p : points) vectors.push_back(p.coords);

  BasisSet out{n, field->order(), points.size(), {}};
  detail::IndependentWalker walker(*field, n, std::move(vectors), budget);
  walker.run(n, true, [&out](const std::vector<std::size_t>& chosen) {
    out.bases.emplace_back(chosen.begin(), chosen.end());
  });
  return out;
}

IntMatrix hessian_at_ones(const BasisSet& bs) {
  IntMatrix h(bs.num_points);
  std::vector<std::uint64_t> counts(bs.num_points * bs.num_points, 0);
  for (const auto& b : bs.bases) {
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        ++counts[b[x] * bs.num_points + b[y]];
        ++counts[b[y] * bs.num_points + b[x]];
      }
    }
  }
  for (std::size_t i = 0; i < bs.num_points; ++i) {
    for (std::size_t j = 0; j < bs.num_points; ++j) h(i, j) = big(counts[i * bs.num_points + j]);
  }
  return h;
}

IntMatrix mu_matrix(std::size_t n, const FieldPtr& field) {
  require_n(n);
  const auto points = enum_points(n, field);
  const std::size_t N = points.size();
  // x_k divides x_j^perp iff v_k . v_j == 0.
  IntMatrix mu(N);
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<bool> factor_of_perp(N);
    for (std::size_t k = 0; k < N; ++k) {
      factor_of_perp[k] = dot(*field, points[k].coords, points[j].coords).rep == 0;
    }
    for (std::size_t i = 0; i < N; ++i) mu(i, j) = factor_of_perp[i] ? 0 : 1;
  }
  return mu;
}

LefschetzMatrix lefschetz_matrix(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  require_n(n);
  const auto points = enum_points(n, field);
  const std::size_t N = points.size();
  const std::size_t tuple_len = n - 2;

  BigInt work = pow(big(N), n - 1);
  if (work > big(budget)) {
    throw BudgetExceeded("Lefschetz tuple count needs " + work.get_str() + " tests, budget is " +
                         std::to_string(budget));
  }

  std::vector<std::uint64_t> counts(N * N, 0);
  std::vector<std::size_t> tuple(tuple_len, 0);
  for (std::size_t i = 0; i < N; ++i) {
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      bool distinct = true;
      for (std::size_t a = 0; a < tuple_len && distinct; ++a) {
        if (tuple[a] == i) distinct = false;
        for (std::size_t b = a + 1; b < tuple_len && distinct; ++b) distinct = tuple[a] != tuple[b];
      }
      if (distinct) {
        std::vector<Vec> rows{points[i].coords};
        for (std::size_t k : tuple) rows.push_back(points[k].coords);
        const Subspace s(field, n, std::move(rows));
        if (s.dim() == n - 1) {
          const Subspace line = dual(s);
          ++counts[point_index(points, line.rows().front()) * N + i];
        }
      }
      // Odometer over N^{n-2}.
      std::size_t pos = tuple_len;
      while (pos > 0 && ++tuple[pos - 1] == N) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }

  LefschetzMatrix out;
  out.M = IntMatrix(N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < N; ++i) out.M(j, i) = big(counts[j * N + i]);
  }
  out.scalar = t_fixed(n - 1, 1, field->order());
  out.equals_scaled_incidence = out.M == out.scalar * build_incidence(n, field).A;
  return out;
}

QCount ell_n_scalar(std::size_t n, std::uint64_t q) {
  if (n == 0) throw InvalidArgument("ell_n_scalar needs n >= 1");
  return pow(big(q), n * (n - 1) / 2) * p_count(n, q);
}

QCount det_hessian_closed(std::size_t n, std::uint64_t q, const QCount& off_diag) {
  const QCount N = q_int(static_cast<std::int64_t>(n), q);
  return (N - 1) * pow(off_diag, N.get_ui());
}

std::string to_string(OffDiagonalMatch m) {
  switch (m) {
    case OffDiagonalMatch::kNeither: return "neither";
    case OffDiagonalMatch::kOrdered: return "t";
    case OffDiagonalMatch::kUnordered: return "s";
    case OffDiagonalMatch::kBoth: return "both";
  }
  return "neither";
}

HessianFactorizationReport verify_hessian_factorization(std::size_t n, const FieldPtr& field,
                                                        std::uint64_t budget) {
  require_n(n);
  const std::uint64_t q = field->order();
  HessianFactorizationReport r;
  r.n = n;
  r.q = field->order();
  r.hessian = hessian_at_ones(build_basis_set(n, field, budget));

  const IncidencePair pair = build_incidence(n, field);
  const IntMatrix scaled = t_fixed(n - 1, 1, q) * mat_mul(pair.A, pair.B);
  const BigInt denom = factorial(n - 2);
  r.predicted = IntMatrix(scaled.dim());
  for (std::size_t i = 0; i < scaled.dim(); ++i) {
    for (std::size_t j = 0; j < scaled.dim(); ++j) {
      r.predicted(i, j) = divide_exact(scaled(i, j), denom, "Hessian factorization");
    }
  }
  r.matches_product = r.hessian == r.predicted;

  r.witnessed = mat_is_phi(r.hessian);
  r.ordered_candidate = t_fixed(n, 2, q);
  r.unordered_candidate = s_fixed(n, 2, q);
  const bool zero_diag = r.witnessed && r.witnessed->alpha == 0;
  const bool t_ok = zero_diag && r.witnessed->beta == r.ordered_candidate;
  const bool s_ok = zero_diag && r.witnessed->beta == r.unordered_candidate;
  r.match = t_ok && s_ok ? OffDiagonalMatch::kBoth
            : t_ok       ? OffDiagonalMatch::kOrdered
            : s_ok       ? OffDiagonalMatch::kUnordered
                         : OffDiagonalMatch::kNeither;
  return r;
}

}  // namespace qlattice
