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

#include "qlattice/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

void require_same_dim(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
  }
}

// Largest bit length of any entry's absolute value.
std::size_t max_bits(const IntMatrix& m) {
  std::size_t bits = 0;
  for (const auto& x : m.entries()) {
    if (x != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw InvalidArgument("IntMatrix must be square");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t dim) {
  IntMatrix m(dim);
  for (auto& x : m.entries_) x = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "add");
  IntMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "subtract");
  IntMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& m) {
  IntMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = s * m(i, j);
  }
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  IntMatrix out(n);
  if (n == 0) return out;

  const std::size_t sum_bits = std::bit_width(n);
  if (max_bits(a) + max_bits(b) + sum_bits <= 62) {
    std::vector<std::int64_t> x(n * n), y(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      x[k] = a.entries()[k].get_si();
      y[k] = b.entries()[k].get_si();
    }
    std::vector<std::int64_t> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t f = x[i * n + k];
        if (f == 0) continue;
        const std::int64_t* yr = &y[k * n];
        for (std::size_t j = 0; j < n; ++j) acc[j] += f * yr[j];
      }
      for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<long>(acc[j]);
    }
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& f = a(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), f.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

std::string to_string(const PhiSpec& s) {
  return "Phi(" + std::to_string(s.nu) + "," + s.alpha.get_str() + "," + s.beta.get_str() + ")";
}

IntMatrix phi_matrix(const PhiSpec& spec) {
  if (spec.nu == 0) throw InvalidArgument("Phi matrix needs nu >= 1");
  IntMatrix m(spec.nu);
  for (std::size_t i = 0; i < spec.nu; ++i) {
    for (std::size_t j = 0; j < spec.nu; ++j) m(i, j) = i == j ? spec.alpha : spec.beta;
  }
  return m;
}

std::optional<PhiSpec> mat_is_phi(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return std::nullopt;
  PhiSpec spec{n, m(0, 0), n > 1 ? m(0, 1) : BigInt(0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != (i == j ? spec.alpha : spec.beta)) return std::nullopt;
    }
  }
  return spec;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j).get_str();
    }
    out << '\n';
  }
}

IntMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("matrix text: missing dimension line");
  std::size_t dim = 0;
  {
    std::istringstream head(line);
    std::string token, extra;
    const bool digits = (head >> token) && !(head >> extra) && token.size() <= 9 &&
                        std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!digits) throw InvalidArgument("matrix text: bad dimension line '" + line + "'");
    dim = std::stoul(token);
  }
  // Rows are read before allocating so a bogus header cannot force a huge allocation.
  std::vector<BigInt> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::getline(in, line)) throw InvalidArgument("matrix text: missing row " + std::to_string(i + 1));
    std::istringstream row(line);
    std::string token;
    std::size_t j = 0;
    while (row >> token) {
      if (j == dim) throw InvalidArgument("matrix text: row " + std::to_string(i + 1) + " is too long");
      entries.push_back(parse_bigint(token));
      ++j;
    }
    if (j != dim) throw InvalidArgument("matrix text: row " + std::to_string(i + 1) + " is too short");
  }
  IntMatrix m(dim);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k / dim, k % dim) = std::move(entries[k]);
  return m;
}

}  // namespace qlattice
