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

#include "qlattice/field.hpp"

#include <string>

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - (lead * m[i]) % p)) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose low coefficients are the base-p
// digits of `index`.
Poly monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p) {
  Poly out(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  out[degree] = 1;
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  if (f[0] == 0) return false;
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_rem(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds 2^20");
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k > 1) {
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      Poly f = monic_from_index(idx, k, p);
      if (is_irreducible(f, p)) {
        modulus_ = std::move(f);
        break;
      }
    }
    if (modulus_.empty()) {
      throw InternalError("no irreducible polynomial of degree " + std::to_string(k) +
                          " over GF(" + std::to_string(p) + ")");
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

FieldElement Field::element(std::uint32_t rep) const {
  if (rep >= q_) {
    throw InvalidArgument("element " + std::to_string(rep) + " out of range for GF(" +
                          std::to_string(q_) + ")");
  }
  return {rep};
}

FieldElement Field::digit_add(FieldElement a, FieldElement b) const {
  std::uint32_t out = 0, scale = 1, x = a.rep, y = b.rep;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {(a.rep + b.rep) % p_};
  if (!add_.empty()) return {add_[static_cast<std::size_t>(a.rep) * q_ + b.rep]};
  return digit_add(a, b);
}

FieldElement Field::neg(FieldElement a) const {
  if (k_ == 1) return {(p_ - a.rep) % p_};
  std::uint32_t out = 0, scale = 1, x = a.rep;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::poly_mul(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.rep} * b.rep % p_)};
  Poly x(k_), y(k_);
  for (unsigned i = 0; i < k_; ++i) {
    x[i] = a.rep % p_;
    a.rep /= p_;
    y[i] = b.rep % p_;
    b.rep /= p_;
  }
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  const Poly r = poly_rem(std::move(prod), modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return {out};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.rep == 0 || b.rep == 0) return {0};
  if (!exp_.empty()) return {exp_[log_[a.rep] + log_[b.rep]]};
  return poly_mul(a, b);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.rep == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (!exp_.empty()) return {exp_[(q_ - 1 - log_[a.rep]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

void Field::build_tables() {
  if (k_ > 1 && q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(digit_add({a}, {b}).rep);
      }
    }
  }
  if (q_ == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }

  std::vector<std::uint32_t> prime_factors;
  std::uint32_t m = q_ - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);

  auto slow_pow = [this](FieldElement a, std::uint64_t e) {
    FieldElement r = one();
    while (e > 0) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  std::uint32_t generator = 0;
  for (std::uint32_t g = 2; g < q_ && generator == 0; ++g) {
    bool primitive = true;
    for (std::uint32_t r : prime_factors) {
      if (slow_pow({g}, (q_ - 1) / r).rep == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (generator == 0) throw InternalError("no primitive element found");

  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, 0);
  FieldElement x = one();
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = exp_[i + q_ - 1] = x.rep;
    log_[x.rep] = i;
    x = poly_mul(x, {generator});
  }
}

}  // namespace qlattice
