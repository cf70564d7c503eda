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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlattice/cli/report.hpp"
#include "qlattice/lattice.hpp"

namespace qlattice::cli {

enum class Format { kText, kCsv, kJson };
enum class Suite { kAll, kIncidence, kGorenstein, kCounting };
enum class DumpObject { kA, kB, kM, kH, kBasisSet, kPoints };

Format parse_format(const std::string& s);
Suite parse_suite(const std::string& s);
DumpObject parse_dump_object(const std::string& s);

/// Largest Bareiss cost (pivot updates times limbs of the Hadamard bound)
/// that `table` attempts before skipping a row.
inline constexpr double kDeterminantCostLimit = 1e10;

/// One row of the determinant table. Determinants come from det_exact; the
/// closed forms sit alongside for comparison.
struct TableRow {
  std::size_t n = 0;
  std::string N;
  std::string det_A;         // |det A| factored, e.g. "2^14·7"
  std::string det_B;
  std::string closed_det_A;  // closed form, factored the same way
  std::string closed_det_B;
  int sign_A = 0;
  int sign_B = 0;
  bool skipped = false;
  std::string status;  // "ok", "MISMATCH" or "skipped: <reason>"
};

std::vector<TableRow> compute_table(std::uint32_t q, std::size_t n_min, std::size_t n_max);
std::string render_table(std::uint32_t q, const std::vector<TableRow>& rows, Format format);

VerificationReport run_verify(std::size_t n, std::uint32_t q, Suite suite,
                              std::uint64_t budget = kDefaultBudget);
std::string render_report(const VerificationReport& report, Format format, bool include_timing = true);

/// Writes the object in its text format. Throws qlattice::Error with the path
/// in the message on I/O failure.
void run_dump(DumpObject object, std::size_t n, std::uint32_t q, const std::filesystem::path& out,
              std::uint64_t budget = kDefaultBudget);
void write_dump(DumpObject object, std::size_t n, std::uint32_t q, std::ostream& out,
                std::uint64_t budget = kDefaultBudget);

/// Full command line; returns the process exit code (0 pass, 1 a check
/// failed, 2 usage or budget error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlattice::cli
