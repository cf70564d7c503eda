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

#include "qlattice/cli/commands.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlattice/brute_force.hpp"
#include "qlattice/determinant.hpp"
#include "qlattice/error.hpp"
#include "qlattice/factor.hpp"
#include "qlattice/gorenstein.hpp"
#include "qlattice/incidence.hpp"
#include "qlattice/qcount.hpp"

namespace qlattice::cli {

namespace {

using Clock = std::chrono::steady_clock;

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

double determinant_cost(const IntMatrix& m) {
  const double n = static_cast<double>(m.dim());
  const double limbs = std::max(1.0, static_cast<double>(hadamard_bits(m)) / 64.0);
  return n * n * n / 3.0 * limbs;
}

std::string factored(const BigInt& v, std::uint64_t p) { return render_factored(factorize(v), p); }

// Collects checks for one report, timing each one.
class CheckRunner {
 public:
  explicit CheckRunner(VerificationReport& report) : report_(report) {}

  // body returns (predicted, computed, pass).
  void run(const std::string& name, const std::function<Check()>& body) {
    const auto start = Clock::now();
    Check c;
    try {
      c = body();
    } catch (const BudgetExceeded& e) {
      c = Check{name, "n/a", std::string("skipped: ") + e.what(), true, 0};
    }
    c.name = name;
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    report_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& reason) {
    report_.checks.push_back(Check{name, "n/a", "skipped: " + reason, true, 0});
  }

  // Determinant through both engines; clears engine_agreement on mismatch.
  BigInt det(const IntMatrix& m) {
    const BigInt exact = det_exact(m);
    if (det_modular(m) != exact) report_.engine_agreement = false;
    return exact;
  }

 private:
  VerificationReport& report_;
};

Check equal_check(const BigInt& predicted, const BigInt& computed) {
  return Check{"", predicted.get_str(), computed.get_str(), predicted == computed, 0};
}

void counting_suite(std::size_t n, const FieldPtr& field, std::uint64_t budget, CheckRunner& run) {
  const std::uint64_t q = field->order();
  const auto sn = static_cast<std::int64_t>(n);

  run.run("points.count", [&] {
    return equal_check(q_int(sn, q), big(enum_points(n, field).size()));
  });
  run.run("points.split_identity", [&] {
    return equal_check(q_int(sn, q), q_binom(sn - 1, 1, q) + pow(big(q), n - 1));
  });
  for (std::size_t j = 0; j <= n; ++j) {
    const std::string name = "level.count j=" + std::to_string(j);
    const QCount predicted = q_binom(sn, static_cast<std::int64_t>(j), q);
    if (predicted * n > big(budget)) {
      run.skip(name, "level set larger than budget");
      continue;
    }
    run.run(name, [&] {
      auto level = enum_level(n, j, field);
      std::sort(level.begin(), level.end());
      const bool distinct = std::adjacent_find(level.begin(), level.end()) == level.end();
      Check c = equal_check(predicted, big(level.size()));
      c.pass = c.pass && distinct;
      return c;
    });
  }
  run.run("gl_order", [&] { return equal_check(gl_order(n, q), count_invertible_matrices(n, field, budget)); });
  run.run("t_count", [&] { return equal_check(t_count(n, q), count_ordered_bases(n, field, budget)); });
  run.run("s_count", [&] { return equal_check(s_count(n, q), count_unordered_bases(n, field, budget)); });
  for (std::size_t j = 0; j <= n; ++j) {
    run.run("t_fixed j=" + std::to_string(j), [&] {
      return equal_check(t_fixed(n, j, q), count_ordered_completions(n, j, field, budget));
    });
    run.run("s_fixed j=" + std::to_string(j), [&] {
      return equal_check(s_fixed(n, j, q), count_unordered_completions(n, j, field, budget));
    });
  }
  run.run("p_count", [&] { return equal_check(p_count(n, q), count_paths_bruteforce(n, field, budget)); });
}

void incidence_suite(std::size_t n, const FieldPtr& field, CheckRunner& run) {
  const std::uint64_t q = field->order();
  if (n < 2) {
    run.skip("incidence", "needs n >= 2");
    return;
  }
  const IncidencePair pair = build_incidence(n, field);
  const std::size_t N = pair.size();

  run.run("A.symmetric", [&] {
    return Check{"", "true", pair.A.is_symmetric() ? "true" : "false", pair.A.is_symmetric(), 0};
  });
  run.run("B.symmetric", [&] {
    return Check{"", "true", pair.B.is_symmetric() ? "true" : "false", pair.B.is_symmetric(), 0};
  });
  run.run("A+B=Phi(N,1,1)", [&] {
    const auto w = mat_is_phi(pair.A + pair.B);
    const PhiSpec want{N, 1, 1};
    return Check{"", to_string(want), w ? to_string(*w) : "not Phi", w && *w == want, 0};
  });
  run.run("A.line_sums", [&] {
    const QCount want = q_int(static_cast<std::int64_t>(n) - 1, q);
    const bool ok = has_line_sums(pair.A, want);
    return Check{"", want.get_str(), ok ? want.get_str() : "non-constant", ok, 0};
  });
  run.run("B.line_sums", [&] {
    const QCount want = pow(big(q), n - 1);
    const bool ok = has_line_sums(pair.B, want);
    return Check{"", want.get_str(), ok ? want.get_str() : "non-constant", ok, 0};
  });

  for (const auto& id : verify_square_identities(pair)) {
    run.run(id.name + "=Phi", [&] {
      return Check{"", to_string(id.predicted), id.witnessed ? to_string(*id.witnessed) : "not Phi", id.pass, 0};
    });
  }

  if (determinant_cost(pair.A) > kDeterminantCostLimit) {
    run.skip("determinants", "matrix too large for exact elimination");
    return;
  }
  std::optional<BigInt> det_A, det_B;
  run.run("|det A|", [&] {
    det_A = run.det(pair.A);
    return equal_check(det_A_closed(n, q), abs(*det_A));
  });
  run.run("det A (signed, canonical order)", [&] {
    const QCount closed = det_A_closed(n, q);
    return Check{"", "+/-" + closed.get_str(), det_A->get_str(), abs(*det_A) == closed, 0};
  });
  run.run("|det B|", [&] {
    det_B = run.det(pair.B);
    return equal_check(det_B_closed(n, q), abs(*det_B));
  });
  run.run("det B (signed, canonical order)", [&] {
    const QCount closed = det_B_closed(n, q);
    return Check{"", "+/-" + closed.get_str(), det_B->get_str(), abs(*det_B) == closed, 0};
  });
  run.run("det(B^2)", [&] { return equal_check(det_B_squared_closed(n, q), (*det_B) * (*det_B)); });
  run.run("|det A| via AB", [&] { return equal_check(det_AB_alternative(n, q), abs(*det_A)); });
}

void gorenstein_suite(std::size_t n, const FieldPtr& field, std::uint64_t budget, CheckRunner& run) {
  const std::uint64_t q = field->order();
  if (n < 2) {
    run.skip("gorenstein", "needs n >= 2");
    return;
  }
  const IncidencePair pair = build_incidence(n, field);

  std::optional<BasisSet> bases;
  run.run("basis_set.card", [&] {
    bases = build_basis_set(n, field, budget);
    return equal_check(s_count(n, q), big(bases->bases.size()));
  });
  run.run("ell^n scalar = n!*card(B)", [&] {
    if (!bases) throw BudgetExceeded("basis set not available");
    return equal_check(ell_n_scalar(n, q), factorial(n) * big(bases->bases.size()));
  });
  run.run("mu = B", [&] {
    const bool ok = mu_matrix(n, field) == pair.B;
    return Check{"", "B", ok ? "B" : "differs from B", ok, 0};
  });

  std::optional<HessianFactorizationReport> hess;
  run.run("H = t_{n-1,1,q}/(n-2)! * AB", [&] {
    if (!bases) throw BudgetExceeded("basis set not available");
    hess = verify_hessian_factorization(n, field, budget);
    const auto w = mat_is_phi(hess->predicted);
    const auto h = mat_is_phi(hess->hessian);
    return Check{"", w ? to_string(*w) : "not Phi", h ? to_string(*h) : "not Phi", hess->matches_product, 0};
  });
  run.run("H.symmetric_zero_diagonal", [&] {
    if (!hess) throw BudgetExceeded("Hessian not available");
    bool ok = hess->hessian.is_symmetric();
    for (std::size_t i = 0; i < hess->hessian.dim(); ++i) ok = ok && hess->hessian(i, i) == 0;
    return Check{"", "true", ok ? "true" : "false", ok, 0};
  });
  run.run("H.off_diagonal candidate", [&] {
    if (!hess) throw BudgetExceeded("Hessian not available");
    const std::string predicted =
        "t_{n,2,q}=" + hess->ordered_candidate.get_str() + " | s_{n,2,q}=" + hess->unordered_candidate.get_str();
    const std::string beta = hess->witnessed ? hess->witnessed->beta.get_str() : "not Phi";
    return Check{"", predicted, beta + " (matches " + to_string(hess->match) + ")",
                 hess->match != OffDiagonalMatch::kNeither, 0};
  });
  run.run("|det H|", [&] {
    if (!hess || !hess->witnessed) throw BudgetExceeded("Hessian not available");
    return equal_check(det_hessian_closed(n, q, hess->witnessed->beta), abs(run.det(hess->hessian)));
  });

  std::optional<LefschetzMatrix> lefschetz;
  run.run("M = t_{n-1,1,q} * A", [&] {
    lefschetz = lefschetz_matrix(n, field, budget);
    return Check{"", lefschetz->scalar.get_str() + "*A",
                 lefschetz->equals_scaled_incidence ? lefschetz->scalar.get_str() + "*A" : "differs",
                 lefschetz->equals_scaled_incidence, 0};
  });
  run.run("B*M = (n-2)!*H", [&] {
    if (!lefschetz || !hess) throw BudgetExceeded("M or H not available");
    const bool ok = mat_mul(pair.B, lefschetz->M) == factorial(n - 2) * hess->hessian;
    return Check{"", "equal", ok ? "equal" : "differs", ok, 0};
  });
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width of UTF-8 text, counting code points.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + ": " + std::strerror(errno));
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw InvalidArgument("unknown format '" + s + "'");
}

Suite parse_suite(const std::string& s) {
  if (s == "all") return Suite::kAll;
  if (s == "incidence") return Suite::kIncidence;
  if (s == "gorenstein") return Suite::kGorenstein;
  if (s == "counting") return Suite::kCounting;
  throw InvalidArgument("unknown suite '" + s + "'");
}

DumpObject parse_dump_object(const std::string& s) {
  if (s == "A") return DumpObject::kA;
  if (s == "B") return DumpObject::kB;
  if (s == "M") return DumpObject::kM;
  if (s == "H") return DumpObject::kH;
  if (s == "basis-set") return DumpObject::kBasisSet;
  if (s == "points") return DumpObject::kPoints;
  throw InvalidArgument("unknown object '" + s + "'");
}

std::vector<TableRow> compute_table(std::uint32_t q, std::size_t n_min, std::size_t n_max) {
  const FieldPtr field = Field::of_order(q);
  const std::uint64_t p = field->characteristic();
  std::vector<TableRow> rows;
  for (std::size_t n = std::max<std::size_t>(n_min, 2); n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    row.N = q_int(static_cast<std::int64_t>(n), q).get_str();
    row.closed_det_A = factored(det_A_closed(n, q), p);
    row.closed_det_B = factored(det_B_closed(n, q), p);
    IncidencePair pair;
    try {
      pair = build_incidence(n, field);
    } catch (const BudgetExceeded& e) {
      row.skipped = true;
      row.status = std::string("skipped: ") + e.what();
      rows.push_back(std::move(row));
      continue;
    }
    if (determinant_cost(pair.A) > kDeterminantCostLimit || determinant_cost(pair.B) > kDeterminantCostLimit) {
      row.skipped = true;
      row.status = "skipped: determinant cost above limit";
      rows.push_back(std::move(row));
      continue;
    }
    const BigInt det_A = det_exact(pair.A);
    const BigInt det_B = det_exact(pair.B);
    row.sign_A = sgn(det_A);
    row.sign_B = sgn(det_B);
    row.det_A = factored(abs(det_A), p);
    row.det_B = factored(abs(det_B), p);
    const bool ok = abs(det_A) == det_A_closed(n, q) && abs(det_B) == det_B_closed(n, q);
    row.status = ok ? "ok" : "MISMATCH";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(std::uint32_t q, const std::vector<TableRow>& rows, Format format) {
  auto sign = [](int s) { return s > 0 ? std::string("+") : s < 0 ? std::string("-") : std::string("0"); };
  if (format == Format::kJson) {
    nlohmann::json j;
    j["q"] = q;
    j["version"] = kVersion;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"n", r.n},
                           {"N", r.N},
                           {"det_A", r.det_A},
                           {"det_B", r.det_B},
                           {"closed_det_A", r.closed_det_A},
                           {"closed_det_B", r.closed_det_B},
                           {"sign_A", r.sign_A},
                           {"sign_B", r.sign_B},
                           {"status", r.status}});
    }
    return j.dump(2) + "\n";
  }
  const std::vector<std::string> header{"n", "N", "|det A|", "|det B|", "closed |det A|", "closed |det B|",
                                        "sign A", "sign B", "status"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.n), r.N, r.skipped ? "-" : r.det_A, r.skipped ? "-" : r.det_B,
                     r.closed_det_A, r.closed_det_B, r.skipped ? "-" : sign(r.sign_A),
                     r.skipped ? "-" : sign(r.sign_B), r.status});
  }
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "n,N,det_A,det_B,closed_det_A,closed_det_B,sign_A,sign_B,status\n";
    for (std::size_t i = 1; i < cells.size(); ++i) {
      for (std::size_t c = 0; c < cells[i].size(); ++c) out << (c ? "," : "") << csv_escape(cells[i][c]);
      out << '\n';
    }
    return out.str();
  }
  return "q = " + std::to_string(q) + "\n" + render_columns(cells);
}

VerificationReport run_verify(std::size_t n, std::uint32_t q, Suite suite, std::uint64_t budget) {
  const FieldPtr field = Field::of_order(q);
  VerificationReport report;
  report.n = n;
  report.q = q;
  CheckRunner runner(report);
  if (suite == Suite::kAll || suite == Suite::kCounting) counting_suite(n, field, budget, runner);
  if (suite == Suite::kAll || suite == Suite::kIncidence) incidence_suite(n, field, runner);
  if (suite == Suite::kAll || suite == Suite::kGorenstein) gorenstein_suite(n, field, budget, runner);
  return report;
}

std::string render_report(const VerificationReport& report, Format format, bool include_timing) {
  if (format == Format::kJson) return serialize(report, include_timing);
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "name,predicted,computed,pass" << (include_timing ? ",ms" : "") << '\n';
    for (const auto& c : report.checks) {
      out << csv_escape(c.name) << ',' << csv_escape(c.predicted) << ',' << csv_escape(c.computed) << ','
          << (c.pass ? "true" : "false");
      if (include_timing) out << ',' << c.ms;
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::vector<std::string>> cells{{"status", "check", "predicted", "computed"}};
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass ? 1 : 0;
    cells.push_back({c.skipped() ? "SKIP" : c.pass ? "PASS" : "FAIL", c.name, c.predicted, c.computed});
  }
  std::ostringstream out;
  out << "qlattice verify n=" << report.n << " q=" << report.q << '\n'
      << render_columns(cells) << "engine agreement: " << (report.engine_agreement ? "yes" : "NO") << '\n'
      << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
      << " checks)\n";
  return out.str();
}

void write_dump(DumpObject object, std::size_t n, std::uint32_t q, std::ostream& out, std::uint64_t budget) {
  const FieldPtr field = Field::of_order(q);
  switch (object) {
    case DumpObject::kA: write_matrix(out, build_incidence(n, field).A); break;
    case DumpObject::kB: write_matrix(out, build_incidence(n, field).B); break;
    case DumpObject::kM: write_matrix(out, lefschetz_matrix(n, field, budget).M); break;
    case DumpObject::kH: write_matrix(out, hessian_at_ones(build_basis_set(n, field, budget))); break;
    case DumpObject::kBasisSet:
      for (const auto& b : build_basis_set(n, field, budget).bases) {
        for (std::size_t k = 0; k < b.size(); ++k) out << (k ? " " : "") << b[k] + 1;
        out << '\n';
      }
      break;
    case DumpObject::kPoints:
      for (const auto& p : enum_points(n, field)) {
        for (std::size_t k = 0; k < p.coords.size(); ++k) out << (k ? " " : "") << p.coords[k].rep;
        out << '\n';
      }
      break;
  }
}

void run_dump(DumpObject object, std::size_t n, std::uint32_t q, const std::filesystem::path& path,
              std::uint64_t budget) {
  std::ostringstream buffer;
  write_dump(object, n, q, buffer, budget);
  std::ofstream out = open_output(path);
  out << buffer.str();
  out.flush();
  if (!out) throw Error("cannot write " + path.string() + ": " + std::strerror(errno));
}

namespace {

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const auto a = std::stoul(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const auto b = std::stoul(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (a > b) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad range '" + text + "', expected <min>..<max>");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace-lattice incidence and Hessian determinants over GF(q)", "qlattice"};
  app.require_subcommand(1);

  std::uint32_t q = 0;
  std::string n_range, format = "text", suite = "all", object, out_path;
  std::size_t n = 0;
  std::uint64_t budget = kDefaultBudget;
  bool no_timing = false;

  auto* table = app.add_subcommand("table", "Determinants of A and B for a range of n");
  table->add_option("--q", q, "Field order (prime power)")->required();
  table->add_option("--n", n_range, "Dimension or range <min>..<max>")->required();
  table->add_option("--format", format, "text, csv or json");

  auto* verify = app.add_subcommand("verify", "Check every identity at one (n, q)");
  verify->add_option("--n", n, "Dimension")->required();
  verify->add_option("--q", q, "Field order (prime power)")->required();
  verify->add_option("--suite", suite, "all, incidence, gorenstein or counting");
  verify->add_option("--budget", budget, "Step budget for brute-force enumerations");
  verify->add_option("--format", format, "text, csv or json");
  verify->add_flag("--no-timing", no_timing, "Write 0 for every elapsed time");

  auto* dump = app.add_subcommand("dump", "Write a matrix, the basis set or the point list");
  dump->add_option("--object", object, "A, B, M, H, basis-set or points")->required();
  dump->add_option("--n", n, "Dimension")->required();
  dump->add_option("--q", q, "Field order (prime power)")->required();
  dump->add_option("--out", out_path, "Output file")->required();
  dump->add_option("--budget", budget, "Step budget for brute-force enumerations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qlattice: " << e.what() << '\n';
    return 2;
  }

  try {
    if (table->parsed()) {
      const auto [lo, hi] = parse_range(n_range);
      const auto rows = compute_table(q, lo, hi);
      out << render_table(q, rows, parse_format(format));
      const bool mismatch = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.status == "MISMATCH"; });
      return mismatch ? 1 : 0;
    }
    if (verify->parsed()) {
      const auto fmt = parse_format(format);
      const auto report = run_verify(n, q, parse_suite(suite), budget);
      out << render_report(report, fmt, !no_timing);
      if (fmt == Format::kText) {
        for (const auto& c : report.checks) err << c.name << ": " << c.ms << " ms\n";
      }
      return report.passed() ? 0 : 1;
    }
    if (dump->parsed()) {
      run_dump(parse_dump_object(object), n, q, out_path, budget);
      return 0;
    }
  } catch (const InvalidArgument& e) {
    err << "qlattice: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "qlattice: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "qlattice: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qlattice::cli
