// Copyright 2026 The bogofock Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bogofock/errors.hpp"
#include "bogofock/husimi.hpp"
#include "bogofock/oracle.hpp"
#include "bogofock/serialization.hpp"

namespace bogofock::cli {

namespace {

using nlohmann::json;

// Transform source and command parameters gathered from the flags.
struct JobSpec {
  std::string transform_file;
  std::string ops_file;
  int random_modes = 0;
  std::uint64_t seed = 0;
  double max_squeeze = 0.8;
  double max_displacement = 1.0;

  std::string m, n, k;
  std::string kind = "position";
  int max_photons = -1;
  int cutoff = 16;
  std::optional<double> tol;
  std::string format = "json";
  std::string out_file;
  bool elements = false;
};

// A resolved transform; ops are present when the source was an op list or
// a random draw, so the oracle can use them directly.
struct Source {
  BogoliubovTransform transform;
  std::optional<std::vector<ElementaryOp>> ops;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Source load_source(const JobSpec& spec) {
  const int given = !spec.transform_file.empty() + !spec.ops_file.empty() + (spec.random_modes > 0);
  if (given != 1) {
    throw ParseError("exactly one of --transform, --ops or --random is required");
  }
  if (!spec.transform_file.empty()) {
    return {parse_transform(read_file(spec.transform_file)), std::nullopt};
  }
  if (!spec.ops_file.empty()) {
    OpList list = parse_ops(read_file(spec.ops_file));
    BogoliubovTransform t = from_elementary(list.ops, list.n_modes);
    return {std::move(t), std::move(list.ops)};
  }
  auto ops = random_ops(static_cast<std::size_t>(spec.random_modes), spec.max_squeeze,
                        spec.max_displacement, spec.seed);
  BogoliubovTransform t = from_elementary(ops, static_cast<std::size_t>(spec.random_modes));
  return {std::move(t), std::move(ops)};
}

// "1,0;0,2" → {(1,0), (0,2)}. An empty string yields `fallback`.
std::vector<MultiIndex> parse_indices(const std::string& text, std::size_t n_modes,
                                      const char* flag, std::vector<MultiIndex> fallback) {
  if (text.empty()) return fallback;
  std::vector<MultiIndex> out;
  std::stringstream tuples(text);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    std::vector<int> entries;
    std::stringstream items(tuple);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw ParseError(std::string(flag) + ": '" + item + "' is not an integer");
      }
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw ParseError(std::string(flag) + ": '" + item + "' is not an integer");
      }
      if (value < 0) throw ParseError(std::string(flag) + ": indices must be non-negative");
      entries.push_back(value);
    }
    if (entries.size() != n_modes) {
      throw ParseError(std::string(flag) + ": tuple '" + tuple + "' needs " +
                       std::to_string(n_modes) + " entries");
    }
    out.emplace_back(std::move(entries));
  }
  if (out.empty()) throw ParseError(std::string(flag) + ": no index tuples given");
  return out;
}

QuadratureKind parse_kind(const std::string& kind) {
  if (kind == "position") return QuadratureKind::position;
  if (kind == "momentum") return QuadratureKind::momentum;
  throw ParseError("--kind must be position or momentum");
}

json index_json(const MultiIndex& v) {
  return json(std::vector<int>(v.entries().begin(), v.entries().end()));
}

std::string csv_index(const MultiIndex& v) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? " " : "") + std::to_string(v[j]);
  return s;
}

void write_double(std::ostream& os, double x) {
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
}

int cmd_validate(const JobSpec& spec, std::ostream& os) {
  const Source src = load_source(spec);
  const auto report = validate_symplectic(src.transform, spec.tol.value_or(kSymplecticTolerance));
  json j;
  j["pass"] = report.pass;
  j["tolerance"] = report.tolerance;
  j["residuals"] = {{"ss_minus_rr", report.ss_minus_rr},
                    {"sr_symmetry", report.sr_symmetry},
                    {"s_s_minus_rr", report.s_s_minus_rr},
                    {"rs_symmetry", report.rs_symmetry}};
  j["max_residual"] = report.max_residual();
  os << j.dump() << "\n";
  return report.pass ? kSuccess : kValidationFailure;
}

int cmd_transform(const JobSpec& spec, std::ostream& os) {
  os << transform_to_json(load_source(spec).transform);
  return kSuccess;
}

int cmd_element(const JobSpec& spec, std::ostream& os) {
  const Source src = load_source(spec);
  const std::size_t n_modes = src.transform.n_modes();
  const std::vector<MultiIndex> zero{MultiIndex::zeros(n_modes)};
  const auto ms = parse_indices(spec.m, n_modes, "--m", zero);
  const auto ns = parse_indices(spec.n, n_modes, "--n", zero);
  const bool quadrature = !spec.k.empty();
  const auto ks = parse_indices(spec.k, n_modes, "--k", zero);
  const double tol = spec.tol.value_or(kSymplecticTolerance);

  std::optional<HusimiGaussian> h;
  std::optional<QuadratureHusimi> q;
  if (quadrature) {
    q = quadrature_qfunction(src.transform, parse_kind(spec.kind), tol);
  } else {
    h = gaussian_qfunction(src.transform, tol);
  }
  const bool csv = spec.format == "csv";
  if (csv) os << (quadrature ? "m,n,k,re,im\n" : "m,n,re,im\n");
  for (const auto& m : ms) {
    for (const auto& n : ns) {
      for (const auto& k : ks) {
        const cplx value = quadrature ? quadrature_element(*q, m, n, k) : matrix_element(*h, m, n);
        if (csv) {
          os << csv_index(m) << "," << csv_index(n) << ",";
          if (quadrature) os << csv_index(k) << ",";
          write_double(os, value.real());
          os << ",";
          write_double(os, value.imag());
          os << "\n";
          continue;
        }
        json line;
        line["m"] = index_json(m);
        line["n"] = index_json(n);
        if (quadrature) {
          line["k"] = index_json(k);
          line["kind"] = spec.kind;
        }
        line["re"] = value.real();
        line["im"] = value.imag();
        os << line.dump() << "\n";
      }
    }
  }
  return kSuccess;
}

int cmd_block(const JobSpec& spec, std::ostream& os) {
  const Source src = load_source(spec);
  const std::size_t n_modes = src.transform.n_modes();
  const auto h = gaussian_qfunction(src.transform, spec.tol.value_or(kSymplecticTolerance));
  MultiIndex max_m, max_n;
  if (spec.max_photons >= 0) {
    max_m = max_n = MultiIndex(std::vector<int>(n_modes, spec.max_photons));
  } else {
    max_n = parse_indices(spec.n, n_modes, "--n", {MultiIndex::zeros(n_modes)}).front();
    max_m = spec.m.empty() ? truncation_bounds(src.transform, max_n)
                           : parse_indices(spec.m, n_modes, "--m", {}).front();
  }
  const auto block = element_block(h, max_m, max_n);
  if (spec.format == "csv") {
    os << "m,n,re,im\n";
    for (std::size_t c = 0; c < block.cols().size(); ++c) {
      for (std::size_t r = 0; r < block.rows().size(); ++r) {
        const cplx v = block.values()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        os << csv_index(block.rows()[r]) << "," << csv_index(block.cols()[c]) << ",";
        write_double(os, v.real());
        os << ",";
        write_double(os, v.imag());
        os << "\n";
      }
    }
    os << "\nn,norm_squared\n";
    for (std::size_t c = 0; c < block.cols().size(); ++c) {
      os << csv_index(block.cols()[c]) << ",";
      write_double(os, block.column_norm_squared(c));
      os << "\n";
    }
    return kSuccess;
  }
  json j;
  j["max_m"] = index_json(max_m);
  j["max_n"] = index_json(max_n);
  json rows = json::array(), cols = json::array(), values = json::array(), norms = json::array();
  for (const auto& r : block.rows()) rows.push_back(index_json(r));
  for (std::size_t c = 0; c < block.cols().size(); ++c) {
    cols.push_back(index_json(block.cols()[c]));
    norms.push_back(block.column_norm_squared(c));
  }
  for (Eigen::Index r = 0; r < block.values().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < block.values().cols(); ++c) {
      row.push_back({block.values()(r, c).real(), block.values()(r, c).imag()});
    }
    values.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  j["values"] = std::move(values);
  j["column_norm_squared"] = std::move(norms);
  os << j.dump() << "\n";
  return kSuccess;
}

int cmd_verify(const JobSpec& spec, std::ostream& os) {
  const Source src = load_source(spec);
  const std::size_t n_modes = src.transform.n_modes();
  const double tol = spec.tol.value_or(1e-7);
  const int max_total = spec.max_photons >= 0 ? spec.max_photons : 6;
  require_symplectic(src.transform);
  const auto ops = src.ops ? *src.ops : bloch_messiah(src.transform).to_ops(src.transform.t());
  if (spec.cutoff < 2) throw DomainError("--cutoff must be at least 2");

  ConvergenceOptions opts;
  opts.max_row_total = max_total;
  opts.max_column_total = max_total;
  const auto oracle = converged_oracle(ops, n_modes, static_cast<std::size_t>(spec.cutoff), opts);
  const auto h = gaussian_qfunction(src.transform);

  std::vector<MultiIndex> ms, ns;
  std::vector<cplx> values, reference;
  for (const auto& m : enumerate_simplex(n_modes, max_total)) {
    for (const auto& n : enumerate_simplex(n_modes, max_total - m.total())) {
      ms.push_back(m);
      ns.push_back(n);
      values.push_back(matrix_element(h, m, n));
      reference.push_back(oracle_element(oracle.op, m, n));
    }
  }
  const auto aligned = align_global_phase(values, reference);
  const bool pass = aligned.max_deviation <= tol && oracle.converged;
  json j;
  j["pass"] = pass;
  j["max_deviation"] = aligned.max_deviation;
  j["phase"] = {aligned.phase.real(), aligned.phase.imag()};
  j["ratio_modulus"] = std::abs(aligned.ratio);
  j["cutoff"] = oracle.cutoff;
  j["converged"] = oracle.converged;
  j["cutoff_change"] = oracle.change;
  j["tolerance"] = tol;
  j["count"] = values.size();
  if (spec.elements) {
    json table = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      table.push_back({{"m", index_json(ms[i])},
                       {"n", index_json(ns[i])},
                       {"mhp", {values[i].real(), values[i].imag()}},
                       {"oracle", {reference[i].real(), reference[i].imag()}}});
    }
    j["elements"] = std::move(table);
  }
  os << j.dump() << "\n";
  return pass ? kSuccess : kValidationFailure;
}

int cmd_profile(const JobSpec& spec, std::ostream& os) {
  const Source src = load_source(spec);
  const std::size_t n_modes = src.transform.n_modes();
  const auto n = parse_indices(spec.n, n_modes, "--n", {MultiIndex::zeros(n_modes)}).front();
  const int max_total = spec.max_photons >= 0 ? spec.max_photons : 10;
  const auto h = gaussian_qfunction(src.transform, spec.tol.value_or(kSymplecticTolerance));
  const auto block = element_block(h, MultiIndex(std::vector<int>(n_modes, max_total)), n);
  const auto col = static_cast<Eigen::Index>(block.cols().size() - 1);

  // Sticks ordered by total photon number, then by index.
  std::vector<std::size_t> order;
  for (std::size_t r = 0; r < block.rows().size(); ++r) {
    if (block.rows()[r].total() <= max_total) order.push_back(r);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return block.rows()[a].total() < block.rows()[b].total();
  });
  os << "total,m,intensity\n";
  for (std::size_t r : order) {
    os << block.rows()[r].total() << "," << csv_index(block.rows()[r]) << ",";
    write_double(os, std::norm(block.values()(static_cast<Eigen::Index>(r), col)));
    os << "\n";
  }
  return kSuccess;
}

void add_source_options(CLI::App* cmd, JobSpec& spec) {
  cmd->add_option("--transform", spec.transform_file, "JSON file with n_modes, S, R, t");
  cmd->add_option("--ops", spec.ops_file, "JSON file with an elementary op list");
  cmd->add_option("--random", spec.random_modes, "Random transform on this many modes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", spec.seed, "Seed for --random")->capture_default_str();
  cmd->add_option("--max-squeeze", spec.max_squeeze, "Largest squeezing for --random")
      ->capture_default_str();
  cmd->add_option("--max-displacement", spec.max_displacement,
                  "Largest |t_j| for --random")->capture_default_str();
  cmd->add_option("--tol", spec.tol, "Tolerance (symplectic check, or deviation for verify)");
  cmd->add_option("--out", spec.out_file, "Write results to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fock-basis matrix elements of multimode Gaussian operators"};
  app.name("bogofock");
  app.require_subcommand(1);
  JobSpec spec;

  auto* validate = app.add_subcommand("validate", "Report the symplectic residuals");
  add_source_options(validate, spec);

  auto* transform = app.add_subcommand("transform", "Print the (S, R, t) JSON of a source");
  add_source_options(transform, spec);

  auto* element = app.add_subcommand("element", "Matrix elements <m|O X^k|n> as JSON lines");
  add_source_options(element, spec);
  element->add_option("--m", spec.m, "Row tuples, e.g. 2,0;1,1");
  element->add_option("--n", spec.n, "Column tuples");
  element->add_option("--k", spec.k, "Quadrature power tuples");
  element->add_option("--kind", spec.kind, "position or momentum")
      ->check(CLI::IsMember({"position", "momentum"}));
  element->add_option("--format", spec.format)->check(CLI::IsMember({"json", "csv"}));

  auto* block = app.add_subcommand("block", "Dense block with column norms");
  add_source_options(block, spec);
  block->add_option("--m", spec.m, "Row bound tuple (default: truncation heuristic)");
  block->add_option("--n", spec.n, "Column bound tuple (default: vacuum)");
  block->add_option("--max-photons", spec.max_photons, "Per-mode bound for rows and columns");
  block->add_option("--format", spec.format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Compare against the truncated Fock oracle");
  add_source_options(verify, spec);
  verify->add_option("--cutoff", spec.cutoff, "Initial oracle cutoff")->capture_default_str();
  verify->add_option("--max-photons", spec.max_photons, "Compare all Σm + Σn up to this (6)");
  verify->add_flag("--elements", spec.elements, "Include the per-element table");

  auto* profile = app.add_subcommand("profile", "Transition intensities |<m|O|n>|^2 as CSV");
  add_source_options(profile, spec);
  profile->add_option("--n", spec.n, "Initial state tuple (default: vacuum)");
  profile->add_option("--max-photons", spec.max_photons, "Largest Σm listed (10)");
  profile->add_option("--format", spec.format, "csv only")->check(CLI::IsMember({"csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kSuccess : kInputError;
  }

  std::ofstream file;
  if (!spec.out_file.empty()) {
    file.open(spec.out_file);
    if (!file) {
      err << "error: cannot write " << spec.out_file << "\n";
      return kInputError;
    }
  }
  std::ostream& os = spec.out_file.empty() ? out : file;

  try {
    if (*validate) return cmd_validate(spec, os);
    if (*transform) return cmd_transform(spec, os);
    if (*element) return cmd_element(spec, os);
    if (*block) return cmd_block(spec, os);
    if (*verify) return cmd_verify(spec, os);
    return cmd_profile(spec, os);
  } catch (const InvalidTransformError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const TruncationRiskError& e) {
    err << "truncation risk: " << e.what() << "\n";
    return kResourceError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace bogofock::cli
