#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqid/binary.hpp"
#include "sqid/catalecticant.hpp"
#include "sqid/contact.hpp"
#include "sqid/rng.hpp"
#include "sqid/secant.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitCertified = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitError = 2;

// --modulus beats SQID_MODULUS beats the default 101; the winner is echoed
// as "p" in every report.
std::uint32_t resolve_modulus(std::int64_t flag_value) {
  if (flag_value > 0) return static_cast<std::uint32_t>(flag_value);
  if (const char* env = std::getenv("SQID_MODULUS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 2 || v > 0xffffffffLL) {
      throw sqid::BadModulus("SQID_MODULUS is not a usable modulus: " +
                             std::string(env));
    }
    return static_cast<std::uint32_t>(v);
  }
  return 101;
}

sqid::HessianMode parse_hessian(const std::string& s) {
  if (s == "combo") return sqid::HessianMode::RandomCombination;
  if (s == "full") return sqid::HessianMode::FullStack;
  throw sqid::Error("unknown hessian mode: " + s);
}

void emit(const std::string& text, const std::string& json_path) {
  std::cout << text << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw sqid::Error("cannot write " + json_path);
    out << text << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sqid::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "LO:HI" or a single value, inclusive
std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, colon));
    int hi = std::stoi(s.substr(colon + 1));
    if (lo > hi) throw sqid::Error("empty range " + s);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw sqid::Error("bad range: " + s);
  } catch (const std::out_of_range&) {
    throw sqid::Error("bad range: " + s);
  }
}

// ---- sweep -----------------------------------------------------------------

struct SweepRow {
  int n = 0;
  int d = 0;
  int r = 0;
  std::uint64_t seed = 0;
};

struct RowResult {
  ordered_json json;
  std::string csv;
  bool certified = false;
};

std::string csv_escape_free(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(c == ',' ? ';' : c);
  return out;
}

RowResult run_sweep_row(const SweepRow& row, bool identifiability,
                        const sqid::Modulus& mod, int trials,
                        sqid::HessianMode hessian) {
  sqid::SecantParams params{row.n, row.d, row.r};
  RowResult res;
  std::ostringstream line;
  line << row.n << ',' << row.d << ',' << row.r << ',' << mod.p() << ','
       << row.seed << ',';
  try {
    if (identifiability) {
      sqid::IdentifiabilityCertificate cert = sqid::generic_identifiability(
          params, mod, row.seed, trials, hessian);
      res.json = ordered_json::parse(cert.to_json());
      res.certified = cert.verdict == sqid::CertVerdict::Certified;
      line << cert.expected_dim << ',' << params.ambient_dim() << ','
           << cert.terracini_rank << ',' << cert.hessian_rank << ','
           << cert.target_rank << ',' << sqid::to_string(cert.verdict);
    } else {
      sqid::DimensionReport rep =
          sqid::secant_dim_sample(params, mod, row.seed, trials);
      res.json = ordered_json::parse(rep.to_json());
      res.certified = rep.verdict == sqid::DimVerdict::NonDefectiveCertified;
      line << rep.expected_dim << ',' << rep.ambient_dim << ','
           << rep.observed_rank << ",,," << sqid::to_string(rep.verdict);
    }
  } catch (const sqid::Error& e) {
    res.json = ordered_json{{"n", row.n},    {"d", row.d},
                            {"r", row.r},    {"p", mod.p()},
                            {"seed", row.seed}, {"error", e.what()}};
    res.certified = false;
    line.str("");
    line << row.n << ',' << row.d << ',' << row.r << ',' << mod.p() << ','
         << row.seed << ",,,,,,Error: " << csv_escape_free(e.what());
  }
  res.csv = line.str();
  return res;
}

int cmd_sweep(const std::string& kind, const std::string& n_spec,
              const std::string& d_spec, int fixed_r, std::uint32_t p,
              std::uint64_t master_seed, int trials, sqid::HessianMode hessian,
              int workers, const std::string& json_path,
              const std::string& csv_path) {
  const bool identifiability = kind == "identifiable";
  if (!identifiability && kind != "dimension") {
    throw sqid::Error("sweep kind must be identifiable or dimension");
  }
  sqid::Modulus mod(p);
  auto [n_lo, n_hi] = parse_range(n_spec);
  auto [d_lo, d_hi] = parse_range(d_spec);
  if (n_lo < 1) throw sqid::Error("need n >= 1");
  if (d_lo < 2) throw sqid::Error("need d >= 2");

  std::vector<SweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) {
      if (d % 2 != 0) continue;
      int rg = sqid::generic_rank(d, n);
      int r_lo = 1, r_hi = identifiability ? rg - 1 : rg;
      if (fixed_r > 0) r_lo = r_hi = fixed_r;
      for (int r = r_lo; r <= r_hi; ++r) {
        rows.push_back(SweepRow{
            n, d, r,
            sqid::derive_seed(master_seed,
                              {static_cast<std::uint64_t>(n),
                               static_cast<std::uint64_t>(d),
                               static_cast<std::uint64_t>(r)})});
      }
    }
  }

  std::vector<std::unique_ptr<RowResult>> results(rows.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      auto res = std::make_unique<RowResult>(
          run_sweep_row(rows[i], identifiability, mod, trials, hessian));
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(res);
      }
      cv.notify_all();
    }
  };
  int nthreads = std::max(1, workers);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);

  std::ofstream csv_file;
  if (!csv_path.empty()) {
    csv_file.open(csv_path);
    if (!csv_file) throw sqid::Error("cannot write " + csv_path);
  }
  const char* header =
      "n,d,r,p,seed,expected_dim,ambient_dim,terracini_rank,hessian_rank,"
      "target_rank,verdict";
  std::cout << header << std::endl;
  if (csv_file) csv_file << header << std::endl;

  ordered_json all = ordered_json::array();
  bool all_certified = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[i] != nullptr; });
    RowResult& res = *results[i];
    lock.unlock();
    std::cout << res.csv << std::endl;  // flush: partial results must survive
    if (csv_file) csv_file << res.csv << std::endl;
    all.push_back(res.json);
    all_certified = all_certified && res.certified;
  }
  for (std::thread& t : pool) t.join();

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw sqid::Error("cannot write " + json_path);
    out << all.dump(2) << "\n";
  }
  return all_certified ? kExitCertified : kExitInconclusive;
}

// ---- binary orbits ---------------------------------------------------------

int cmd_binary_orbits(const std::string& input, std::uint32_t p,
                      const std::string& json_path) {
  sqid::Modulus mod(p);
  ordered_json spec;
  try {
    spec = ordered_json::parse(read_file(input));
  } catch (const nlohmann::json::exception& e) {
    throw sqid::Error(std::string("bad factors JSON: ") + e.what());
  }
  if (!spec.is_array()) {
    throw sqid::Error("factors file must be a JSON array of [a, b] pairs");
  }
  auto basis = sqid::GradedBasis::shared(1, 1);
  std::vector<sqid::HomogeneousPoly> factors;
  for (const auto& entry : spec) {
    if (!entry.is_array() || entry.size() != 2) {
      throw sqid::Error("each factor must be a pair [a, b]");
    }
    std::vector<sqid::fe_t> v{mod.reduce(entry[0].get<std::int64_t>()),
                              mod.reduce(entry[1].get<std::int64_t>())};
    factors.push_back(sqid::HomogeneousPoly::from_coeffs(basis, mod, v));
  }

  std::vector<sqid::Decomposition> decs = sqid::orbit_decompositions(factors);
  sqid::HomogeneousPoly product =
      sqid::HomogeneousPoly::monomial_form(sqid::Monomial({0, 0}), mod);
  for (const auto& l : factors) product = mul(product, l);

  ordered_json out;
  out["d"] = factors.size();
  out["p"] = mod.p();
  out["expected_orbits"] = sqid::binomial(
      static_cast<std::int64_t>(factors.size()) - 1,
      static_cast<std::int64_t>(factors.size()) / 2);
  out["orbit_count"] = decs.size();
  out["proportional_factors"] = sqid::has_proportional_pair(factors);

  bool all_verify = true;
  bool all_distinct = true;
  ordered_json rows = ordered_json::array();
  std::vector<sqid::GramInvariant> grams;
  grams.reserve(decs.size());
  for (const sqid::Decomposition& dec : decs) {
    all_verify = all_verify && sqid::verify_decomposition(product, dec);
    sqid::GramInvariant g = sqid::gram_invariant(dec);
    ordered_json row;
    ordered_json summands = ordered_json::array();
    for (const auto& f : dec.summands) {
      summands.push_back(std::vector<sqid::fe_t>(f.coeffs().begin(),
                                                 f.coeffs().end()));
    }
    row["summands"] = summands;
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(g.hash()));
    row["gram_hash"] = buf;
    rows.push_back(row);
    grams.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < grams.size() && all_distinct; ++i) {
    for (std::size_t j = i + 1; j < grams.size(); ++j) {
      if (grams[i] == grams[j]) {
        all_distinct = false;
        break;
      }
    }
  }
  out["all_verify"] = all_verify;
  out["all_pairs_distinct"] = all_distinct;
  out["decompositions"] = rows;
  emit(out.dump(2), json_path);
  return kExitCertified;
}

// ---- catalecticant ----------------------------------------------------------

int cmd_catalecticant(const std::string& input, int index,
                      const std::string& dump_path,
                      const std::string& json_path) {
  sqid::HomogeneousPoly f = sqid::HomogeneousPoly::parse_json(read_file(input));
  int i = index;
  if (i < 0) {
    if (f.degree() % 2 != 0) {
      throw sqid::OddDegree(
          "odd degree has no middle catalecticant; pass --index");
    }
    i = f.degree() / 2;
  }
  sqid::Catalecticant cat = sqid::catalecticant(f, i);
  std::size_t rank = cat.matrix.rank();

  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw sqid::Error("cannot write " + dump_path);
    out << cat.matrix.rows() << ' ' << cat.matrix.cols() << ' '
        << cat.matrix.modulus().p() << "\n";
    for (std::size_t a = 0; a < cat.matrix.rows(); ++a) {
      for (std::size_t b = 0; b < cat.matrix.cols(); ++b) {
        if (b) out << ' ';
        out << cat.matrix.at(a, b);
      }
      out << "\n";
    }
  }

  ordered_json out;
  out["n"] = f.n();
  out["d"] = f.degree();
  out["p"] = f.modulus().p();
  out["i"] = i;
  out["rows"] = cat.matrix.rows();
  out["cols"] = cat.matrix.cols();
  out["rank"] = rank;
  out["full_rank"] = rank == std::min(cat.matrix.rows(), cat.matrix.cols());
  emit(out.dump(2), json_path);
  return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sqid: exact certification of dimension and orthogonal identifiability "
      "for sums-of-squares decompositions over a prime field"};
  app.require_subcommand(1);

  std::int64_t modulus_flag = 0;
  std::uint64_t seed = 0;
  int trials = 3;
  std::string hessian = "combo";
  std::string json_path, csv_path;
  int n = 0, d = 0, r = 0;

  auto add_common = [&](CLI::App* cmd, bool with_trials) {
    cmd->add_option("--modulus", modulus_flag, "prime modulus (default 101)");
    cmd->add_option("--seed", seed, "master seed (default 0)");
    if (with_trials) {
      cmd->add_option("--trials", trials, "random trials (default 3)");
      cmd->add_option("--hessian", hessian,
                      "hessian mode: combo (random combination with full-stack "
                      "fallback) or full")
          ->check(CLI::IsMember({"combo", "full"}));
    }
    cmd->add_option("--json", json_path, "also write the JSON report here");
  };

  CLI::App* identifiable =
      app.add_subcommand("identifiable", "generic identifiability certificate");
  identifiable->add_option("--n", n, "projective variable bound (n+1 variables)")
      ->required();
  identifiable->add_option("--d", d, "even degree of the target form")->required();
  identifiable->add_option("--r", r, "number of squares")->required();
  add_common(identifiable, true);

  CLI::App* dimension =
      app.add_subcommand("dimension", "secant dimension certificate");
  dimension->add_option("--n", n, "projective variable bound")->required();
  dimension->add_option("--d", d, "even degree of the target form")->required();
  dimension->add_option("--r", r, "number of squares")->required();
  add_common(dimension, true);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of certificates over ranges of n, d (CSV + JSON)");
  std::string kind, n_spec, d_spec;
  int workers = 1, sweep_r = 0;
  sweep->add_option("kind", kind, "identifiable | dimension")->required();
  sweep->add_option("--n", n_spec, "single n");
  sweep->add_option("--n-range", n_spec, "inclusive range LO:HI");
  sweep->add_option("--d", d_spec, "single even d");
  sweep->add_option("--d-range", d_spec,
                    "inclusive range LO:HI (odd degrees are skipped)");
  sweep->add_option("--r", sweep_r,
                    "fix r (default: every subgeneric r for identifiable, "
                    "every r up to the generic rank for dimension)");
  sweep->add_option("--workers", workers, "parallel row workers (default 1)");
  sweep->add_option("--csv", csv_path, "also write the CSV here");
  add_common(sweep, true);

  CLI::App* binary = app.add_subcommand(
      "binary-orbits", "orbit representatives for a factored binary form");
  std::string input;
  binary->add_option("--input", input,
                     "JSON file: array of linear factors [a, b] = a*x + b*y")
      ->required();
  add_common(binary, false);

  CLI::App* catal = app.add_subcommand(
      "catalecticant", "catalecticant rank of a polynomial file");
  int cat_index = -1;
  std::string dump_path;
  catal->add_option("--input", input, "polynomial JSON file")->required();
  catal->add_option("--index", cat_index, "contraction degree i (default d/2)");
  catal->add_option("--dump", dump_path,
                    "write the matrix ('rows cols p' header, residue rows)");
  add_common(catal, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;  // flatten parse failures to the
                                        // documented usage exit code
  }

  try {
    std::uint32_t p = resolve_modulus(modulus_flag);
    if (app.got_subcommand(identifiable)) {
      sqid::SecantParams params{n, d, r};
      sqid::Modulus mod(p);
      sqid::IdentifiabilityCertificate cert = sqid::generic_identifiability(
          params, mod, seed, trials, parse_hessian(hessian));
      emit(cert.to_json(), json_path);
      return cert.verdict == sqid::CertVerdict::Certified ? kExitCertified
                                                          : kExitInconclusive;
    }
    if (app.got_subcommand(dimension)) {
      sqid::SecantParams params{n, d, r};
      sqid::Modulus mod(p);
      params.validate();
      int rg = sqid::generic_rank(d, params.n);
      if (r > rg) {
        std::cerr << "note: r = " << r << " exceeds the generic rank " << rg
                  << "\n";
      }
      sqid::DimensionReport rep =
          sqid::secant_dim_sample(params, mod, seed, trials);
      emit(rep.to_json(), json_path);
      return rep.verdict == sqid::DimVerdict::NonDefectiveCertified
                 ? kExitCertified
                 : kExitInconclusive;
    }
    if (app.got_subcommand(sweep)) {
      if (n_spec.empty() || d_spec.empty()) {
        throw sqid::Error("sweep needs --n/--n-range and --d/--d-range");
      }
      return cmd_sweep(kind, n_spec, d_spec, sweep_r, p, seed, trials,
                       parse_hessian(hessian), workers, json_path, csv_path);
    }
    if (app.got_subcommand(binary)) {
      return cmd_binary_orbits(input, p, json_path);
    }
    if (app.got_subcommand(catal)) {
      return cmd_catalecticant(input, cat_index, dump_path, json_path);
    }
  } catch (const sqid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
