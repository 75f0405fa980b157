// genli: batch front door for the generalized Li coefficient laboratory.
//
//   genli compute  --n 1..6 --b 0.5,1 --routes all ...   -> CSV/JSON rows
//   genli verify   <suite>                               -> JSON report
//   genli zeros    import|validate <path>
//   genli sieve    --sieve-limit M --cache-dir DIR
//
// Exit codes: 0 pass, 1 usage, 2 data error, 3 inconclusive.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "genli/asymptotics.hpp"
#include "genli/contour.hpp"
#include "genli/licore.hpp"

namespace fs = std::filesystem;
using namespace genli;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  long precision = 60;
  std::string zeros_path;
  long zeros_count = 100000;
  std::uint64_t sieve_limit = 10000000;
  double quad_tol = 1e-9;
  std::vector<std::string> routes{"all"};
  std::string n_spec = "1";
  std::string b_spec = "1";
  std::string out_path;
  std::string format = "csv";
  std::string cache_dir;
  bool timings = false;
};

long out_digits(const RunConfig& cfg) { return std::min<long>(cfg.precision, 30); }

std::vector<long> parse_n_spec(const std::string& spec) {
  std::vector<long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dots = item.find("..");
    if (dots != std::string::npos) {
      long lo = std::stol(item.substr(0, dots));
      long hi = std::stol(item.substr(dots + 2));
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(std::stol(item));
    }
  }
  return out;
}

double parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  return std::stod(s);
}

std::vector<double> parse_b_spec(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

// flat "key = value" config file; CLI flags override
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "precision") cfg.precision = std::stol(val);
    else if (key == "zeros") cfg.zeros_path = val;
    else if (key == "zeros-count") cfg.zeros_count = std::stol(val);
    else if (key == "sieve-limit") cfg.sieve_limit = std::stoull(val);
    else if (key == "tol") cfg.quad_tol = std::stod(val);
    else if (key == "routes") { cfg.routes.clear(); std::stringstream rs(val); std::string r;
      while (std::getline(rs, r, ',')) cfg.routes.push_back(r); }
    else if (key == "n") cfg.n_spec = val;
    else if (key == "b") cfg.b_spec = val;
    else if (key == "out") cfg.out_path = val;
    else if (key == "format") cfg.format = val;
    else if (key == "cache-dir") cfg.cache_dir = val;
    else throw CLI::ValidationError("config", "unknown key '" + key + "'");
  }
}

VonMangoldtTable load_or_sieve(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) {
    fs::path cache = fs::path(cfg.cache_dir) / ("sieve_" + std::to_string(cfg.sieve_limit) + ".gliv");
    if (fs::exists(cache)) return read_sieve_cache(cache);
    VonMangoldtTable t = sieve_von_mangoldt(cfg.sieve_limit);
    fs::create_directories(cfg.cache_dir);
    write_sieve_cache(t, cache);
    return t;
  }
  return sieve_von_mangoldt(cfg.sieve_limit);
}

struct Row {
  long n;
  double b;
  std::string route;
  std::string value, k_value, err;
  long terms = 0;
  long wall_ms = 0;
  std::string status = "ok";
};

void write_rows(const RunConfig& cfg, const std::vector<Row>& rows, std::ostream& os) {
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json j;
      j["n"] = r.n;
      j["b"] = Real(r.b).str(out_digits(cfg));
      j["route"] = r.route;
      j["value"] = r.value;
      j["k_value"] = r.k_value;
      j["err"] = r.err;
      j["terms"] = r.terms;
      j["wall_ms"] = r.wall_ms;
      j["status"] = r.status;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  os << "n,b,route,value,k_value,err,terms,wall_ms,status\n";
  for (const Row& r : rows) {
    os << r.n << ',' << Real(r.b).str(out_digits(cfg)) << ',' << r.route << ',' << r.value << ','
       << r.k_value << ',' << r.err << ',' << r.terms << ',' << r.wall_ms << ',' << r.status
       << "\n";
  }
}

int cmd_compute(const RunConfig& cfg) {
  std::vector<long> ns = parse_n_spec(cfg.n_spec);
  std::vector<double> bs = parse_b_spec(cfg.b_spec);
  if (ns.empty() || bs.empty()) {
    std::cerr << "usage error: empty --n or --b list\n";
    return 1;
  }
  std::vector<Route> routes;
  for (const std::string& r : cfg.routes) {
    if (r == "all") {
      routes = {Route::ZeroSum, Route::XiDecomp, Route::Contour, Route::Arithmetic};
      break;
    }
    auto parsed = route_from_string(r);
    if (!parsed) {
      std::cerr << "usage error: unknown route '" << r << "'\n";
      return 1;
    }
    routes.push_back(*parsed);
  }
  for (double b : bs) {
    if (!(b > -0.5)) {
      std::cerr << "usage error: b = " << b << " violates b > -1/2\n";
      return 1;
    }
    for (Route r : routes)
      if (r != Route::ZeroSum && !(b > 0)) {
        std::cerr << "usage error: route " << to_string(r) << " requires b > 0 (got b = " << b
                  << "); only ZeroSum covers -1/2 < b <= 0\n";
        return 1;
      }
  }
  set_default_digits(cfg.precision);

  bool need_zeros = false, need_sieve = false;
  for (Route r : routes) {
    if (r == Route::ZeroSum) need_zeros = true;
    else need_sieve = true;
  }
  ZeroTable zeros;
  if (need_zeros) {
    if (cfg.zeros_path.empty() || !fs::exists(cfg.zeros_path)) {
      std::cerr << "data error: zero table '" << cfg.zeros_path << "' not found\n";
      return 2;
    }
    zeros = load_zeros(cfg.zeros_path, cfg.zeros_count);
  }
  VonMangoldtTable vm;
  if (need_sieve) vm = load_or_sieve(cfg);

  struct Cell {
    long n;
    double b;
    Route route;
  };
  std::vector<Cell> cells;
  for (long n : ns)
    for (double b : bs)
      for (Route r : routes) cells.push_back({n, b, r});

  std::vector<Row> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    set_working_digits(cfg.precision);
    size_t i;
    while ((i = next.fetch_add(1)) < cells.size()) {
      const Cell& c = cells[i];
      Row row{c.n, c.b, to_string(c.route), "", "", "", 0, 0, "ok"};
      auto t0 = std::chrono::steady_clock::now();
      try {
        Truncation tr;
        tr.sieve_limit = cfg.sieve_limit;
        tr.quad_tol = cfg.quad_tol;
        CoeffResult res;
        switch (c.route) {
          case Route::ZeroSum: res = k_sum_zeros(c.n, c.b, zeros); break;
          case Route::XiDecomp: res = d_xi_route_b(c.n, c.b, vm, tr); break;
          case Route::Contour: res = d_xi_route_c(c.n, c.b, vm, tr); break;
          case Route::Arithmetic: res = k_route_arithmetic(c.n, c.b, vm, tr); break;
        }
        row.value = res.value.str(out_digits(cfg));
        row.k_value = res.k_value.str(out_digits(cfg));
        row.err = res.err.str(out_digits(cfg));
        row.terms = res.terms_used;
        row.status = res.status;
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
      if (cfg.timings)
        row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      rows[i] = std::move(row);
    }
  };
  unsigned nthreads = std::min(2u, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (!cfg.out_path.empty()) {
    std::ofstream os(cfg.out_path);
    write_rows(cfg, rows, os);
  } else {
    write_rows(cfg, rows, std::cout);
  }
  return 0;
}

void push_report(ordered_json& arr, const std::string& suite, const BoundReport& r, long digits) {
  ordered_json j;
  j["suite"] = suite;
  j["case"] = r.name;
  ordered_json inputs;
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  j["lhs"] = r.lhs.str(digits);
  j["rhs"] = r.rhs.str(digits);
  j["slack"] = r.slack.str(digits);
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  arr.push_back(std::move(j));
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  set_default_digits(cfg.precision);
  ordered_json arr = ordered_json::array();
  long digits = out_digits(cfg);
  bool all_pass = true;
  bool inconclusive = false;

  auto add = [&](const BoundReport& r) {
    push_report(arr, suite, r, digits);
    all_pass = all_pass && r.pass;
  };

  auto need_zeros = [&]() -> ZeroTable {
    if (cfg.zeros_path.empty() || !fs::exists(cfg.zeros_path))
      throw parse_error("zero table '" + cfg.zeros_path + "' not found", 0);
    return load_zeros(cfg.zeros_path, cfg.zeros_count);
  };

  try {
    if (suite == "eq20") {
      for (double q : {0.3, 1.0 / 3.0, 0.45, 1.0, 2.0})
        for (long n : {1L, 2L, 5L, 10L, 20L}) add(laguerre_exp_identity(q, n));
    } else if (suite == "lemma2") {
      for (long n : {1L, 2L, 10L}) add(lemma2_core_check(n));
      for (long n : {10L, 100L, 1000L})
        for (double b : {0.0, 1.0, 5.0}) add(lemma2_sandwich(n, b));
      for (double b : {1.0, 5.0}) {
        BoundReport r = lemma2_sandwich(10000, b);
        // leading-term ratio in [0.9, 1.1]
        Real S = -trivial_zero_sum_inf(10000, b);
        Real ratio = S / (Real(2 * b + 1) / 2 * Real(10000) * log(Real(10000)));
        BoundReport rr;
        rr.name = "lemma2-leading-ratio";
        rr.inputs = {{"n", "10000"}, {"b", Real(b).str(4)}};
        rr.lhs = ratio;
        rr.rhs = Real(1);
        rr.slack = Real(0.1) - abs(ratio - Real(1));
        rr.pass = rr.slack >= Real(0);
        add(r);
        add(rr);
      }
    } else if (suite == "lemma3") {
      for (double b : {0.75, 1.0, 2.0})
        for (long n = 1; n <= 40; ++n) add(lemma3_bound(n, b));
    } else if (suite == "eq22") {
      ZeroTable zeros = need_zeros();
      VonMangoldtTable vm = load_or_sieve(cfg);
      Truncation tr;
      tr.sieve_limit = cfg.sieve_limit;
      for (long n : {1L, 2L, 4L})
        for (double b : {1.0, 2.0}) add(verify_eq22(n, b, zeros, vm, tr));
    } else if (suite == "theorem6") {
      ZeroTable zeros = need_zeros();
      for (double b : {0.0, 1.0}) {
        Theorem6Residual r200 = theorem6_residual(200, b, zeros);
        Theorem6Residual r800 = theorem6_residual(800, b, zeros);
        BoundReport r;
        r.name = "theorem6-residual";
        r.inputs = {{"b", Real(b).str(4)}, {"zeros", std::to_string(zeros.count())}};
        r.lhs = abs(r800.residual);
        r.rhs = abs(r200.residual);
        Real tail_frac = r800.tail_bound / abs(r800.k);
        bool data_ok = tail_frac < Real(0.01);
        if (!data_ok) {
          r.pass = false;
          r.slack = Real(0);
          r.note = "inconclusive: route-A tail bound " + r800.tail_bound.str(4) + " exceeds 1% of k";
          inconclusive = true;
        } else {
          r.slack = min(abs(r200.residual) - abs(r800.residual), Real(0.25) - abs(r800.residual));
          r.pass = r.slack >= Real(0);
          r.note = "r200=" + r200.residual.str(8) + " r800=" + r800.residual.str(8) +
                   " tail_frac=" + tail_frac.str(4);
        }
        add(r);
      }
    } else if (suite == "compensation") {
      ZeroTable zeros = need_zeros();
      VonMangoldtTable vm = load_or_sieve(cfg);
      for (long n : {10L, 30L, 100L})
        for (double b : {1.0, 4.0}) add(compensation_report(n, b, zeros, vm));
      // magnitude contrast at (30, 1)
      {
        BoundReport r;
        r.name = "compensation-magnitude";
        r.inputs = {{"n", "30"}, {"b", "1"}};
        Real pole = abs(d_pole_term(30, 1.0));
        CoeffResult dsh = d_shifted(30, 1.0, zeros, vm);
        r.lhs = pole;
        r.rhs = abs(dsh.value);
        r.pass = pole >= Real(1e8) && abs(dsh.value) <= Real(1e3);
        r.slack = pole - Real(1e8);
        r.note = "d_shifted=" + dsh.value.str(12);
        add(r);
      }
      Truncation tr;
      tr.sieve_limit = cfg.sieve_limit;
      for (long n = 1; n <= 6; ++n) {
        ShiftedPaths p = d_shifted_paths(n, 1.0, zeros, vm, tr);
        BoundReport r;
        r.name = "shifted-two-path";
        r.inputs = {{"n", std::to_string(n)}, {"b", "1"}};
        r.lhs = p.stable.value;
        r.rhs = p.unstable ? p.unstable->value : Real(0);
        r.pass = p.unstable && p.agree;
        r.slack = p.unstable ? (p.stable.err + p.unstable->err + Real("1e-9") - p.diff) : Real(-1);
        add(r);
      }
    } else if (suite == "positivity") {
      ZeroTable zeros = need_zeros();
      std::vector<double> grid{1, 2, 4, 8, 16, 32, 64};
      PositivityScan scan = positivity_scan(10, grid, zeros);
      BoundReport r;
      r.name = "theorem5-scan";
      r.inputs = {{"m_max", "10"}, {"b_max", "64"}};
      r.lhs = scan.rows.front().min_value;
      r.rhs = Real(0);
      bool all = true;
      for (const auto& row : scan.rows) all = all && row.all_positive;
      r.pass = all && scan.any_pass;
      r.slack = scan.rows.back().min_value;
      r.note = "smallest_passing_b=" + Real(scan.smallest_passing_b).str(4) +
               " dominance_ratio=" + scan.dominance_ratio.str(8) +
               " convergence_ratio=" + scan.convergence_ratio.str(8);
      add(r);
      BoundReport dom;
      dom.name = "theorem5-dominance";
      dom.inputs = {{"n", "10"}, {"b", "64"}};
      dom.lhs = scan.dominance_ratio;
      dom.rhs = Real(2);
      dom.slack = min(scan.dominance_ratio - Real(0.5), Real(2) - scan.dominance_ratio);
      dom.pass = dom.slack >= Real(0);
      add(dom);
    } else if (suite == "routes") {
      ZeroTable zeros = need_zeros();
      VonMangoldtTable vm = load_or_sieve(cfg);
      Truncation tr;
      tr.sieve_limit = cfg.sieve_limit;
      tr.quad_tol = cfg.quad_tol;
      for (long n = 1; n <= 6; ++n) {
        for (double b : {0.5, 1.0}) {
          CoeffResult a = k_sum_zeros(n, b, zeros);
          CoeffResult bb = d_xi_route_b(n, b, vm, tr);
          CoeffResult cc = d_xi_route_c(n, b, vm, tr);
          CoeffResult dd = k_route_arithmetic(n, b, vm, tr);
          const CoeffResult* rs[4] = {&a, &bb, &cc, &dd};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              BoundReport r;
              r.name = "route-" + to_string(rs[i]->request.route) + "-vs-" +
                       to_string(rs[j]->request.route);
              r.inputs = {{"n", std::to_string(n)}, {"b", Real(b).str(4)}};
              r.lhs = rs[i]->value;
              r.rhs = rs[j]->value;
              Real diff = abs(rs[i]->value - rs[j]->value);
              Real budget = min(rs[i]->err + rs[j]->err + Real("1e-9"), Real(1e-3));
              r.slack = budget - diff;
              r.pass = r.slack >= Real(0);
              add(r);
            }
        }
      }
    } else if (suite == "eq8a") {
      VonMangoldtTable vm = load_or_sieve(cfg);
      ZeroTable zeros = need_zeros();
      CoeffResult via_quad = d_shifted_contour(2, 1.0, 1.5, cfg.quad_tol, vm);
      CoeffResult stable = d_shifted(2, 1.0, zeros, vm);
      BoundReport r;
      r.name = "eq8a-vs-stable";
      r.inputs = {{"n", "2"}, {"b", "1"}, {"c", "1.5"}};
      r.lhs = via_quad.value;
      r.rhs = stable.value;
      r.slack = via_quad.err + stable.err + Real(cfg.quad_tol) - abs(via_quad.value - stable.value);
      r.pass = r.slack >= Real(0);
      add(r);
    } else {
      std::cerr << "usage error: unknown suite '" << suite << "'\n";
      return 1;
    }
  } catch (const parse_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  }

  std::string text = arr.dump(2) + "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream os(cfg.out_path);
    os << text;
  } else {
    std::cout << text;
  }
  if (inconclusive) return 3;
  return all_pass ? 0 : 3;
}

int cmd_zeros(const RunConfig& cfg, const std::string& action, const std::string& path) {
  if (action == "validate") {
    try {
      ZeroTable t = load_zeros(path, cfg.zeros_count > 0 ? cfg.zeros_count : 1000000, false);
      ZeroValidation v = validate_zeros(t);
      for (const auto& viol : v.violations)
        std::cerr << "violation at index " << viol.index << ": " << viol.what << "\n";
      std::cout << (v.pass ? "valid" : "invalid") << ": " << t.count()
                << " ordinates, t_max = " << Real(t.t_max()).str(12)
                << ", sha256 = " << t.source_digest << "\n";
      return v.pass ? 0 : 2;
    } catch (const parse_error& e) {
      std::cerr << "data error (line " << e.line_number << "): " << e.what() << "\n";
      return 2;
    }
  }
  if (action == "import") {
    if (cfg.cache_dir.empty()) {
      std::cerr << "usage error: zeros import requires --cache-dir\n";
      return 1;
    }
    try {
      std::string digest = sha256_file(path);
      fs::create_directories(cfg.cache_dir);
      fs::path dst = fs::path(cfg.cache_dir) / fs::path(path).filename();
      fs::path manifest = dst;
      manifest += ".manifest.json";
      if (fs::exists(manifest)) {
        auto m = read_zero_manifest(manifest);
        if (m && m->sha256 == digest) {
          std::cout << "already imported (identical digest), no-op\n";
          return 0;
        }
      }
      ZeroTable t = load_zeros(path, 10000000);  // validates while counting
      fs::copy_file(path, dst, fs::copy_options::overwrite_existing);
      ordered_json j;
      j["path"] = dst.filename().string();
      j["sha256"] = digest;
      j["count"] = t.count();
      std::ofstream os(manifest);
      os << j.dump(2) << "\n";
      std::cout << "imported " << t.count() << " ordinates, sha256 = " << digest << "\n";
      return 0;
    } catch (const parse_error& e) {
      std::cerr << "data error (line " << e.line_number << "): " << e.what() << "\n";
      return 2;
    }
  }
  std::cerr << "usage error: zeros action must be import|validate\n";
  return 1;
}

int cmd_sieve(const RunConfig& cfg) {
  if (cfg.cache_dir.empty()) {
    std::cerr << "usage error: sieve requires --cache-dir\n";
    return 1;
  }
  VonMangoldtTable t = sieve_von_mangoldt(cfg.sieve_limit);
  fs::create_directories(cfg.cache_dir);
  fs::path cache = fs::path(cfg.cache_dir) / ("sieve_" + std::to_string(cfg.sieve_limit) + ".gliv");
  write_sieve_cache(t, cache);
  std::cout << "sieved to " << cfg.sieve_limit << ": " << t.entries.size()
            << " prime powers, psi(M)/M = " << t.chebyshev_psi() / static_cast<double>(cfg.sieve_limit)
            << ", cache " << cache.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Li coefficient laboratory"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  // config file values load first so explicit flags override them
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        apply_config_file(cfg, argv[i + 1]);
      } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
    }
  }
  app.add_option("--config", config_path, "flat key = value config file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "working precision, decimal digits (default 60)");
    sub->add_option("--zeros", cfg.zeros_path, "zero-ordinate table path");
    sub->add_option("--zeros-count", cfg.zeros_count, "max ordinates to load (default 100000)");
    sub->add_option("--sieve-limit", cfg.sieve_limit, "prime/Lambda table limit (default 1e7)");
    sub->add_option("--tol", cfg.quad_tol, "quadrature tolerance (default 1e-9)");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory for sieve/zero data");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute coefficients per (n, b, route)");
  add_common(compute);
  compute->add_option("--n", cfg.n_spec, "n list/range, e.g. 1..6 or 1,2,5");
  compute->add_option("--b", cfg.b_spec, "b list, e.g. 0.5,1,2 (rationals like 1/3 accepted)");
  compute->add_option("--routes", cfg.routes,
                      "routes: all or comma list of ZeroSum,XiDecomp,Contour,Arithmetic")
      ->delimiter(',');
  compute->add_flag("--timings", cfg.timings,
                    "record wall_ms per cell (off by default: keeps reruns byte-identical)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite, emit JSON report");
  add_common(verify);
  std::string suite;
  verify->add_option("suite", suite,
                     "lemma2|lemma3|eq20|eq22|eq8a|theorem6|compensation|positivity|routes")
      ->required();

  CLI::App* zeros_cmd = app.add_subcommand("zeros", "import or validate a zero table");
  add_common(zeros_cmd);
  std::string action, zpath;
  zeros_cmd->add_option("action", action, "import|validate")->required();
  zeros_cmd->add_option("path", zpath, "table path")->required();

  CLI::App* sieve_cmd = app.add_subcommand("sieve", "build the Lambda table cache");
  add_common(sieve_cmd);

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (zeros_cmd->parsed()) return cmd_zeros(cfg, action, zpath);
    if (sieve_cmd->parsed()) return cmd_sieve(cfg);
  } catch (const resource_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
