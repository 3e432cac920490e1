// quasinv: exact computations with m-quasiinvariants and m-harmonic
// polynomials of dihedral groups.
//
// Exit codes: 0 = success / all checks pass, 1 = usage or input error,
// 2 = a mathematical check failed.

#include "quasinv/poly_io.hpp"
#include "quasinv/structure.hpp"
#include "quasinv/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace quasinv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

std::optional<std::string> read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path &path, const std::string &contents) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
  }
  fs::rename(tmp, path);
}

/// --cache-dir, overridden by QUASINV_CACHE when set.
std::optional<fs::path> effective_cache_dir(const std::string &flag_value) {
  if (const char *env = std::getenv("QUASINV_CACHE"); env && *env)
    return fs::path(env);
  if (!flag_value.empty()) return fs::path(flag_value);
  return std::nullopt;
}

std::string report_text_from_json(const ordered_json &j) {
  std::ostringstream out;
  out << "I2(" << j.at("N").get<int>() << "), m = " << j.at("m").get<int>() << "\n";
  bool all = true;
  for (const auto &c : j.at("checks")) {
    const bool pass = c.at("status").get<std::string>() == "pass";
    all = all && pass;
    out << "  " << (pass ? "✓" : "✗") << ' '
        << c.at("name").get<std::string>() << " (" << c.at("ms").get<long long>()
        << " ms)";
    if (!pass) out << "  [" << c.value("witness", std::string()) << ']';
    out << '\n';
  }
  out << (all ? "all checks passed" : "FAILURES PRESENT") << '\n';
  return out.str();
}

bool json_report_passes(const ordered_json &j) {
  for (const auto &c : j.at("checks"))
    if (c.at("status").get<std::string>() != "pass") return false;
  return true;
}

fs::path report_path(const fs::path &dir, const DihedralConfig &cfg) {
  return dir / ("verify_N" + std::to_string(cfg.N) + "_m" + std::to_string(cfg.m) +
                ".json");
}

/// Returns the report JSON string, via the cache when possible.
std::string verify_json(const DihedralConfig &cfg, const std::optional<fs::path> &cache) {
  if (cache) {
    if (const auto bytes = read_file(report_path(*cache, cfg))) {
      try {
        const auto parsed = ordered_json::parse(*bytes);
        if (parsed.value("version", std::string()) == std::string(kVersion))
          return *bytes;
      } catch (const ordered_json::parse_error &) {
        // stale or corrupt cache entry; recompute below
      }
    }
  }
  const VerifyReport report = run_full_verification(cfg);
  std::string out = report.to_json();
  if (cache) write_file_atomic(report_path(*cache, cfg), out);
  return out;
}

int cmd_verify(const DihedralConfig &cfg, const std::string &output,
               const std::optional<fs::path> &cache) {
  const std::string bytes = verify_json(cfg, cache);
  const auto parsed = ordered_json::parse(bytes);
  if (output == "json")
    std::cout << bytes << "\n";
  else
    std::cout << report_text_from_json(parsed);
  return json_report_passes(parsed) ? kExitOk : kExitMathFailure;
}

ordered_json graded_json(const DihedralConfig &cfg,
                         const std::vector<std::pair<int, std::vector<const BiPoly *>>> &by_degree,
                         int total) {
  ordered_json j;
  j["N"] = cfg.N;
  j["m"] = cfg.m;
  ordered_json comp = ordered_json::object();
  for (const auto &[d, polys] : by_degree) {
    ordered_json arr = ordered_json::array();
    for (const BiPoly *p : polys) arr.push_back(render_poly(*p));
    comp[std::to_string(d)] = std::move(arr);
  }
  j["components"] = std::move(comp);
  j["total_dim"] = total;
  return j;
}

int cmd_basis(const DihedralConfig &cfg, const std::string &kind,
              const std::string &output) {
  std::vector<std::pair<int, std::vector<const BiPoly *>>> by_degree;
  QuasiBasis qb{cfg, BiPoly(), {}, {}, BiPoly()};
  GradedBasis hs{cfg, {}, 0};
  int total = 0;
  if (kind == "quasi") {
    qb = build_quasi_basis(cfg);
    const auto gens = qb.ordered();
    const auto degs = qb.degrees();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (by_degree.empty() || by_degree.back().first != degs[i])
        by_degree.emplace_back(degs[i], std::vector<const BiPoly *>{});
      by_degree.back().second.push_back(gens[i]);
    }
    total = static_cast<int>(gens.size());
  } else {
    hs = harmonic_space(cfg);
    for (const auto &[d, comp] : hs.components) {
      by_degree.emplace_back(d, std::vector<const BiPoly *>{});
      for (const auto &p : comp) by_degree.back().second.push_back(&p);
    }
    total = hs.total_dim;
  }
  if (output == "json") {
    std::cout << graded_json(cfg, by_degree, total).dump() << "\n";
  } else {
    for (const auto &[d, polys] : by_degree)
      for (const BiPoly *p : polys)
        std::cout << "deg " << d << ": " << render_poly(*p) << "\n";
    std::cout << "total dimension " << total << "\n";
  }
  return kExitOk;
}

int cmd_poincare(const DihedralConfig &cfg, int max_degree, const std::string &output) {
  if (max_degree < 0) max_degree = 2 * cfg.top_degree() + 4;
  const auto closed = poincare_closed(cfg, max_degree);
  bool all_match = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  table << "  d  computed  closed  match\n";
  for (int d = 0; d <= max_degree; ++d) {
    const int computed = quasi_dim(cfg, d);
    const long expected = closed[static_cast<std::size_t>(d)];
    const bool match = computed == expected;
    all_match = all_match && match;
    ordered_json row;
    row["d"] = d;
    row["computed"] = computed;
    row["closed"] = expected;
    row["match"] = match;
    rows.push_back(std::move(row));
    table << "  " << d << "  " << computed << "  " << expected << "  "
          << (match ? "yes" : "NO") << "\n";
  }
  const auto h = harmonic_poincare(cfg);
  if (output == "json") {
    ordered_json j;
    j["N"] = cfg.N;
    j["m"] = cfg.m;
    j["max_degree"] = max_degree;
    j["rows"] = std::move(rows);
    j["harmonic_poincare"] = h;
    j["all_match"] = all_match;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "Poincare series of Q_m for I2(" << cfg.N << "), m = " << cfg.m
              << "\n"
              << table.str() << "P(H_m, t) coefficients:";
    for (int x : h) std::cout << ' ' << x;
    std::cout << "\n";
  }
  return all_match ? kExitOk : kExitMathFailure;
}

/// Points at the first violated moment condition of a non-quasiinvariant
/// symbol: (degree, residue, derivative order) plus the residual value.
std::string quasi_violation(const DihedralConfig &cfg, const BiPoly &q) {
  for (const auto &[d, comp] : q.homogeneous_parts()) {
    const RatMatrix m = quasi_condition_matrix(cfg, d);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1));
    for (const auto &[mono, c] : comp.terms())
      coeffs[static_cast<std::size_t>(mono.zb)] = c;
    const auto res = mat_vec(m, coeffs);
    for (int j = 0; j < cfg.N; ++j)
      for (int s = 1; s <= cfg.m; ++s) {
        const Rational &r = res[static_cast<std::size_t>(j * cfg.m + (s - 1))];
        if (!r.is_zero()) {
          std::ostringstream msg;
          msg << "moment condition violated at degree " << d << ", residue " << j
              << ", derivative order " << 2 * s - 1 << " (residual " << r.str()
              << ")";
          return msg.str();
        }
      }
  }
  return "not quasiinvariant";
}

int cmd_apply(const DihedralConfig &cfg, const std::string &input,
              const std::string &output) {
  const auto bytes = read_file(input);
  if (!bytes) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUsage;
  }
  std::string q_text;
  std::string p_text;
  const auto first = bytes->find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (*bytes)[first] == '{') {
    const auto j = ordered_json::parse(*bytes);
    q_text = j.at("q").get<std::string>();
    p_text = j.at("p").get<std::string>();
  } else {
    std::istringstream in(*bytes);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    if (lines.size() != 2) {
      std::cerr << "error: input must hold two polynomials (q then p)\n";
      return kExitUsage;
    }
    q_text = lines[0];
    p_text = lines[1];
  }
  const BiPoly q = parse_poly(q_text);
  const BiPoly p = parse_poly(p_text);
  if (!is_quasiinvariant(cfg, q)) {
    std::cerr << "error: q is not " << cfg.m << "-quasiinvariant: "
              << quasi_violation(cfg, q) << "\n";
    return kExitUsage;
  }
  // L_q by linearity over the homogeneous parts of q.
  LocalElement result(BiPoly(), 0, cfg.N);
  const LocalElement pe = LocalElement::from_poly(p, cfg.N);
  for (const auto &[d, comp] : q.homogeneous_parts())
    result = result + apply_integral(cfg, comp, pe);
  if (output == "json") {
    ordered_json j;
    j["numerator"] = render_poly(result.numerator());
    j["delta_power"] = result.delta_power();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "numerator = " << render_poly(result.numerator()) << "\n"
              << "delta_power = " << result.delta_power() << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const std::vector<int> &n_list, const std::vector<int> &m_list,
              const std::optional<fs::path> &cache, int jobs) {
  std::vector<DihedralConfig> cells;
  for (int n : n_list)
    for (int m : m_list)
      if ((2 * m + 1) * n <= 30) cells.emplace_back(n, m);
  std::vector<std::string> results(cells.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
        results[i] = verify_json(cells[i], cache);
    });
  for (auto &t : pool) t.join();

  bool all = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool pass = json_report_passes(ordered_json::parse(results[i]));
    all = all && pass;
    std::cout << "N=" << cells[i].N << " m=" << cells[i].m << ": "
              << (pass ? "pass" : "FAIL") << "\n";
  }
  return all ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact m-quasiinvariants and m-harmonic polynomials of dihedral groups"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int n = 0;
  int m = -1;
  std::string output = "text";
  std::string cache_flag;
  std::string kind;
  std::string input;
  int max_degree = -1;
  std::vector<int> n_list{2, 3, 4, 5, 6};
  std::vector<int> m_list{0, 1, 2};
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 4;

  const auto add_common = [&](CLI::App *cmd, bool need_cfg) {
    if (need_cfg) {
      cmd->add_option("--N", n, "number of mirror lines (>= 2)")->required();
      cmd->add_option("--m", m, "constant multiplicity (>= 0)")->required();
    }
    cmd->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto *verify = app.add_subcommand("verify", "run the full theorem suite");
  add_common(verify, true);
  verify->add_option("--cache-dir", cache_flag, "report cache directory");

  auto *basis = app.add_subcommand("basis", "print a module/space basis");
  add_common(basis, true);
  basis->add_option("--kind", kind, "quasi | harmonic")
      ->required()
      ->check(CLI::IsMember({"quasi", "harmonic"}));

  auto *poincare = app.add_subcommand("poincare", "graded dimensions vs the closed series");
  add_common(poincare, true);
  poincare->add_option("--max-degree", max_degree, "degree bound (default 2(2m+1)N+4)");

  auto *apply = app.add_subcommand("apply", "apply the integral L_q to p");
  add_common(apply, true);
  apply->add_option("--input", input, "file with q then p (two lines, or JSON)")
      ->required();

  auto *sweep = app.add_subcommand("sweep", "verify a grid of configurations");
  add_common(sweep, false);
  sweep->add_option("--N-list", n_list, "N values")->delimiter(',');
  sweep->add_option("--m-list", m_list, "m values")->delimiter(',');
  sweep->add_option("--cache-dir", cache_flag, "report cache directory");
  sweep->add_option("--jobs", jobs, "concurrent cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto cache = effective_cache_dir(cache_flag);
    if (app.got_subcommand(verify)) return cmd_verify(DihedralConfig(n, m), output, cache);
    if (app.got_subcommand(basis)) return cmd_basis(DihedralConfig(n, m), kind, output);
    if (app.got_subcommand(poincare))
      return cmd_poincare(DihedralConfig(n, m), max_degree, output);
    if (app.got_subcommand(apply)) return cmd_apply(DihedralConfig(n, m), input, output);
    if (app.got_subcommand(sweep)) return cmd_sweep(n_list, m_list, cache, jobs);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremViolation &e) {
    std::cerr << "mathematical failure: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
