#include "waring/apolarity.hpp"
#include "waring/catalog.hpp"
#include "waring/classifier.hpp"
#include "waring/degeneracy.hpp"
#include "waring/errors.hpp"
#include "waring/generators.hpp"
#include "waring/io.hpp"
#include "waring/verification.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace waring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;
constexpr int kExitInternal = 5;

struct CacheOptions {
  std::string path;
  bool rebuild = false;
  bool disabled = false;
};

struct InputOptions {
  std::string form;
  std::string file;
};

fs::path default_cache_path() {
  const std::string file = "generic-" + catalog_version() + ".cache";
  if (const char* p = std::getenv("WARING_CACHE_DIR"); p && *p) return fs::path(p) / file;
  if (const char* p = std::getenv("XDG_CACHE_HOME"); p && *p) return fs::path(p) / "waring" / file;
  if (const char* p = std::getenv("HOME"); p && *p) return fs::path(p) / ".cache" / "waring" / file;
  return fs::temp_directory_path() / "waring" / file;
}

GenericExpansionCache& prepared_cache(const CacheOptions& opts) {
  auto& cache = GenericExpansionCache::shared();
  if (opts.disabled) return cache;
  const fs::path path = opts.path.empty() ? default_cache_path() : fs::path(opts.path);
  bool loaded = false;
  if (!opts.rebuild) {
    try {
      loaded = cache.load(path);
    } catch (const std::runtime_error& e) {
      std::cerr << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    }
  }
  if (loaded) return cache;
  cache.fill();
  try {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    cache.save(path);
  } catch (const std::exception& e) {
    std::cerr << "warning: could not write cache " << path << ": " << e.what() << "\n";
  }
  return cache;
}

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TernaryQuartic read_input(const InputOptions& in) {
  if (!in.form.empty() && !in.file.empty()) throw std::invalid_argument("give either a form or --file, not both");
  if (in.file == "-") return parse_quartic(read_all(std::cin));
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::invalid_argument("cannot open " + in.file);
    return parse_quartic(read_all(f));
  }
  if (in.form.empty()) throw std::invalid_argument("no quartic given (pass it as an argument or with --file)");
  return parse_quartic(in.form);
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("form", in.form, "Quartic, e.g. \"x0^4 + 3/2*x1^2*x2^2\" or {\"(4,0,0)\": \"1\"}");
  cmd->add_option("--file", in.file, "Read the quartic from a file ('-' for stdin)");
}

void add_cache(CLI::App* cmd, CacheOptions& c) {
  cmd->add_option("--cache", c.path, "Generic-expansion cache file (default: $WARING_CACHE_DIR, $XDG_CACHE_HOME/waring or ~/.cache/waring)");
  cmd->add_flag("--rebuild-cache", c.rebuild, "Recompute the generic expansions and rewrite the cache file");
  cmd->add_flag("--no-cache", c.disabled, "Expand in memory without reading or writing a cache file");
}

double since_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_classify(const InputOptions& in, bool json) {
  const TernaryQuartic f = read_input(in);
  const auto t0 = std::chrono::steady_clock::now();
  const ClassificationReport r = classify(f);
  const double ms = since_ms(t0);
  if (json)
    std::cout << report_to_json(f, r, ms).dump(2) << "\n";
  else
    std::cout << report_to_table(f, r, ms);
  return kExitOk;
}

int cmd_eval(const std::string& name, const InputOptions& in, bool generic, const CacheOptions& cache_opts, bool json) {
  const auto& entry = catalog_entry(name);
  ConcomitantForm form;
  if (generic) {
    if (!in.form.empty() || !in.file.empty()) throw std::invalid_argument("--generic takes no quartic");
    form = prepared_cache(cache_opts).get(entry.name);
  } else {
    QuarticEvaluator eval(read_input(in));
    form = eval.entry(entry.name);
  }
  if (json) {
    std::cout << form_to_json(entry.name, form).dump(2) << "\n";
  } else {
    std::cout << entry.name << " " << entry.signature.to_string() << " = " << entry.text << "\n";
    std::cout << form.value.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_catalecticant(const InputOptions& in, int k, bool json) {
  const TernaryQuartic f = read_input(in);
  const CatalecticantMatrix c = catalecticant(f, k);
  const nlohmann::json doc = catalecticant_to_json(c);
  if (json) {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t width = 7;
  for (const auto& row : doc["matrix"])
    for (const auto& v : row) width = std::max(width, v.get<std::string>().size() + 1);
  std::cout << std::string(8, ' ');
  for (const auto& col : doc["cols"]) std::cout << std::setw(static_cast<int>(width)) << col.get<std::string>();
  std::cout << "\n";
  for (std::size_t r = 0; r < doc["matrix"].size(); ++r) {
    std::cout << std::setw(8) << std::left << doc["rows"][r].get<std::string>() << std::right;
    for (const auto& v : doc["matrix"][r]) std::cout << std::setw(static_cast<int>(width)) << v.get<std::string>();
    std::cout << "\n";
  }
  std::cout << "rank " << doc["rank"].get<std::size_t>() << "\n";
  if (doc.contains("det")) std::cout << "det " << doc["det"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_degree(int s, bool json) {
  if (s < 3 || s > 5) throw std::invalid_argument("degree: s must be 3, 4 or 5");
  const Integer d = degree_of_Ws(s);
  if (json)
    std::cout << nlohmann::json{{"s", s}, {"degree", d.get_str()}}.dump(2) << "\n";
  else
    std::cout << d.get_str() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, const CacheOptions& cache_opts, bool json) {
  std::vector<std::string_view> names;
  if (suite == "all") {
    for (auto n : suite_names()) names.push_back(n);
  } else {
    bool known = false;
    for (auto n : suite_names()) known = known || n == suite;
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  auto& cache = prepared_cache(cache_opts);
  bool all_passed = true;
  nlohmann::json doc = nlohmann::json::array();
  for (auto name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(name, cache);
    const double ms = since_ms(t0);
    all_passed = all_passed && r.passed();
    if (json) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"elapsed_ms", ms}, {"checks", checks}});
      continue;
    }
    for (const auto& c : r.checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " [" << static_cast<long>(ms) << " ms]\n";
  }
  if (json) std::cout << doc.dump(2) << "\n";
  return all_passed ? kExitOk : kExitVerify;
}

int cmd_gen(int s, std::uint64_t seed, int height, bool json) {
  const PowerSumSample sample = random_power_sum(s, seed, height);
  const nlohmann::json doc = power_sum_to_json(sample);
  if (json) {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << sample.form.to_string() << "\n";
  std::cout << doc["coefficients"].dump() << "\n";
  std::cout << "sum of " << s << " fourth powers:";
  for (const auto& l : sample.summands) std::cout << " (" << l.to_polynomial().to_string() << ")^4";
  std::cout << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border Waring rank of ternary quartics via concomitants.\n"
               "Exit codes: 0 success, 1 usage, 2 parse error, 3 domain error, 4 verification failure, 5 internal error."};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a JSON document instead of a table");

  InputOptions in;
  CacheOptions cache;

  auto* classify_cmd = app.add_subcommand("classify", "Border rank, vanishing lists and catalecticant ranks of a quartic");
  add_input(classify_cmd, in);
  classify_cmd->add_flag("--json", json, "Print a JSON document");

  std::string eval_name;
  bool generic = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a catalog concomitant (terms in descending exponent order of a, x, u)");
  eval_cmd->add_option("name", eval_name, "Catalog name, e.g. P_3_6_0")->required();
  add_input(eval_cmd, in);
  eval_cmd->add_flag("--generic", generic, "Evaluate at the generic quartic, in the variables aIJK");
  add_cache(eval_cmd, cache);
  eval_cmd->add_flag("--json", json, "Print a JSON document");

  int k = 2;
  auto* cat_cmd = app.add_subcommand("catalecticant", "Apolarity matrix alpha_k with its exact rank");
  add_input(cat_cmd, in);
  cat_cmd->add_option("-k", k, "Degree k in 0..4")->capture_default_str();
  cat_cmd->add_flag("--json", json, "Print a JSON document");

  int degree_s = 0;
  auto* degree_cmd = app.add_subcommand("degree", "Degree of W_s from the degeneracy-locus formula");
  degree_cmd->add_option("s", degree_s, "s in {3, 4, 5}")->required();
  degree_cmd->add_flag("--json", json, "Print a JSON document");

  std::string suite = "all";
  std::string suite_help = "Suite: all";
  for (auto n : suite_names()) suite_help += ", " + std::string(n);
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; exits 4 when a check fails");
  verify_cmd->add_option("suite", suite, suite_help)->capture_default_str();
  add_cache(verify_cmd, cache);
  verify_cmd->add_flag("--json", json, "Print a JSON document");

  int gen_s = 1;
  std::uint64_t gen_seed = 0;
  int height = kDefaultHeight;
  auto* gen_cmd = app.add_subcommand("gen", "Random sum of s fourth powers of integer linear forms");
  gen_cmd->add_option("-s", gen_s, "Number of summands, 1..6")->required();
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--height", height, "Coordinate bound")->capture_default_str();
  gen_cmd->add_flag("--json", json, "Print a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(in, json);
    if (*eval_cmd) return cmd_eval(eval_name, in, generic, cache, json);
    if (*cat_cmd) return cmd_catalecticant(in, k, json);
    if (*degree_cmd) return cmd_degree(degree_s, json);
    if (*verify_cmd) return cmd_verify(suite, cache, json);
    if (*gen_cmd) return cmd_gen(gen_s, gen_seed, height, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
