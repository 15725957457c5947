#include "waring/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

// Letters a..f stand for alpha..zeta.
constexpr std::array<CatalogEntry, 15> kCatalog{{
    {"P_2_4_2", "a_x^2 b_x^2 [abu]^2", {2, 4, 2}},
    {"P_2_0_4", "[abu]^4", {2, 0, 4}},
    {"P_3_6_0", "a_x^2 b_x^2 c_x^2 [abc]^2", {3, 6, 0}},
    {"P_3_3_3", "a_x b_x c_x [abc] [abu] [acu] [bcu]", {3, 3, 3}},
    {"P_3_2_2", "c_x^2 [abc]^2 [abu]^2", {3, 2, 2}},
    {"P_3_0_0", "[abc]^4", {3, 0, 0}},
    {"P_3_0_6", "[abu]^2 [acu]^2 [bcu]^2", {3, 0, 6}},
    {"P_4_0_2", "[acd]^2 [bcd]^2 [abu]^2", {4, 0, 2}},
    {"P_4_1_3", "a_x [acd]^2 [bcu]^2 [abd] [bdu]", {4, 1, 3}},
    {"P_4_4_0", "a_x b_x c_x d_x [abc] [abd] [bcd] [acd]", {4, 4, 0}},
    {"P_4_2_4", "a_x b_x [acd] [bcd] [abu]^2 [cdu]^2", {4, 2, 4}},
    {"P_5_0_4_I", "[abc]^4 [deu]^4", {5, 0, 4}},
    {"P_5_0_4_II", "[abc]^2 [deu]^2 [ade]^2 [bcu]^2", {5, 0, 4}},
    {"P_5_2_0", "a_x b_x [abc]^2 [ade] [bde] [cde]^2", {5, 2, 0}},
    {"P_6_0_0", "[abc]^2 [def]^2 [aef]^2 [bcd]^2", {6, 0, 0}},
}};

const std::map<std::string_view, SymbolicExpression>& parsed() {
  static const std::map<std::string_view, SymbolicExpression> m = [] {
    std::map<std::string_view, SymbolicExpression> out;
    for (const auto& e : kCatalog) out.emplace(e.name, parse_symbolic(e.text));
    return out;
  }();
  return m;
}

constexpr std::string_view kCacheMagic = "waring-generic-cache";

} // namespace

std::span<const CatalogEntry> catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown concomitant '" + std::string(name) + "'");
}

const SymbolicExpression& catalog_expression(std::string_view name) {
  catalog_entry(name);
  return parsed().at(name);
}

std::string catalog_version() {
  // FNV-1a over the entry names and texts.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (const auto& e : kCatalog) {
    mix(e.name);
    mix(e.text);
  }
  std::ostringstream out;
  out << "v1-" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

const ConcomitantForm& GenericExpansionCache::get(std::string_view name) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = forms_.find(name); it != forms_.end()) return *it->second;
  }
  // Expand outside the lock; a concurrent duplicate expansion is discarded.
  auto form = std::make_shared<const ConcomitantForm>(umbral_evaluate(catalog_expression(name), GenericQuartic{}));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = forms_.try_emplace(std::string(name), std::move(form));
  return *it->second;
}

bool GenericExpansionCache::contains(std::string_view name) const {
  std::lock_guard lock(mutex_);
  return forms_.find(name) != forms_.end();
}

void GenericExpansionCache::fill() {
  for (const auto& e : kCatalog) get(e.name);
}

void GenericExpansionCache::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    std::lock_guard lock(mutex_);
    out << kCacheMagic << ' ' << catalog_version() << ' ' << forms_.size() << '\n';
    for (const auto& [name, form] : forms_) {
      out << name << ' ' << form->value.size() << '\n';
      for (const auto& t : form->value.terms()) {
        out << t.coef.get_str();
        for (std::size_t s = 0; s < kNumVariables; ++s)
          if (t.mono[s] != 0) out << ' ' << s << ':' << unsigned{t.mono[s]};
        out << '\n';
      }
    }
  }
  std::filesystem::rename(tmp, path);
}

bool GenericExpansionCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string magic, version;
  std::size_t count = 0;
  if (!(in >> magic >> version >> count) || magic != kCacheMagic) throw std::runtime_error("malformed cache header");
  if (version != catalog_version()) return false;

  std::map<std::string, std::shared_ptr<const ConcomitantForm>, std::less<>> loaded;
  std::string line;
  std::getline(in, line);
  for (std::size_t k = 0; k < count; ++k) {
    std::string name;
    std::size_t nterms = 0;
    if (!std::getline(in, line)) throw std::runtime_error("truncated cache file");
    std::istringstream head(line);
    if (!(head >> name >> nterms)) throw std::runtime_error("malformed cache entry header");
    const CatalogEntry& entry = catalog_entry(name);
    std::vector<Term> terms;
    terms.reserve(nterms);
    for (std::size_t i = 0; i < nterms; ++i) {
      if (!std::getline(in, line)) throw std::runtime_error("truncated cache entry " + name);
      std::istringstream row(line);
      std::string coef, field;
      row >> coef;
      Term t{Monomial{}, parse_rational(coef)};
      while (row >> field) {
        const auto colon = field.find(':');
        if (colon == std::string::npos) throw std::runtime_error("malformed cache term");
        t.mono.set(std::stoul(field.substr(0, colon)), static_cast<unsigned>(std::stoul(field.substr(colon + 1))));
      }
      terms.push_back(std::move(t));
    }
    loaded.emplace(name, std::make_shared<const ConcomitantForm>(
                             ConcomitantForm{Polynomial::from_terms(std::move(terms)), entry.signature, true}));
  }
  std::lock_guard lock(mutex_);
  for (auto& [name, form] : loaded) forms_.insert_or_assign(name, std::move(form));
  return true;
}

GenericExpansionCache& GenericExpansionCache::shared() {
  static GenericExpansionCache cache;
  return cache;
}

} // namespace waring
