#include "psisum/catalog.hpp"

#include <algorithm>
#include <fstream>

#include "psisum/families.hpp"

namespace psisum {

namespace {

CatalogEntry make_entry(CayleyTable table) {
  Group g = to_group(table);
  CatalogEntry e{std::move(table), g, psi(g), order_profile(g), is_cyclic(g), is_abelian(g), std::nullopt, {}};
  return e;
}

}  // namespace

std::vector<CatalogEntry> describe_classes(std::uint64_t n, std::vector<CayleyTable> tables) {
  std::vector<CatalogEntry> entries;
  entries.reserve(tables.size());
  for (auto& t : tables) entries.push_back(make_entry(std::move(t)));

  std::size_t unnamed = entries.size();
  for (const auto& spec : family_specs(n)) {
    if (unnamed == 0) break;
    const Group g = build_group(spec);
    const auto profile = order_profile(g);
    std::optional<CanonicalForm> form;
    for (auto& e : entries) {
      if (e.spec || e.profile != profile) continue;
      if (!form) form = canonical_form(g);
      if (form->table == e.table) {
        e.spec = spec;
        e.name = to_string(spec);
        --unnamed;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].spec) entries[i].name = "#" + std::to_string(n) + "." + std::to_string(i + 1);
  return entries;
}

std::vector<SpectrumEntry> psi_spectrum(const std::vector<CatalogEntry>& entries) {
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries) {
    if (out.empty() || out.back().psi != e.psi) out.push_back({e.psi, 0, {}});
    ++out.back().count;
    out.back().witnesses.push_back(e.name);
  }
  return out;
}

std::vector<SpectrumEntry> psi_spectrum(std::uint64_t n, const EnumerationOptions& options) {
  return psi_spectrum(describe_classes(n, all_groups(n, options)));
}

Catalog::Catalog(EnumerationOptions options, std::optional<std::filesystem::path> cache_dir)
    : options_(std::move(options)), cache_dir_(std::move(cache_dir)) {
  if (options_.bound > kEnumerationHardCap)
    throw BoundExceeded("enumeration bound " + std::to_string(options_.bound) + " exceeds the hard cap of " +
                        std::to_string(kEnumerationHardCap));
}

std::filesystem::path Catalog::cache_file(std::uint64_t n) const {
  if (!cache_dir_) return {};
  return *cache_dir_ / "catalog" / ("n=" + std::to_string(n) + ".json");
}

const std::vector<CatalogEntry>& Catalog::groups(std::uint64_t n) {
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find(n); it != memo_.end()) return *it->second;
  check_enumeration_order(n, options_);
  auto entries = build(n);
  auto [it, inserted] = memo_.emplace(n, std::make_unique<const std::vector<CatalogEntry>>(std::move(entries)));
  return *it->second;
}

std::vector<CatalogEntry> Catalog::build(std::uint64_t n) {
  if (cache_dir_) {
    if (auto cached = load(n)) return std::move(*cached);
  }
  auto quiet = options_;
  quiet.warn = [](const std::string&) {};  // already warned in groups()
  auto entries = describe_classes(n, all_groups(n, quiet));
  if (cache_dir_) store(n, entries);
  return entries;
}

std::size_t Catalog::find_class(const Group& g) {
  const auto& entries = groups(g.order());
  const auto profile = order_profile(g);
  std::optional<CanonicalForm> form;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].profile != profile) continue;
    if (!form) form = canonical_form(g);
    if (form->table == entries[i].table) return i;
  }
  throw std::logic_error("group of order " + std::to_string(g.order()) + " matches no catalog class");
}

std::vector<SpectrumEntry> Catalog::psi_spectrum(std::uint64_t n) { return psisum::psi_spectrum(groups(n)); }

nlohmann::json profile_to_json(const OrderProfile& profile) {
  auto out = nlohmann::json::array();
  for (const auto& [order, count] : profile) out.push_back({order, count});
  return out;
}

nlohmann::json catalog_to_json(std::uint64_t n, const std::vector<CatalogEntry>& entries) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& e : entries) {
    classes.push_back({{"name", e.name},
                       {"psi", e.psi},
                       {"cyclic", e.cyclic},
                       {"abelian", e.abelian},
                       {"order_profile", profile_to_json(e.profile)},
                       {"table", e.table.rows()}});
  }
  return {{"schema", 1}, {"generator_version", kGeneratorVersion}, {"n", n}, {"classes", classes}};
}

std::optional<std::vector<CatalogEntry>> Catalog::load(std::uint64_t n) const {
  const auto path = cache_file(n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema") != 1 || j.at("generator_version") != kGeneratorVersion || j.at("n") != n) return std::nullopt;
    std::vector<CayleyTable> tables;
    for (const auto& c : j.at("classes")) {
      auto t = CayleyTable::from_rows(c.at("table").get<std::vector<std::vector<std::uint32_t>>>());
      if (t.order() != n || !is_canonical(t)) return std::nullopt;
      tables.push_back(std::move(t));
    }
    auto entries = describe_classes(n, std::move(tables));
    const auto& stored = j.at("classes");
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (stored[i].at("psi") != entries[i].psi) return std::nullopt;
    return entries;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or invalid: rebuild
  }
}

void Catalog::store(std::uint64_t n, const std::vector<CatalogEntry>& entries) const {
  const auto path = cache_file(n);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw CacheError("cannot create cache directory '" + path.parent_path().string() + "': " + ec.message());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file '" + tmp + "'");
    out << catalog_to_json(n, entries).dump(1) << '\n';
    if (!out) throw CacheError("cannot write cache file '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot write cache file '" + path.string() + "': " + ec.message());
}

}  // namespace psisum
