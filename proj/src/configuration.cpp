#include "tasep/configuration.hpp"

#include <stdexcept>

namespace tasep {

Configuration::Configuration(int sites, std::uint64_t bits) : sites_(sites), bits_(bits) {
  if (sites < 0 || sites > kMaxSites) {
    throw std::invalid_argument("configuration size out of range: " + std::to_string(sites));
  }
  if (sites < 64 && (bits >> sites) != 0) {
    throw std::invalid_argument("configuration bits exceed site count");
  }
}

Configuration Configuration::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxSites)) {
    throw std::invalid_argument("configuration too long");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("configuration must be a 0/1 string: " + std::string(text));
    }
  }
  return {static_cast<int>(text.size()), bits};
}

Configuration Configuration::with(int site, bool filled) const {
  const std::uint64_t bit = std::uint64_t{1} << (site - 1);
  return {sites_, filled ? (bits_ | bit) : (bits_ & ~bit)};
}

std::string Configuration::to_string() const {
  std::string out(static_cast<std::size_t>(sites_), '0');
  for (int k = 1; k <= sites_; ++k) {
    if (filled(k)) out[static_cast<std::size_t>(k - 1)] = '1';
  }
  return out;
}

std::vector<Configuration> all_configurations(int sites) {
  if (sites < 0 || sites > 30) throw std::invalid_argument("site count out of range for full listing");
  std::vector<Configuration> out;
  out.reserve(std::size_t{1} << sites);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << sites); ++i) out.emplace_back(sites, i);
  return out;
}

Rate Bond::rate() const {
  switch (kind) {
    case Kind::Entry: return Rate::Alpha;
    case Kind::Exit: return Rate::Beta;
    case Kind::Bulk: return Rate::One;
  }
  return Rate::One;
}

std::string Bond::to_string() const {
  switch (kind) {
    case Kind::Entry: return "entry";
    case Kind::Exit: return "exit";
    case Kind::Bulk: return "bulk(" + std::to_string(site) + ")";
  }
  return {};
}

bool is_active(const Configuration& c, const Bond& bond) {
  const int n = c.size();
  if (n == 0) return false;
  switch (bond.kind) {
    case Bond::Kind::Entry: return !c.filled(1);
    case Bond::Kind::Exit: return c.filled(n);
    case Bond::Kind::Bulk:
      return bond.site >= 1 && bond.site < n && c.filled(bond.site) && !c.filled(bond.site + 1);
  }
  return false;
}

std::vector<Bond> active_bonds(const Configuration& c) {
  std::vector<Bond> out;
  const int n = c.size();
  if (n == 0) return out;
  if (!c.filled(1)) out.push_back(Bond::entry());
  for (int k = 1; k < n; ++k) {
    if (c.filled(k) && !c.filled(k + 1)) out.push_back(Bond::bulk(k));
  }
  if (c.filled(n)) out.push_back(Bond::exit());
  return out;
}

Configuration apply(const Configuration& c, const Bond& bond) {
  if (!is_active(c, bond)) {
    throw std::invalid_argument("bond " + bond.to_string() + " is not active in " + c.to_string());
  }
  switch (bond.kind) {
    case Bond::Kind::Entry: return c.with(1, true);
    case Bond::Kind::Exit: return c.with(c.size(), false);
    case Bond::Kind::Bulk: return c.with(bond.site, false).with(bond.site + 1, true);
  }
  return c;
}

}  // namespace tasep
