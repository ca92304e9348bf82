#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tasep {

/// A TASEP state on n sites. Site k (1-based) is stored in bit k-1, so the
/// raw bit pattern doubles as the state index used by the Markov oracle.
class Configuration {
 public:
  static constexpr int kMaxSites = 62;

  Configuration() = default;
  Configuration(int sites, std::uint64_t bits);

  static Configuration empty(int sites) { return {sites, 0}; }
  static Configuration from_index(int sites, std::uint64_t index) { return {sites, index}; }

  /// Parses a '0'/'1' string, leftmost character = site 1.
  static Configuration parse(std::string_view text);

  int size() const { return sites_; }
  std::uint64_t index() const { return bits_; }

  bool filled(int site) const { return (bits_ >> (site - 1)) & 1U; }
  Configuration with(int site, bool filled) const;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  int sites_ = 0;
  std::uint64_t bits_ = 0;
};

/// All 2^n configurations ordered by state index.
std::vector<Configuration> all_configurations(int sites);

enum class Rate { Alpha, Beta, One };

/// A place where a transition can happen: particle entry at site 1, a hop
/// from site k to k+1, or particle exit at site n.
struct Bond {
  enum class Kind { Entry, Bulk, Exit };

  Kind kind = Kind::Entry;
  int site = 0;  // k for Bulk(k), 0 otherwise

  static Bond entry() { return {Kind::Entry, 0}; }
  static Bond bulk(int k) { return {Kind::Bulk, k}; }
  static Bond exit() { return {Kind::Exit, 0}; }

  Rate rate() const;
  std::string to_string() const;

  friend bool operator==(const Bond&, const Bond&) = default;
};

bool is_active(const Configuration& c, const Bond& bond);

/// Bonds active in `c`, left to right: Entry, Bulk(1..n-1), Exit.
std::vector<Bond> active_bonds(const Configuration& c);

/// Performs the transition carried by an active bond. Throws
/// std::invalid_argument if the bond is not active in `c`.
Configuration apply(const Configuration& c, const Bond& bond);

}  // namespace tasep
