#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tasep/bijection.hpp"
#include "tasep/json_io.hpp"
#include "tasep/markov.hpp"
#include "tasep/tableaux.hpp"
#include "tasep/weights.hpp"

namespace tasep::cli {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1'000'000;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string default_format() {
  const char* env = std::getenv("TASEP_FORMAT");
  return env != nullptr && *env != '\0' ? env : "text";
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw UsageError("unknown format '" + format + "' (expected text, json or csv)");
  }
}

void check_bound(int n, bool allow_large) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (!allow_large && (n + 1 > 33 || catalan(n + 1) > kEnumerationLimit)) {
    throw UsageError("n = " + std::to_string(n) + " enumerates more than 10^6 trees; pass --allow-large to force");
  }
}

RateParams rates_from(const std::string& alpha, const std::string& beta) {
  RateParams r{parse_rational(alpha), parse_rational(beta)};
  r.validate();
  return r;
}

std::string rates_label(const RateParams& r) { return to_string(r.alpha) + ":" + to_string(r.beta); }

Json report_json(const CheckReport& r) {
  return {{"name", r.name},
          {"passed", r.passed},
          {"checked", r.checked},
          {"detail", r.detail},
          {"counterexample", r.counterexample}};
}

// ---------------------------------------------------------------- checks

CheckReport check_counts(int n) {
  CheckReport r{.name = "counts"};
  const auto trees = enumerate_trees(n);
  std::set<std::string> seen;
  std::set<Configuration> image;
  for (const Tree& t : trees) {
    ++r.checked;
    const std::string s = t.serialize();
    if (!seen.insert(s).second) r.fail("duplicate tree " + s);
    if (Tree::parse(s) != t) r.fail("round trip fails for " + s);
    image.insert(reduce(t));
  }
  if (trees.size() != catalan(n + 1)) {
    r.fail("|T_" + std::to_string(n) + "| = " + std::to_string(trees.size()) + ", expected " +
           std::to_string(catalan(n + 1)));
  }
  if (image.size() != (std::size_t{1} << n)) r.fail("reduce is not surjective");
  r.detail = "|T_" + std::to_string(n) + "| = " + std::to_string(trees.size());
  if (n >= 1) {
    const auto marked = enumerate_marked(n);
    if (marked.size() != binomial(2 * n, n)) {
      r.fail("|T^_" + std::to_string(n) + "| = " + std::to_string(marked.size()) + ", expected " +
             std::to_string(binomial(2 * n, n)));
    }
    r.detail += ", |T^_" + std::to_string(n) + "| = " + std::to_string(marked.size());
  }
  return r;
}

CheckReport check_branching(int n) {
  CheckReport r{.name = "branching"};
  for (const Tree& t : enumerate_trees(n)) {
    ++r.checked;
    const auto lbvs = last_branching_vertices(t);
    if (lbvs.empty()) r.fail("no last branching vertex in " + t.serialize());
    if (n >= 1 && std::find(lbvs.begin(), lbvs.end(), 0) != lbvs.end()) r.fail("root is a LBV in " + t.serialize());
    std::vector<Bond> bonds;
    for (VertexId v : lbvs) bonds.push_back(bond_of_lbv(t, v));
    if (n >= 1 && bonds != active_bonds(reduce(t))) {
      r.fail("LBVs of " + t.serialize() + " do not match the active bonds of " + reduce(t).to_string());
    }
  }
  r.detail = "last branching vertices match active bonds on all " + std::to_string(r.checked) + " trees";
  return r;
}

CheckReport check_bijection(int n) {
  CheckReport r{.name = "bijection"};
  if (n < 1) {
    r.detail = "marked layer needs n >= 1";
    return r;
  }
  const auto marked = enumerate_marked(n);
  std::set<std::string> images;
  for (const MarkedTree& m : marked) {
    ++r.checked;
    const MarkedTree p = pi(m);
    images.insert(p.serialize());
    if (sigma(p) != m) r.fail("sigma(pi(T)) != T at " + m.serialize());
    if (pi(sigma(m)) != m) r.fail("pi(sigma(T)) != T at " + m.serialize());
    const Configuration from = reduce(forget(m));
    const Configuration to = reduce(forget(p));
    if (apply(from, m.bond()) != to) r.fail("pi step is not the marked bond's move at " + m.serialize());
  }
  if (images.size() != marked.size()) r.fail("pi is not injective");

  // Every tree of R^-1{C'} has exactly one mark realizing each transition C' -> C.
  std::map<std::string, std::vector<const MarkedTree*>> by_tree;
  for (const MarkedTree& m : marked) by_tree[forget(m).serialize()].push_back(&m);
  for (const auto& [key, marks] : by_tree) {
    const Configuration from = reduce(forget(*marks.front()));
    for (const Bond& b : active_bonds(from)) {
      const Configuration to = apply(from, b);
      const auto hits = std::count_if(marks.begin(), marks.end(),
                                      [&](const MarkedTree* m) { return reduce(forget(pi(*m))) == to; });
      if (hits != 1) r.fail("tree " + key + " has " + std::to_string(hits) + " marks realizing " + b.to_string());
    }
  }

  std::map<std::size_t, std::size_t> lengths;
  for (const Cycle& c : cycle_decomposition(n)) ++lengths[c.size()];
  std::string summary;
  for (const auto& [len, count] : lengths) {
    if (!summary.empty()) summary += ", ";
    summary += std::to_string(count) + (count == 1 ? " cycle" : " cycles") + " of length " + std::to_string(len);
  }
  r.detail = summary;
  return r;
}

CheckReport check_oracle(int n, const RateParams& rates, const StationaryWeights& weights) {
  CheckReport r{.name = "oracle " + rates_label(rates)};
  const StationaryDistribution exact = solve_stationary(build_generator(n, rates));
  const StationaryDistribution trees = weights.distribution(rates);
  for (std::size_t s = 0; s < exact.probability.size(); ++s) {
    ++r.checked;
    if (exact.probability[s] != trees.probability[s]) {
      r.fail("P(" + Configuration::from_index(n, s).to_string() + "): oracle " + to_string(exact.probability[s]) +
             ", trees " + to_string(trees.probability[s]));
    }
  }
  r.detail = "exact equality on " + std::to_string(r.checked) + " states";
  return r;
}

CheckReport check_tableaux(int n) {
  CheckReport r{.name = "tableaux"};
  const auto trees = enumerate_trees(n);
  std::map<std::string, std::size_t> image;
  std::map<Configuration, YoungDiagram> shape_of;
  for (const Tree& t : trees) {
    ++r.checked;
    const CatalanTableau tab = phi(t);
    const TableauReport v = validate_tableau(tab, n + 1);
    if (!v.valid) r.fail("phi(" + t.serialize() + ") invalid: " + v.violations.front());
    ++image[tab.to_string()];  // row lengths pin the shape
    int ones = 0;
    for (const auto& row : tab.fill) ones += static_cast<int>(std::count(row.begin(), row.end(), 1));
    if (ones != tab.shape.width() - 1) r.fail("wrong number of ones in phi(" + t.serialize() + ")");
    const auto [it, fresh] = shape_of.emplace(reduce(t), tab.shape);
    if (!fresh && it->second != tab.shape) r.fail("shape differs within the fibre of " + reduce(t).to_string());
    if (v.valid && phi_inverse(tab) != t) r.fail("phi_inverse(phi(T)) != T at " + t.serialize());
  }
  if (image.size() != trees.size()) r.fail("phi is not injective");
  const auto all = enumerate_catalan_tableaux(n + 1);
  if (all.size() != trees.size()) {
    r.fail(std::to_string(all.size()) + " tableaux of index " + std::to_string(n + 1) + ", expected " +
           std::to_string(trees.size()));
  }
  for (const CatalanTableau& tab : all) {
    if (phi(phi_inverse(tab)) != tab) r.fail("phi(phi_inverse(X)) != X at " + tab.to_string());
  }
  r.detail = std::to_string(image.size()) + " distinct valid tableaux of index " + std::to_string(n + 1);
  return r;
}

// --------------------------------------------------------------- commands

struct Options {
  int n = -1;
  bool marked = false;
  bool symbolic = false;
  bool allow_large = false;
  int decimals = -1;
  std::string format = default_format();
  std::string alpha = "1/1";
  std::string beta = "1/1";
  std::string checks = "all";
  std::string grid;
  std::string tree;
  std::uint64_t events = 1'000'000;
  std::int64_t burn_in = -1;
  std::uint64_t seed = 1;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_bound(o.n, o.allow_large);
  if (o.marked) {
    if (o.n < 1) throw UsageError("marked trees need --n >= 1");
    const auto marked = enumerate_marked(o.n);
    Json rows = Json::array();
    if (o.format == "csv") out << "tree,config,bond,l,r,l_hat,r_hat\n";
    for (const MarkedTree& m : marked) {
      const WeightMonomial w = mu(forget(m));
      const WeightMonomial h = mu_hat(m);
      const std::string config = reduce(forget(m)).to_string();
      if (o.format == "json") {
        rows.push_back({{"tree", m.serialize()},
                        {"config", config},
                        {"bond", m.bond().to_string()},
                        {"l", w.l},
                        {"r", w.r},
                        {"l_hat", h.l},
                        {"r_hat", h.r}});
      } else if (o.format == "csv") {
        out << m.serialize() << ',' << config << ',' << m.bond().to_string() << ',' << w.l << ',' << w.r << ','
            << h.l << ',' << h.r << '\n';
      } else {
        out << m.serialize() << ' ' << config << ' ' << m.bond().to_string() << " mu=" << w.to_string()
            << " mu_hat=" << h.to_string() << '\n';
      }
    }
    if (o.format == "json") out << rows.dump(2) << '\n';
    return kOk;
  }
  Json rows = Json::array();
  if (o.format == "csv") out << "tree,config,l,r\n";
  for (const Tree& t : enumerate_trees(o.n)) {
    const WeightMonomial w = mu(t);
    const std::string config = reduce(t).to_string();
    if (o.format == "json") {
      rows.push_back({{"tree", t.serialize()}, {"config", config}, {"l", w.l}, {"r", w.r}});
    } else if (o.format == "csv") {
      out << t.serialize() << ',' << config << ',' << w.l << ',' << w.r << '\n';
    } else {
      out << t.serialize() << ' ' << (config.empty() ? "-" : config) << " mu=" << w.to_string() << '\n';
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_stationary(const Options& o, std::ostream& out) {
  check_bound(o.n, o.allow_large);
  if (o.n < 1) throw UsageError("stationary needs --n >= 1");
  const StationaryWeights weights = stationary_weights(o.n);
  if (o.symbolic) {
    if (o.format == "json") {
      out << to_json(weights).dump(2) << '\n';
    } else if (o.format == "csv") {
      out << "config,weight\n";
      for (const auto& [c, w] : weights.weights) out << c.to_string() << ',' << w.to_string() << '\n';
      out << "Z," << weights.partition.to_string() << '\n';
    } else {
      for (const auto& [c, w] : weights.weights) out << c.to_string() << "  " << w.to_string() << '\n';
      out << "Z  " << weights.partition.to_string() << '\n';
    }
    return kOk;
  }
  const RateParams rates = rates_from(o.alpha, o.beta);
  const StationaryDistribution dist = weights.distribution(rates);
  const auto rho = density_profile(dist);
  if (o.format == "csv") {
    write_distribution_csv(out, dist, o.decimals);
    return kOk;
  }
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t s = 0; s < dist.probability.size(); ++s) {
      Json row = {{"config", Configuration::from_index(o.n, s).to_string()},
                  {"probability", to_string(dist.probability[s])}};
      if (o.decimals >= 0) row["decimal"] = to_decimal(dist.probability[s], o.decimals);
      rows.push_back(std::move(row));
    }
    out << Json{{"n", o.n},
                {"alpha", to_string(rates.alpha)},
                {"beta", to_string(rates.beta)},
                {"distribution", std::move(rows)},
                {"density", profile_to_json(rho)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  for (std::size_t s = 0; s < dist.probability.size(); ++s) {
    out << Configuration::from_index(o.n, s).to_string() << "  " << to_string(dist.probability[s]);
    if (o.decimals >= 0) out << "  " << to_decimal(dist.probability[s], o.decimals);
    out << '\n';
  }
  out << "density";
  for (const Rational& q : rho) out << "  " << to_string(q);
  out << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_bound(o.n, o.allow_large);
  std::vector<std::string> names;
  if (o.checks == "all") {
    names = kCheckNames;
  } else {
    std::stringstream ss(o.checks);
    for (std::string name; std::getline(ss, name, ',');) {
      if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
        throw UsageError("unknown check '" + name + "'");
      }
      names.push_back(name);
    }
  }
  const auto grid = o.grid.empty() ? default_grid() : parse_grid(o.grid);

  std::vector<CheckReport> reports;
  for (const std::string& name : names) {
    auto part = run_check(name, o.n, grid);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });

  if (o.format == "json") {
    Json rows = Json::array();
    for (const CheckReport& r : reports) rows.push_back(report_json(r));
    out << Json{{"n", o.n}, {"passed", passed}, {"checks", std::move(rows)}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "check,passed,checked,detail,counterexample\n";
    for (const CheckReport& r : reports) {
      out << r.name << ',' << (r.passed ? "true" : "false") << ',' << r.checked << ",\"" << r.detail << "\",\""
          << r.counterexample << "\"\n";
    }
  } else {
    for (const CheckReport& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " cases)";
      if (!r.detail.empty()) out << ": " << r.detail;
      if (!r.passed) out << "\n  counterexample: " << r.counterexample;
      out << '\n';
    }
    out << (passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return passed ? kOk : kVerificationFailed;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 20) throw UsageError("simulate needs 1 <= --n <= 20");
  const RateParams rates = rates_from(o.alpha, o.beta);
  if (o.events == 0) throw UsageError("--events must be positive");
  const std::uint64_t burn_in = o.burn_in < 0 ? o.events / 10 : static_cast<std::uint64_t>(o.burn_in);
  if (burn_in >= o.events) throw UsageError("--burn-in must be smaller than --events");

  const SimulationRun run = simulate(o.n, rates, o.events, burn_in, o.seed);
  const StationaryDistribution exact = solve_stationary(build_generator(o.n, rates));
  const auto empirical = run.empirical();
  const double tv = total_variation(exact, empirical);
  const int digits = o.decimals < 0 ? 6 : o.decimals;

  auto fixed = [digits](double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << x;
    return ss.str();
  };

  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t s = 0; s < empirical.size(); ++s) {
      rows.push_back({{"config", Configuration::from_index(o.n, s).to_string()},
                      {"exact", to_string(exact.probability[s])},
                      {"empirical", fixed(empirical[s])},
                      {"deviation", fixed(empirical[s] - exact.probability[s].get_d())}});
    }
    out << Json{{"n", o.n},
                {"alpha", to_string(rates.alpha)},
                {"beta", to_string(rates.beta)},
                {"events", o.events},
                {"burn_in", burn_in},
                {"seed", o.seed},
                {"states", std::move(rows)},
                {"tv", fixed(tv)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  if (o.format == "csv") out << "config,exact,empirical,deviation\n";
  for (std::size_t s = 0; s < empirical.size(); ++s) {
    const std::string sep = o.format == "csv" ? "," : "  ";
    out << Configuration::from_index(o.n, s).to_string() << sep << to_string(exact.probability[s]) << sep
        << fixed(empirical[s]) << sep << fixed(empirical[s] - exact.probability[s].get_d()) << '\n';
  }
  if (o.format != "csv") out << "tv " << fixed(tv) << '\n';
  return kOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  std::vector<Tree> trees;
  if (!o.tree.empty()) {
    try {
      trees.push_back(Tree::parse(o.tree));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (trees.front().site_count() < 0) throw UsageError("tree needs at least two endpoints");
  } else {
    if (o.n < 0) throw UsageError("tableaux needs --n or --tree");
    check_bound(o.n, o.allow_large);
    trees = enumerate_trees(o.n);
  }
  Json rows = Json::array();
  if (o.format == "csv") out << "tree,shape,fill,index,valid\n";
  std::size_t valid = 0;
  for (const Tree& t : trees) {
    const CatalanTableau tab = phi(t);
    const TableauReport report = validate_tableau(tab, t.site_count() + 1);
    valid += report.valid ? 1 : 0;
    std::string shape;
    for (int len : tab.shape.rows()) shape += (shape.empty() ? "" : " ") + std::to_string(len);
    if (o.format == "json") {
      Json row = to_json(tab);
      row["tree"] = t.serialize();
      row["valid"] = report.valid;
      rows.push_back(std::move(row));
    } else if (o.format == "csv") {
      out << t.serialize() << ',' << shape << ',' << tab.to_string() << ',' << tab.index() << ','
          << (report.valid ? "true" : "false") << '\n';
    } else {
      out << t.serialize() << "  shape (" << shape << ")  index " << tab.index() << "  "
          << (report.valid ? "valid" : "INVALID") << '\n'
          << tab.render();
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  if (o.format == "text" && o.tree.empty()) {
    out << trees.size() << " tableaux of index " << o.n + 1 << ", " << valid << " valid\n";
  }
  return valid == trees.size() ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<RateParams> default_grid() {
  const std::vector<std::string> values = {"1/1", "3/4", "1/2", "1/3", "1/10"};
  std::vector<RateParams> grid;
  for (const auto& a : values) {
    for (const auto& b : values) grid.push_back(rates_from(a, b));
  }
  return grid;
}

std::vector<RateParams> parse_grid(const std::string& text) {
  std::vector<RateParams> grid;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("grid entries must look like alpha:beta, got '" + item + "'");
    grid.push_back(rates_from(item.substr(0, colon), item.substr(colon + 1)));
  }
  if (grid.empty()) throw UsageError("empty grid");
  return grid;
}

std::vector<CheckReport> run_check(const std::string& name, int n, const std::vector<RateParams>& grid) {
  if (name == "counts") return {check_counts(n)};
  if (name == "branching") return {check_branching(n)};
  if (name == "bijection") return {check_bijection(n)};
  if (name == "tableaux") return {check_tableaux(n)};
  if (name == "marked-properties") {
    if (n < 1) return {};
    return {verify_marked_properties(n)};
  }
  if (name == "flux") {
    if (n < 1) return {};
    std::vector<CheckReport> out{verify_flux_counts(n)};
    const StationaryWeights weights = stationary_weights(n);
    for (const RateParams& rates : grid) {
      out.push_back(verify_flux_identities(weights, rates));
      out.back().name += " " + rates_label(rates);
      out.push_back(verify_flux_balance(weights, rates));
      out.back().name += " " + rates_label(rates);
    }
    return out;
  }
  if (name == "oracle") {
    if (n < 1) return {};
    std::vector<CheckReport> out;
    const StationaryWeights weights = stationary_weights(n);
    for (const RateParams& rates : grid) out.push_back(check_oracle(n, rates, weights));
    return out;
  }
  throw UsageError("unknown check '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane binary trees and the open-boundary TASEP stationary state", "tasep"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format: text, json or csv (default $TASEP_FORMAT or text)");
  };
  auto add_rates = [&o](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha, "Entry rate as p/q");
    cmd->add_option("--beta", o.beta, "Exit rate as p/q");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List trees (or marked trees) with their configuration and weight");
  enumerate->add_option("--n", o.n, "Number of sites")->required();
  enumerate->add_flag("--marked", o.marked, "List marked trees");
  enumerate->add_flag("--allow-large", o.allow_large, "Lift the 10^6 enumeration guard");
  add_format(enumerate);

  auto* stationary = app.add_subcommand("stationary", "Stationary weights or exact probabilities from trees");
  stationary->add_option("--n", o.n, "Number of sites")->required();
  stationary->add_flag("--symbolic", o.symbolic, "Print weight polynomials in a = 1/alpha, b = 1/beta");
  stationary->add_option("--decimals", o.decimals, "Also print decimals with this many places");
  stationary->add_flag("--allow-large", o.allow_large, "Lift the 10^6 enumeration guard");
  add_rates(stationary);
  add_format(stationary);

  auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
  verify->add_option("--n", o.n, "Number of sites")->required();
  verify->add_option("--checks", o.checks, "Comma-separated checks or 'all'");
  verify->add_option("--grid", o.grid, "Comma-separated alpha:beta pairs");
  verify->add_flag("--allow-large", o.allow_large, "Lift the 10^6 enumeration guard");
  add_format(verify);

  auto* simulate_cmd = app.add_subcommand("simulate", "Continuous-time simulation against the exact solution");
  simulate_cmd->add_option("--n", o.n, "Number of sites")->required();
  simulate_cmd->add_option("--events", o.events, "Number of transitions");
  simulate_cmd->add_option("--burn-in", o.burn_in, "Transitions discarded first (default 10% of events)");
  simulate_cmd->add_option("--seed", o.seed, "PRNG seed");
  simulate_cmd->add_option("--decimals", o.decimals, "Decimal places (default 6)");
  add_rates(simulate_cmd);
  add_format(simulate_cmd);

  auto* tableaux = app.add_subcommand("tableaux", "Catalan tableaux of trees");
  tableaux->add_option("--n", o.n, "Tabulate every tree with n sites");
  tableaux->add_option("--tree", o.tree, "A single tree, e.g. \"(L(LL))\"");
  tableaux->add_flag("--allow-large", o.allow_large, "Lift the 10^6 enumeration guard");
  add_format(tableaux);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    check_format(o.format);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (stationary->parsed()) return cmd_stationary(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out);
    if (tableaux->parsed()) return cmd_tableaux(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace tasep::cli
