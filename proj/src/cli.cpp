#include "nomials/cli.hpp"

#include "nomials/approx.hpp"
#include "nomials/boltzmann.hpp"
#include "nomials/markov.hpp"
#include "nomials/multivariate.hpp"
#include "nomials/nomial.hpp"
#include "nomials/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace nomials::cli {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::ostream& out;
  std::string command;
  std::string format = "kets";
  std::uint64_t budget = kDefaultBudget;
};

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json exact_rational(const Rational& q) {
  return {{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}};
}

json approx_number(double x) {
  if (std::isfinite(x)) return x;
  return decimal(x);
}

void emit_json(Context& ctx, json exact, json approximate = nullptr) {
  json env = {{"schema", "nomials/1"}, {"command", ctx.command}, {"format", "json"}, {"exact", std::move(exact)}};
  if (!approximate.is_null()) env["approximate"] = std::move(approximate);
  ctx.out << env.dump(2) << "\n";
}

template <class T, class Fmt>
json dist_json(const Dist<T>& d, Fmt&& fmt) {
  json entries = json::array();
  for (const auto& [x, w] : d) {
    json e = exact_rational(w);
    e["element"] = fmt(x);
    e["probability_approx"] = to_double(w);
    entries.push_back(std::move(e));
  }
  return entries;
}

template <class T, class Fmt>
void emit_dist(Context& ctx, const Dist<T>& d, Fmt&& fmt, const std::string& kets) {
  if (ctx.format == "json") {
    emit_json(ctx, {{"distribution", dist_json(d, fmt)}});
  } else if (ctx.format == "csv") {
    ctx.out << "element,probability,numerator,denominator\n";
    for (const auto& [x, w] : d) {
      ctx.out << csv_field(fmt(x)) << "," << decimal(to_double(w)) << "," << w.get_num().get_str() << ","
              << w.get_den().get_str() << "\n";
    }
  } else {
    ctx.out << kets << "\n";
  }
}

template <class T>
void emit_dist(Context& ctx, const Dist<T>& d) {
  emit_dist(ctx, d, [](const T& x) { return format_element(x); }, to_kets(d));
}

void emit_natural(Context& ctx, const std::string& key, const Natural& value, json params) {
  if (ctx.format == "json") {
    params[key] = value.get_str();
    emit_json(ctx, std::move(params));
  } else {
    ctx.out << value.get_str() << "\n";
  }
}

void write_check_lines(Context& ctx, const std::vector<CheckResult>& results) {
  if (ctx.format == "json") {
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
    }
    emit_json(ctx, {{"checks", arr}, {"passed", all}});
    return;
  }
  if (ctx.format == "csv") ctx.out << "name,passed,detail\n";
  for (const auto& r : results) {
    if (ctx.format == "csv") {
      ctx.out << r.name << "," << (r.passed ? "true" : "false") << "," << csv_field(r.detail) << "\n";
    } else {
      ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    }
  }
}

int check_exit(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return kFailed;
  }
  return kOk;
}

// Three numbers given either positionally or through named flags.
struct Triple {
  std::vector<std::uint64_t> positional;
  std::optional<std::uint64_t> a, b, c;

  std::array<std::uint64_t, 3> get(const char* names) const {
    if (!positional.empty()) {
      if (positional.size() != 3 || a || b || c) throw UsageError(std::string("expected exactly ") + names);
      return {positional[0], positional[1], positional[2]};
    }
    if (!a || !b || !c) throw UsageError(std::string("missing ") + names);
    return {*a, *b, *c};
  }
};

void add_triple(CLI::App* sub, Triple& t, const std::string& first, const std::string& second,
                const std::string& third) {
  sub->add_option("values", t.positional, "Positional form of the three parameters")->expected(0, 3);
  sub->add_option(first, t.a);
  sub->add_option(second, t.b);
  sub->add_option(third, t.c);
}

EnergyConfig config_from(const Triple& t) {
  const auto [n, k, i] = t.get("--levels, --particles and --sum");
  return EnergyConfig::make(n, k, i);
}

// nomial ----------------------------------------------------------------------

struct NomialArgs {
  Triple value;
  std::string route = "auto";
  std::vector<std::uint64_t> table_pos;
  std::optional<std::uint64_t> table_levels, table_max;
  std::vector<std::uint64_t> check_pos;
  std::optional<std::uint64_t> check_levels, check_length;
};

std::pair<std::uint64_t, std::uint64_t> pair_from(const std::vector<std::uint64_t>& pos,
                                                  const std::optional<std::uint64_t>& a,
                                                  const std::optional<std::uint64_t>& b, const char* names) {
  if (!pos.empty()) {
    if (pos.size() != 2 || a || b) throw UsageError(std::string("expected exactly ") + names);
    return {pos[0], pos[1]};
  }
  if (!a || !b) throw UsageError(std::string("missing ") + names);
  return {*a, *b};
}

int nomial_value(Context& ctx, const NomialArgs& a) {
  const auto [n, k, i] = a.value.get("--levels, --length and --sum");
  const auto p = NomialParams::make(n, k, i);
  Natural v;
  if (a.route == "auto") v = nomial(p);
  else if (a.route == "enumerate") v = nomial_enum_sequences(p, ctx.budget);
  else if (a.route == "multisets") v = nomial_via_multisets(p);
  else if (a.route == "recursive") v = nomial_recursive(p);
  else v = nomial_closed_form(p);
  emit_natural(ctx, "value", v, {{"levels", n}, {"length", k}, {"sum", i}, {"route", a.route}});
  return kOk;
}

int nomial_table(Context& ctx, const NomialArgs& a) {
  const auto [n, kmax] = pair_from(a.table_pos, a.table_levels, a.table_max, "--levels and --max-length");
  const NomialTable table(n, kmax);
  if (ctx.format == "json") {
    json rows = json::array();
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      json row = json::array();
      for (const auto& x : table.row(k)) row.push_back(x.get_str());
      rows.push_back(std::move(row));
    }
    emit_json(ctx, {{"levels", n}, {"rows", rows}});
    return kOk;
  }
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    const auto& row = table.row(k);
    for (std::size_t i = 0; i < row.size(); ++i) ctx.out << (i ? "," : "") << row[i].get_str();
    ctx.out << "\n";
  }
  return kOk;
}

int nomial_check(Context& ctx, const NomialArgs& a) {
  const auto [n, k] = pair_from(a.check_pos, a.check_levels, a.check_length, "--levels and --length");
  if (n == 0) throw UsageError("--levels must be >= 1");
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, detail});
  };
  const NomialTable table(n, k);
  const auto& row = table.row(k);

  bool routes = true;
  std::string where;
  for (std::uint64_t i = 0; i < row.size(); ++i) {
    const NomialParams p{n, k, i};
    bool ok = nomial_via_multisets(p) == row[i] && nomial_recursive(p) == row[i];
    if (power(n, k) <= Natural(ctx.budget)) ok = ok && nomial_enum_sequences(p, ctx.budget) == row[i];
    if (i < n && k >= 1) ok = ok && nomial_closed_form(p) == row[i];
    if (!ok && routes) where = "i=" + std::to_string(i);
    routes = routes && ok;
  }
  add("routes", routes, routes ? std::to_string(row.size()) + " values" : where);

  Natural total = 0;
  for (const auto& x : row) total += x;
  add("row_sum", total == power(n, k), total.get_str());

  bool palindrome = std::equal(row.begin(), row.end(), row.rbegin());
  add("palindrome", palindrome, "");
  add("polynomial_expansion", polynomial_expand(n, k) == row, "");
  if (k >= 1) {
    bool prefix = true;
    for (std::uint64_t m = 0; m <= n; ++m) {
      try {
        nomial_prefix_sum(n, k, m);
      } catch (const std::logic_error&) {
        prefix = false;
      }
    }
    add("prefix_sum", prefix, "");
  }
  write_check_lines(ctx, results);
  return check_exit(results);
}

// boltzmann -------------------------------------------------------------------

struct BoltzmannArgs {
  Triple multisets, numbers;
  std::string numbers_route = "nomial";
  std::uint64_t energy = 0, particles = 0;
  bool scaled = false;
  std::string plot_data;
};

void write_plot_rows(std::ostream& os, const std::vector<std::pair<std::size_t, Rational>>& rows) {
  os << "index,probability,numerator,denominator\n";
  for (const auto& [j, w] : rows) {
    os << j << "," << decimal(to_double(w)) << "," << w.get_num().get_str() << "," << w.get_den().get_str() << "\n";
  }
}

void write_plot_file(const std::filesystem::path& path, const std::vector<std::pair<std::size_t, Rational>>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_plot_rows(f, rows);
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

int boltzmann_multisets_cmd(Context& ctx, const BoltzmannArgs& a) {
  const auto d = boltzmann_on_multisets(config_from(a.multisets));
  if (!a.plot_data.empty()) {
    std::vector<std::pair<std::size_t, Rational>> rows;
    for (const auto& [phi, w] : d) rows.emplace_back(rows.size(), w);
    write_plot_file(a.plot_data, rows);
  }
  emit_dist(ctx, d);
  return kOk;
}

int boltzmann_numbers_cmd(Context& ctx, const BoltzmannArgs& a) {
  const auto c = config_from(a.numbers);
  Dist<Level> d = a.numbers_route == "flrn"          ? boltzmann_on_numbers_via_flrn(c)
                  : a.numbers_route == "microstates" ? projection_marginal(microstate_uniform(c, ctx.budget), 0)
                                                     : boltzmann_on_numbers(c);
  if (!a.plot_data.empty()) export_plot_data(d, a.plot_data);
  emit_dist(ctx, d);
  return kOk;
}

int boltzmann_energy_cmd(Context& ctx, const BoltzmannArgs& a) {
  const auto d = boltzmann_on_energy(a.energy, a.particles);
  if (!a.plot_data.empty()) export_plot_data(d, a.plot_data);
  if (!a.scaled) {
    emit_dist(ctx, d);
    return kOk;
  }
  // K times each weight: the unnormalised values plotted against e^{-j/mu}.
  const auto values = scaled_unnormalized_exact(a.energy, a.particles);
  if (ctx.format == "json") {
    json exact = json::array();
    json approx = json::array();
    for (const auto& v : values) {
      exact.push_back(exact_rational(v));
      approx.push_back(to_double(v));
    }
    emit_json(ctx, {{"scaled", exact}}, {{"scaled", approx}});
  } else if (ctx.format == "csv") {
    ctx.out << "index,scaled,numerator,denominator\n";
    for (std::size_t j = 0; j < values.size(); ++j) {
      ctx.out << j << "," << decimal(to_double(values[j])) << "," << values[j].get_num().get_str() << ","
              << values[j].get_den().get_str() << "\n";
    }
  } else {
    std::string line;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (!line.empty()) line += " + ";
      line += to_string(values[j]) + "|" + std::to_string(j) + ">";
    }
    ctx.out << line << "\n";
  }
  return kOk;
}

// markov ----------------------------------------------------------------------

struct MarkovArgs {
  Triple stationarity, iterate, matrix, sample;
  std::string chain = "both";
  std::string iterate_chain = "multisets";
  std::string start;
  std::uint64_t steps = 10;
  std::uint64_t seed = 1;
};

int markov_stationarity(Context& ctx, const MarkovArgs& a) {
  const auto c = config_from(a.stationarity);
  json exact = json::object();
  bool ok = true;
  auto report = [&](const std::string& name, const Rational& residual) {
    ok = ok && sgn(residual) == 0;
    if (ctx.format == "json") {
      exact[name] = exact_rational(residual);
    } else if (ctx.format == "csv") {
      ctx.out << name << "," << residual.get_num().get_str() << "," << residual.get_den().get_str() << "\n";
    } else {
      ctx.out << name << " residual " << to_string(residual) << "\n";
    }
  };
  if (ctx.format == "csv") ctx.out << "chain,numerator,denominator\n";
  if (a.chain == "multisets" || a.chain == "both") {
    report("multisets", stationarity_residual(boltzmann_on_multisets(c), shift_channel(c)));
  }
  if (a.chain == "numbers" || a.chain == "both") {
    report("numbers", stationarity_residual(boltzmann_on_numbers(c), shift_on_numbers(c)));
  }
  if (ctx.format == "json") {
    exact["stationary"] = ok;
    emit_json(ctx, exact);
  }
  return ok ? kOk : kFailed;
}

void emit_chain(Context& ctx, const std::vector<ChainStep>& steps) {
  if (ctx.format == "json") {
    json exact = json::array();
    json approx = json::array();
    for (const auto& s : steps) {
      json e = exact_rational(s.tv_distance);
      e["step"] = s.step;
      exact.push_back(std::move(e));
      approx.push_back(to_double(s.tv_distance));
    }
    emit_json(ctx, {{"tv_distance", exact}}, {{"tv_distance", approx}});
    return;
  }
  ctx.out << "step,tv_distance,numerator,denominator\n";
  for (const auto& s : steps) {
    ctx.out << s.step << "," << decimal(to_double(s.tv_distance)) << "," << s.tv_distance.get_num().get_str() << ","
            << s.tv_distance.get_den().get_str() << "\n";
  }
}

Multiset parse_state(const EnergyConfig& c, const std::string& text) {
  return parse_multiset(text, GroundSet::levels(c.levels));
}

int markov_iterate(Context& ctx, const MarkovArgs& a) {
  const auto c = config_from(a.iterate);
  if (a.iterate_chain == "numbers") {
    const auto reference = boltzmann_on_numbers(c);
    Dist<Level> start = a.start.empty() ? point(reference.support().front())
                        : a.start.find('|') == std::string::npos
                            ? point(static_cast<Level>(std::stoull(a.start)))
                            : parse_level_dist(a.start);
    emit_chain(ctx, iterate_chain(start, shift_on_numbers(c), a.steps, reference));
    return kOk;
  }
  const ShiftSpace space(c);
  const Multiset first = a.start.empty() ? space.states().front() : parse_state(c, a.start);
  if (!space.contains(first)) throw std::invalid_argument(to_ket(first) + " is not a state of this chain");
  emit_chain(ctx, iterate_chain(point(first), shift_channel(c), a.steps, boltzmann_on_multisets(c)));
  return kOk;
}

int markov_matrix(Context& ctx, const MarkovArgs& a) {
  const ShiftSpace space(config_from(a.matrix));
  const auto m = transition_matrix(space);
  const auto& states = space.states();
  if (ctx.format == "json") {
    json st = json::array();
    for (const auto& s : states) st.push_back(to_ket(s));
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& q : row) r.push_back(exact_rational(q));
      rows.push_back(std::move(r));
    }
    emit_json(ctx, {{"states", st}, {"matrix", rows}});
  } else if (ctx.format == "csv") {
    ctx.out << "from,to,probability,numerator,denominator\n";
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t s = 0; s < m.size(); ++s) {
        if (sgn(m[r][s]) == 0) continue;
        ctx.out << csv_field(to_ket(states[r])) << "," << csv_field(to_ket(states[s])) << ","
                << decimal(to_double(m[r][s])) << "," << m[r][s].get_num().get_str() << ","
                << m[r][s].get_den().get_str() << "\n";
      }
    }
  } else {
    for (std::size_t r = 0; r < states.size(); ++r) ctx.out << r << ": " << to_ket(states[r]) << "\n";
    for (const auto& row : m) {
      for (std::size_t s = 0; s < row.size(); ++s) ctx.out << (s ? " " : "") << to_string(row[s]);
      ctx.out << "\n";
    }
  }
  return kOk;
}

int markov_sample(Context& ctx, const MarkovArgs& a) {
  const auto c = config_from(a.sample);
  const ShiftSpace space(c);
  const Multiset first = a.start.empty() ? space.states().front() : parse_state(c, a.start);
  const auto path = sample_trajectory(c, first, a.steps, a.seed);
  if (ctx.format == "json") {
    json arr = json::array();
    for (const auto& phi : path) arr.push_back(to_ket(phi));
    emit_json(ctx, {{"seed", a.seed}, {"trajectory", arr}});
    return kOk;
  }
  if (ctx.format == "csv") ctx.out << "step,state\n";
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (ctx.format == "csv") ctx.out << k << "," << csv_field(to_ket(path[k])) << "\n";
    else ctx.out << k << " " << to_ket(path[k]) << "\n";
  }
  return kOk;
}

// approx ----------------------------------------------------------------------

struct ApproxArgs {
  std::uint64_t energy = 0, particles = 0, grid = 0;
};

void write_overlay(std::ostream& os, const ApproxReport& r, std::uint64_t grid) {
  const double mu = to_double(r.mu);
  os << (grid ? "x" : "j") << ",reference";
  for (const auto& c : r.candidates) os << "," << c.name;
  os << ",continuous_pdf\n";
  const std::uint64_t g = grid ? grid : 1;
  for (std::uint64_t k = 0; k <= r.total_energy * g; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(g);
    const bool integral = k % g == 0;
    os << decimal(x) << ",";
    if (integral) os << decimal(to_double(r.reference(k / g)));
    for (const auto& c : r.candidates) {
      os << ",";
      if (integral) os << decimal(c.dist.weights[k / g]);
    }
    os << "," << decimal(continuous_exponential_pdf(mu, x)) << "\n";
  }
}

int approx_compare(Context& ctx, const ApproxArgs& a) {
  const auto r = compare(a.energy, a.particles);
  if (ctx.format == "csv") {
    write_overlay(ctx.out, r, a.grid);
    return kOk;
  }
  if (ctx.format == "json") {
    json approx = {{"reference_entropy", r.reference_entropy},
                   {"max_entropy_root", approx_number(r.max_entropy_root)},
                   {"minus_log_root", approx_number(-std::log(r.max_entropy_root))},
                   {"ranking", r.ranking}};
    json cands = json::array();
    for (const auto& c : r.candidates) {
      cands.push_back({{"name", c.name},
                       {"mean", c.mean},
                       {"entropy", c.entropy},
                       {"kl_from_reference", c.kl_from_reference},
                       {"total_variation", c.total_variation},
                       {"weights", c.dist.weights}});
    }
    approx["candidates"] = cands;
    const auto ratio = ratio_approx(a.energy, r.mu);
    emit_json(ctx,
              {{"total_energy", a.energy},
               {"particles", a.particles},
               {"mu", exact_rational(r.mu)},
               {"reference", dist_json(r.reference, [](Level j) { return format_element(j); })},
               {"ratio", dist_json(ratio, [](Level j) { return format_element(j); })}},
              approx);
    return kOk;
  }
  ctx.out << "E=" << a.energy << " K=" << a.particles << " mu=" << to_string(r.mu) << "\n";
  ctx.out << "floating-point values below are approximate\n";
  ctx.out << "reference entropy " << decimal(r.reference_entropy) << "\n";
  ctx.out << "max-entropy root s " << decimal(r.max_entropy_root) << ", -ln s " << decimal(-std::log(r.max_entropy_root))
          << "\n";
  ctx.out << "candidate,mean,entropy,kl_from_reference,total_variation\n";
  for (const auto& c : r.candidates) {
    ctx.out << c.name << "," << decimal(c.mean) << "," << decimal(c.entropy) << "," << decimal(c.kl_from_reference)
            << "," << decimal(c.total_variation) << "\n";
  }
  ctx.out << "ranking";
  for (const auto& n : r.ranking) ctx.out << " " << n;
  ctx.out << "\n";
  return kOk;
}

// multivariate ----------------------------------------------------------------

struct MultiArgs {
  std::string urn;
  std::uint64_t draw = 0;
  std::optional<std::uint64_t> levels;
  std::uint64_t sum = 0;
  bool numbers = false;
};

int multivariate_draw(Context& ctx, const MultiArgs& a, const std::string& kind) {
  const Multiset urn = parse_multiset(a.urn);
  if (urn.empty()) throw UsageError("--urn must be nonempty");
  Dist<Multiset> d = kind == "hypergeometric" ? hypergeometric(a.draw, urn)
                     : kind == "polya"        ? polya(a.draw, urn)
                     : a.levels               ? nomial_distribution(*a.levels, a.draw, urn)
                                              : nomial_distribution(a.draw, urn);
  emit_dist(ctx, d);
  return kOk;
}

int multivariate_boltzmann(Context& ctx, const MultiArgs& a) {
  if (!a.levels) throw UsageError("--levels is required");
  const Multiset sizes = parse_multiset(a.urn);
  if (a.numbers) {
    emit_dist(ctx, boltzmann_multi_numbers(*a.levels, sizes, a.sum));
  } else {
    emit_dist(ctx, boltzmann_multi(*a.levels, sizes, a.sum));
  }
  return kOk;
}

// export ----------------------------------------------------------------------

int export_figures(Context& ctx, const std::string& which, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  if (which == "fig1" || which == "all") {
    for (std::uint64_t i = 0; i <= 105; i += 7) {
      auto path = dir / ("fig1_N16_K7_i" + std::to_string(i) + ".csv");
      export_plot_data(boltzmann_on_numbers(EnergyConfig::make(16, 7, i)), path);
      written.push_back(path);
    }
  }
  if (which == "fig2" || which == "all") {
    for (std::uint64_t k = 2; k <= 50; k += 6) {
      auto path = dir / ("fig2_E50_K" + std::to_string(k) + ".csv");
      export_plot_data(boltzmann_on_energy(50, k), path);
      written.push_back(path);
    }
  }
  if (which == "fig3" || which == "all") {
    auto path = dir / "fig3_E25_K5.csv";
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_overlay(f, compare(25, 5), 0);
    if (!f) throw std::runtime_error("failed writing " + path.string());
    written.push_back(path);
  }
  for (const auto& p : written) ctx.out << p.string() << "\n";
  return kOk;
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& s : args) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

}  // namespace

void export_plot_data(const Dist<Level>& dist, const std::filesystem::path& path) {
  std::vector<std::pair<std::size_t, Rational>> rows;
  for (const auto& [j, w] : dist) rows.emplace_back(j, w);
  write_plot_file(path, rows);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, join(args)};
  std::function<int()> action;

  CLI::App app{"Exact N-nomial coefficients, Boltzmann distributions and their Markov chains", "nomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"kets", "json", "csv"}))
      ->envname("NOMIALS_FORMAT")
      ->capture_default_str();
  app.add_option("--budget", ctx.budget, "Cap on brute-force enumeration steps")->capture_default_str();

  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> f) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&action, f = std::move(f)] { action = f; });
    return s;
  };

  NomialArgs na;
  auto* nomial_cmd = group("nomial", "N-nomial coefficients C_N(K,i)");
  auto* nv = leaf(nomial_cmd, "value", "Print C_N(K,i)", [&] { return nomial_value(ctx, na); });
  add_triple(nv, na.value, "--levels", "--length,--particles", "--sum");
  nv->add_option("--route", na.route)
      ->check(CLI::IsMember({"auto", "enumerate", "multisets", "recursive", "closed"}))
      ->capture_default_str();
  auto* nt = leaf(nomial_cmd, "table", "Rows K = 0..K_max of C_N(K,-)", [&] { return nomial_table(ctx, na); });
  nt->add_option("values", na.table_pos, "N K_max")->expected(0, 2);
  nt->add_option("--levels", na.table_levels);
  nt->add_option("--max-length", na.table_max);
  auto* nc = leaf(nomial_cmd, "check", "Check the identities of one row", [&] { return nomial_check(ctx, na); });
  nc->add_option("values", na.check_pos, "N K")->expected(0, 2);
  nc->add_option("--levels", na.check_levels);
  nc->add_option("--length,--particles", na.check_length);

  BoltzmannArgs ba;
  auto* boltz = group("boltzmann", "Boltzmann distributions");
  boltz->add_option("--plot-data", ba.plot_data, "Also write index,probability CSV to this path");
  auto* bm = leaf(boltz, "multisets", "Boltzmann-on-multisets", [&] { return boltzmann_multisets_cmd(ctx, ba); });
  add_triple(bm, ba.multisets, "--levels", "--particles,--length", "--sum");
  auto* bn = leaf(boltz, "numbers", "Boltzmann-on-numbers", [&] { return boltzmann_numbers_cmd(ctx, ba); });
  add_triple(bn, ba.numbers, "--levels", "--particles,--length", "--sum");
  bn->add_option("--route", ba.numbers_route)
      ->check(CLI::IsMember({"nomial", "flrn", "microstates"}))
      ->capture_default_str();
  auto* be = leaf(boltz, "energy", "Boltzmann-on-energy", [&] { return boltzmann_energy_cmd(ctx, ba); });
  be->add_option("--total-energy", ba.energy)->required();
  be->add_option("--particles", ba.particles)->required();
  be->add_flag("--scaled", ba.scaled, "Print K times each weight");

  MarkovArgs ma;
  auto* markov = group("markov", "The shift chain on configurations");
  auto* ms = leaf(markov, "stationarity", "Residual of B under one shift step", [&] { return markov_stationarity(ctx, ma); });
  add_triple(ms, ma.stationarity, "--levels", "--particles", "--sum");
  ms->add_option("--chain", ma.chain)->check(CLI::IsMember({"multisets", "numbers", "both"}))->capture_default_str();
  auto* mi = leaf(markov, "iterate", "TV distance to equilibrium per step", [&] { return markov_iterate(ctx, ma); });
  add_triple(mi, ma.iterate, "--levels", "--particles", "--sum");
  mi->add_option("--chain", ma.iterate_chain)->check(CLI::IsMember({"multisets", "numbers"}))->capture_default_str();
  mi->add_option("--start", ma.start, "Start state (ket), level, or level distribution");
  mi->add_option("--steps", ma.steps)->capture_default_str();
  auto* mm = leaf(markov, "matrix", "Exact transition matrix", [&] { return markov_matrix(ctx, ma); });
  add_triple(mm, ma.matrix, "--levels", "--particles", "--sum");
  auto* mp = leaf(markov, "sample", "Sample a trajectory", [&] { return markov_sample(ctx, ma); });
  add_triple(mp, ma.sample, "--levels", "--particles", "--sum");
  mp->add_option("--start", ma.start);
  mp->add_option("--steps", ma.steps)->capture_default_str();
  mp->add_option("--seed", ma.seed)->capture_default_str();

  ApproxArgs aa;
  auto* approx = group("approx", "Approximations of Boltzmann-on-energy");
  auto* ac = leaf(approx, "compare", "Compare the discrete approximations", [&] { return approx_compare(ctx, aa); });
  ac->add_option("--total-energy", aa.energy)->required();
  ac->add_option("--particles", aa.particles)->required();
  ac->add_option("--grid", aa.grid, "CSV rows at x = k/grid");

  MultiArgs mv;
  auto* multi = group("multivariate", "Urn distributions over multisets");
  for (const std::string kind : {"hypergeometric", "polya", "nomial-dist"}) {
    auto* s = leaf(multi, kind, kind + " distribution", [&, kind] { return multivariate_draw(ctx, mv, kind); });
    s->add_option("--urn", mv.urn, "Urn multiset, e.g. \"1|a> + 5|b>\"")->required();
    s->add_option("--draw", mv.draw, "Draw size K, or sum i for nomial-dist")->required();
    if (kind == "nomial-dist") s->add_option("--levels", mv.levels, "N (default: ground-set size)");
  }
  auto* bmu = leaf(multi, "boltzmann-multi", "Boltzmann over tuples of multisets",
                   [&] { return multivariate_boltzmann(ctx, mv); });
  bmu->add_option("--urn,--sizes", mv.urn, "Component sizes as a multiset")->required();
  bmu->add_option("--levels", mv.levels)->required();
  bmu->add_option("--sum", mv.sum)->required();
  bmu->add_flag("--numbers", mv.numbers, "Push forward along per-component flrn");

  VerifyOptions vo;
  auto* verify = group("verify", "Invariant sweeps");
  auto* va = leaf(verify, "all", "Run every invariant check", [&] {
    auto results = run_verification(vo);
    write_check_lines(ctx, results);
    return check_exit(results);
  });
  va->add_option("--max-levels", vo.max_levels)->capture_default_str()->check(CLI::PositiveNumber);
  va->add_option("--max-size", vo.max_size)->capture_default_str()->check(CLI::PositiveNumber);

  std::string which;
  std::string out_dir = ".";
  auto* ex = app.add_subcommand("export", "Write plot data for the figure panels");
  ex->fallthrough();
  ex->add_option("figure", which)->required()->check(CLI::IsMember({"fig1", "fig2", "fig3", "all"}));
  ex->add_option("--out-dir", out_dir)->capture_default_str();
  ex->callback([&] { action = [&] { return export_figures(ctx, which, out_dir); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, domain_error: bad parameters.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace nomials::cli
