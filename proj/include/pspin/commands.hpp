#pragma once

#include "hecke.hpp"
#include "intertwine.hpp"
#include "refine.hpp"
#include "serialize.hpp"
#include "slopes.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Command implementations behind the pspin_cli front end. Each command is a
// pure function of its RunConfig and returns the full text it would print.

namespace pspin::cli {

using Json = nlohmann::ordered_json;

enum class Command { Classify, Info, Slopes, Zeta, MTau };
enum class Format { Table, Json, Csv };

/// Process exit codes; part of the interface, do not renumber.
enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  BoundExceeded = 2,
  MalformedPermutation = 3,
  MissingData = 4,
  NonSpin = 5,
};

inline constexpr int kCsvVersion = 1;

struct RunConfig {
  Command command = Command::Classify;
  std::optional<int> n;
  std::vector<std::string> sigmas;
  std::optional<std::string> lambda;     ///< "12,1,-1,-12"
  std::vector<std::string> slopes;       ///< "1=11,2=0,3=11", one per sigma
  std::optional<std::string> profile;    ///< v(theta_1),...,v(theta_2n)
  bool solve = false;
  std::optional<std::string> parabolic;  ///< "2,2", "B", "G", "Q"
  std::int64_t beta = 1;
  Format format = Format::Table;
  int bound = 5;
  unsigned threads = 1;
};

struct RunResult {
  ExitCode code = ExitCode::Ok;
  std::string out;
  std::string err;
};

/** A --sigma value that is not a permutation in one-line notation. */
struct MalformedPermutation : std::invalid_argument {
  MalformedPermutation(const std::string& text, const ParseError& e)
      : std::invalid_argument("malformed permutation '" + text + "': " + e.what()), position(e.position) {}
  std::size_t position;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

inline Rational parse_rational_field(const std::string& field, std::size_t pos) {
  const auto ok = !field.empty() && field.find_first_not_of("+-0123456789/") == std::string::npos &&
                  field.find_first_of("0123456789") != std::string::npos;
  if (!ok) throw ParseError(pos, "expected a rational number, got '" + field + "'");
  try {
    return parse_rational(field);
  } catch (const std::exception&) {
    throw ParseError(pos, "expected a rational number, got '" + field + "'");
  }
}

inline std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  for (const auto& f : split(text, ',')) {
    out.push_back(parse_rational_field(f, pos));
    pos += f.size() + 1;
  }
  return out;
}

inline PureWeight parse_weight(const std::string& text) {
  std::vector<std::int64_t> c;
  std::size_t pos = 0;
  for (const auto& f : split(text, ',')) {
    const auto q = parse_rational_field(f, pos);
    if (denominator(q) != 1) throw ParseError(pos, "weights are integral");
    c.push_back(static_cast<std::int64_t>(numerator(q)));
    pos += f.size() + 1;
  }
  if (c.size() % 2 != 0) throw std::invalid_argument("weight needs 2n entries");
  return PureWeight(GLCharacter(std::move(c)));
}

/// "1=11,2=0,3=23/2"
inline std::map<int, Rational> parse_slopes(const std::string& text) {
  std::map<int, Rational> out;
  std::size_t pos = 0;
  for (const auto& f : split(text, ',')) {
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0 || f.substr(0, eq).find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(pos, "expected r=slope, got '" + f + "'");
    const int r = std::stoi(f.substr(0, eq));
    if (!out.emplace(r, parse_rational_field(f.substr(eq + 1), pos + eq + 1)).second)
      throw ParseError(pos, "slope for U_" + std::to_string(r) + " given twice");
    pos += f.size() + 1;
  }
  return out;
}

inline Refinement parse_sigma(const std::string& text) {
  try {
    return Refinement(Perm::parse(text));
  } catch (const ParseError& e) {
    throw MalformedPermutation(text, e);
  }
}

inline int composition_rank(const std::string& text) {
  int sum = 0;
  for (const auto& f : split(text, ',')) {
    if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos) return 0;
    sum += std::stoi(f);
  }
  return sum % 2 == 0 ? sum / 2 : 0;
}

/// --n if given, otherwise the rank implied by the other inputs.
inline int resolve_rank(const RunConfig& cfg) {
  int n = 0;
  if (cfg.n) {
    n = *cfg.n;
  } else if (!cfg.sigmas.empty()) {
    n = parse_sigma(cfg.sigmas.front()).rank();
  } else if (cfg.lambda) {
    n = static_cast<int>(split(*cfg.lambda, ',').size()) / 2;
  } else if (cfg.parabolic) {
    n = composition_rank(*cfg.parabolic);
  }
  if (n < 1) throw std::invalid_argument("rank not given; pass --n");
  if (n > cfg.bound)
    throw BoundExceeded("rank " + std::to_string(n) + " exceeds the bound " + std::to_string(cfg.bound) +
                        " (raise it with --bound)");
  return n;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

/// Left-aligned columns, two spaces apart; the last column is not padded.
inline std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent = "") {
  std::vector<std::size_t> width;
  auto display = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], display(r[i]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display(r[i]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& xs, const std::string& sep) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---- classify ----

inline Json classify_json(int n, const std::vector<Stratum>& strata) {
  Json rows = Json::array();
  std::size_t total = 0;
  for (const auto& s : strata) {
    const auto x = s.parabolic.xp();
    rows.push_back({{"parabolic", s.parabolic.label()},
                    {"x_p", std::vector<int>(x.begin(), x.end())},
                    {"dim", pure_parabolic_dim(s.parabolic)},
                    {"count", s.members.size()},
                    {"members", s.members}});
    total += s.members.size();
  }
  return {{"format_version", kCsvVersion}, {"n", n}, {"total", total}, {"strata", rows}};
}

inline std::string cmd_classify(const RunConfig& cfg) {
  const int n = detail::resolve_rank(cfg);
  const auto strata = stratify(n, {cfg.bound, cfg.threads});
  if (cfg.format == Format::Json) return detail::dump(classify_json(n, strata));
  if (cfg.format == Format::Csv) {
    std::string out = detail::csv_row({"format_version", "n", "parabolic", "x_p", "dim", "sigma"});
    for (const auto& s : strata) {
      const std::vector<std::string> head{std::to_string(kCsvVersion), std::to_string(n), s.parabolic.label(),
                                          format_set(s.parabolic.xp()),
                                          std::to_string(pure_parabolic_dim(s.parabolic))};
      if (s.members.empty()) out += detail::csv_row([&] { auto r = head; r.push_back(""); return r; }());
      for (const auto& m : s.members) {
        auto r = head;
        r.push_back(m.to_string());
        out += detail::csv_row(r);
      }
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"parabolic", "X_P", "dim", "count", "members"}};
  std::size_t total = 0;
  for (const auto& s : strata) {
    std::vector<std::string> names;
    for (const auto& m : s.members) names.push_back(m.to_string());
    rows.push_back({s.parabolic.label(), format_set(s.parabolic.xp()), std::to_string(pure_parabolic_dim(s.parabolic)),
                    std::to_string(s.members.size()), names.empty() ? "-" : detail::join(names, " ")});
    total += s.members.size();
  }
  return "GL_" + std::to_string(2 * n) + ": " + std::to_string(total) + " Iwahori refinements by optimal spin parabolic\n" +
         detail::table(rows);
}

// ---- info ----

inline Json info_json(const Refinement& r) {
  const int n = r.rank();
  const auto prof = optimal_parabolic(r);
  const auto path = to_B_spin(r);
  Json alphas = Json::array();
  for (int k = 1; k <= 2 * n; ++k) {
    const auto a = alpha_U(r, k);
    alphas.push_back({{"k", k}, {"monomial", a.to_string()}, {"exponents", a}});
  }
  Json tau = Json::array();
  for (const auto& [i, j] : path.tau) tau.push_back({i, j});
  return {{"sigma", r},
          {"n", n},
          {"spin_set", std::vector<int>(prof.spin_set.begin(), prof.spin_set.end())},
          {"gamma", gamma(r).values},
          {"optimal", prof.optimal.label()},
          {"dim", pure_parabolic_dim(prof.optimal)},
          {"alpha_U", alphas},
          {"b_spin", {{"target", path.result}, {"tau", tau}}}};
}

inline std::string cmd_info(const RunConfig& cfg) {
  if (cfg.sigmas.size() != 1) throw std::invalid_argument("info takes exactly one --sigma");
  const auto r = detail::parse_sigma(cfg.sigmas.front());
  if (cfg.n && *cfg.n != r.rank()) throw RankMismatch("--n does not match the size of --sigma");
  detail::resolve_rank(cfg);
  const auto j = info_json(r);
  if (cfg.format == Format::Json) return detail::dump(j);

  std::vector<std::string> tau;
  for (const auto& t : j["b_spin"]["tau"]) tau.push_back("(" + t[0].dump() + " " + t[1].dump() + ")");
  std::vector<std::vector<std::string>> rows{
      {"sigma", r.to_string()},
      {"spin_set", format_set(optimal_parabolic(r).spin_set)},
      {"gamma", detail::join_numbers(gamma(r).values, " ")},
      {"optimal", j["optimal"].get<std::string>()},
      {"dim", std::to_string(j["dim"].get<int>())},
  };
  for (const auto& a : j["alpha_U"])
    rows.push_back({"alpha_U_" + a["k"].dump(), a["monomial"].get<std::string>()});
  rows.push_back({"b_spin_target", j["b_spin"]["target"].get<std::string>()});
  rows.push_back({"tau", tau.empty() ? "-" : detail::join(tau, " ")});

  if (cfg.format == Format::Csv) {
    std::string out = detail::csv_row({"format_version", "sigma", "key", "value"});
    for (const auto& row : rows)
      out += detail::csv_row({std::to_string(kCsvVersion), r.to_string(), row[0], row[1]});
    return out;
  }
  return detail::table(rows);
}

// ---- slopes ----

struct RefinementAudit {
  Refinement refinement;
  std::string source;  ///< "declared" or "profile"
  SlopeAudit audit;
};

inline Json solution_json(const ProfileSolution& s) {
  Json rels = Json::array();
  for (const auto& r : s.relations) rels.push_back({{"label", r.label}, {"coeffs", r.coeffs}, {"rhs", r.rhs}});
  Json j{{"consistent", s.consistent}, {"unknowns", s.unknowns}};
  if (s.consistent) {
    j["profile"] = *s.profile;
    j["free_unknowns"] = s.free_unknowns;
  } else {
    std::vector<std::string> y;
    for (const auto& c : s.certificate) y.push_back(c.str());
    j["certificate"] = y;
    j["certificate_value"] = s.certificate_value;
    j["violated"] = s.violated;
  }
  j["relations"] = rels;
  return j;
}

inline std::string cmd_slopes(const RunConfig& cfg) {
  if (cfg.sigmas.empty()) throw MissingData("slopes needs at least one --sigma");
  if (!cfg.lambda) throw MissingData("slopes needs --lambda");
  const int n = detail::resolve_rank(cfg);
  const auto lambda = detail::parse_weight(*cfg.lambda);
  if (lambda.rank() != n) throw RankMismatch("--lambda has the wrong length");
  if (!lambda.dominant()) throw std::invalid_argument("--lambda must be dominant");
  const auto p = cfg.parabolic ? parse_spin_parabolic(*cfg.parabolic, n) : SpinParabolic::borel(n);

  std::optional<ValuationProfile> prof;
  if (cfg.profile) {
    const auto t = detail::parse_rationals(*cfg.profile);
    if (static_cast<int>(t.size()) != 2 * n) throw RankMismatch("--profile needs 2n valuations");
    prof = ValuationProfile{t, t.front() + t.back(), lambda.sw()};
    if (!prof->pure()) throw std::invalid_argument("--profile is not pure: v(θ_i) + v(θ_{2n+1-i}) must be constant");
  }
  if (!prof && cfg.slopes.size() < cfg.sigmas.size())
    throw MissingData("no slopes for " + cfg.sigmas[cfg.slopes.size()] + " (pass --slopes or --profile)");
  if (cfg.slopes.size() > cfg.sigmas.size()) throw std::invalid_argument("more --slopes than --sigma");

  std::vector<RefinementAudit> audits;
  std::vector<SlopeData> data;
  for (std::size_t i = 0; i < cfg.sigmas.size(); ++i) {
    const auto r = detail::parse_sigma(cfg.sigmas[i]);
    if (r.rank() != n) throw RankMismatch("refinement " + r.to_string() + " has the wrong rank");
    if (i < cfg.slopes.size()) {
      auto declared = detail::parse_slopes(cfg.slopes[i]);
      audits.push_back({r, "declared", non_critical_slope(declared, lambda, p)});
      data.push_back({r, std::move(declared)});
    } else {
      audits.push_back({r, "profile", non_critical_slope(r, lambda, *prof, p)});
    }
  }
  std::optional<ProfileSolution> solution;
  if (cfg.solve) {
    if (data.empty()) throw MissingData("--solve needs declared --slopes");
    solution = solve_profile(data, lambda);
  }
  bool all_ok = true;
  for (const auto& a : audits) all_ok = all_ok && a.audit.non_critical;

  if (cfg.format == Format::Json) {
    Json refs = Json::array();
    for (const auto& a : audits) {
      Json rows = Json::array();
      std::vector<int> bad;
      for (const auto& b : a.audit.rows) {
        rows.push_back({{"r", b.r}, {"slope", b.slope}, {"bound", b.bound}, {"ok", b.ok}});
        if (!b.ok) bad.push_back(b.r);
      }
      refs.push_back({{"sigma", a.refinement},
                      {"source", a.source},
                      {"rows", rows},
                      {"non_critical", a.audit.non_critical},
                      {"critical_at", bad}});
    }
    Json j{{"n", n},
           {"lambda", lambda.character().coeffs()},
           {"parabolic", p.label()},
           {"refinements", refs},
           {"non_critical", all_ok}};
    if (solution) j["solve"] = solution_json(*solution);
    return detail::dump(j);
  }
  if (cfg.format == Format::Csv) {
    std::string out = detail::csv_row({"format_version", "sigma", "source", "r", "slope", "bound", "ok"});
    for (const auto& a : audits)
      for (const auto& b : a.audit.rows)
        out += detail::csv_row({std::to_string(kCsvVersion), a.refinement.to_string(), a.source, std::to_string(b.r),
                                to_string(b.slope), std::to_string(b.bound), b.ok ? "true" : "false"});
    return out;
  }

  std::ostringstream os;
  os << "λ = (" << detail::join_numbers(lambda.character().coeffs(), ",") << ")  P = " << p.label() << "\n";
  for (const auto& a : audits) {
    os << "σ = " << a.refinement.to_string() << " (" << a.source << " slopes)\n";
    std::vector<std::vector<std::string>> rows{{"r", "slope", "bound", "verdict"}};
    std::vector<std::string> bad;
    for (const auto& b : a.audit.rows) {
      rows.push_back({std::to_string(b.r), to_string(b.slope), std::to_string(b.bound), b.ok ? "ok" : "critical"});
      if (!b.ok) bad.push_back("U_" + std::to_string(b.r) + " (" + to_string(b.slope) + " >= " + std::to_string(b.bound) + ")");
    }
    os << detail::table(rows, "  ");
    os << "  " << (a.audit.non_critical ? "non-critical slope" : "critical at " + detail::join(bad, ", ")) << "\n";
  }
  os << "overall: " << (all_ok ? "non-critical" : "critical") << "\n";
  if (solution) {
    const auto& s = *solution;
    if (s.consistent) {
      std::vector<std::string> t;
      for (const auto& x : s.profile->t) t.push_back(to_string(x));
      os << "profile: v(θ) = (" << detail::join(t, ", ") << ")  v(η) = " << to_string(s.profile->eta_val);
      if (!s.free_unknowns.empty()) os << "  free (set to 0): " << detail::join(s.free_unknowns, " ");
      os << "\n";
    } else {
      std::vector<std::string> y;
      for (const auto& c : s.certificate) y.push_back(c.str());
      os << "profile: inconsistent\n"
         << "  certificate y = (" << detail::join(y, ", ") << "), y·b = " << to_string(s.certificate_value) << "\n"
         << "  rows: " << detail::join(s.violated, " ") << "\n";
    }
  }
  return os.str();
}

// ---- zeta ----

inline std::string cmd_zeta(const RunConfig& cfg) {
  if (!cfg.parabolic) throw MissingData("zeta needs --parabolic");
  if (cfg.beta < 1) throw std::invalid_argument("--beta must be positive");
  const int n = detail::resolve_rank(cfg);
  const auto p = parse_spin_parabolic(*cfg.parabolic, n);
  const auto v = zeta_support_verdict(p, cfg.beta);
  const auto nu = nu_beta(p, cfg.beta);
  const std::string verdict = v.forced_vanishing ? "forced vanishing" : "ok";

  if (cfg.format == Format::Json) {
    return detail::dump(Json{{"n", n},
                             {"parabolic", p.label()},
                             {"beta", cfg.beta},
                             {"blocks", v.block_count},
                             {"contained_in_Q", v.contained_in_Q},
                             {"exponents", nu.exps},
                             {"integral", v.integral},
                             {"verdict", verdict}});
  }
  if (cfg.format == Format::Csv) {
    std::string out = detail::csv_row({"format_version", "n", "parabolic", "beta", "i", "j", "exponent", "verdict"});
    for (int i = 1; i <= n; ++i)
      out += detail::csv_row({std::to_string(kCsvVersion), std::to_string(n), p.label(), std::to_string(cfg.beta),
                              std::to_string(i), std::to_string(n + 1 - i), std::to_string(nu.exps[i - 1]), verdict});
    return out;
  }
  std::ostringstream os;
  os << "P = " << p.label() << "  β = " << cfg.beta << "  blocks = " << v.block_count
     << "  contained in Q: " << (v.contained_in_Q ? "yes" : "no") << "\n";
  os << "ν_β(t_P^β), p-exponents on the anti-diagonal:\n";
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> row(static_cast<std::size_t>(n), ".");
    row[n - i] = std::to_string(nu.exps[i - 1]);
    rows.push_back(std::move(row));
  }
  os << detail::table(rows, "  ");
  os << "verdict: " << verdict << "\n";
  return os.str();
}

// ---- mtau ----

inline std::string cmd_mtau(const RunConfig& cfg) {
  const int n = detail::resolve_rank(cfg);
  const auto p = parse_spin_parabolic(cfg.parabolic.value_or("Q"), n);
  const auto m = m_tau_expansion(n, p);
  std::vector<std::string> factors;
  for (const auto& f : m.leading_factors) factors.push_back(f.to_string());

  if (cfg.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& [x, c] : m.normalized) rows.push_back({{"coset", x.to_string()}, {"rep", x.rep()}, {"coefficient", c.to_string()}});
    return detail::dump(Json{{"n", n},
                             {"parabolic", p.label()},
                             {"k", m.k},
                             {"word", m.word.letters},
                             {"b", m.word.b},
                             {"tau", m.twist},
                             {"leading", m.leading.to_string()},
                             {"leading_factors", factors},
                             {"coefficients", rows}});
  }
  if (cfg.format == Format::Csv) {
    std::string out = detail::csv_row({"format_version", "n", "parabolic", "coset", "coefficient"});
    for (const auto& [x, c] : m.normalized)
      out += detail::csv_row({std::to_string(kCsvVersion), std::to_string(n), p.label(), x.to_string(), c.to_string()});
    return out;
  }
  std::ostringstream os;
  os << "M_τ on H_[w_" << n << "]', P = " << p.label() << "  k = (" << detail::join_numbers(m.k, ",") << ")\n";
  os << "w_" << n << " = s'_(" << detail::join_numbers(m.word.letters, " ") << ")  b = " << m.word.b
     << "  τ = " << m.twist.to_string() << "\n";
  os << "[1]' raw coefficient: " << m.leading.to_string() << "\n";
  os << "c_s factors (i <= b): " << (factors.empty() ? "none" : detail::join(factors, " * ")) << "\n";
  std::vector<std::vector<std::string>> rows{{"coset", "coefficient"}};
  for (const auto& [x, c] : m.normalized) rows.push_back({x.to_string(), c.to_string()});
  os << detail::table(rows);
  return os.str();
}

/// Runs one command, mapping failures onto the documented exit codes.
inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    switch (cfg.command) {
      case Command::Classify: res.out = cmd_classify(cfg); break;
      case Command::Info: res.out = cmd_info(cfg); break;
      case Command::Slopes: res.out = cmd_slopes(cfg); break;
      case Command::Zeta: res.out = cmd_zeta(cfg); break;
      case Command::MTau: res.out = cmd_mtau(cfg); break;
    }
  } catch (const BoundExceeded& e) {
    res = {ExitCode::BoundExceeded, "", e.what()};
  } catch (const MalformedPermutation& e) {
    res = {ExitCode::MalformedPermutation, "", e.what()};
  } catch (const MissingData& e) {
    res = {ExitCode::MissingData, "", e.what()};
  } catch (const NonSpinParabolic& e) {
    res = {ExitCode::NonSpin, "", e.what()};
  } catch (const std::exception& e) {
    res = {ExitCode::Usage, "", e.what()};
  }
  return res;
}

}  // namespace pspin::cli
