#pragma once

// Command-line front end.  run_cli takes the arguments after the program name
// and writes results to `out`, diagnostics and timings to `err`.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superpoly/knots/checks.hpp"
#include "superpoly/models/tesler.hpp"
#include "superpoly/util/pool.hpp"

namespace superpoly::cli {

using nlohmann::json;
using algebra::LaurentQTU;
using algebra::UPoly;
using symfunc::Basis;
using symfunc::SymFunc;
using young::Partition;
using young::partitions;

inline constexpr const char* kCodeVersion = "1";

enum Exit { kOk = 0, kFailure = 1, kNotCoprime = 2, kDisagreement = 3 };

struct RunConfig {
  std::string command;
  int n = 0, m = 0;
  bool have_pair = false;
  Partition color{1};
  std::string method = "syt";
  std::vector<std::string> subst;
  int max = 0;
  std::string format = "text";
  int jobs = 1;
  std::string cache;
  std::string suite = "proven";
  std::vector<std::string> pairs;
  bool cherednik = false;
};

enum class Status { ProvenPass, ConjecturePass, Fail };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ProvenPass: return "proven-pass";
    case Status::ConjecturePass: return "conjecture-pass";
    case Status::Fail: return "FAIL";
  }
  return "";
}

struct Record {
  std::string name, params;
  bool proven = false;
  Status status = Status::Fail;
  std::string left, right, error;
  double seconds = 0;
};

// Rendering.

inline std::string latex(const std::string& text) {
  std::string s = std::regex_replace(text, std::regex(R"(\^(-?[0-9]+))"), "^{$1}");
  s = std::regex_replace(s, std::regex(R"(\*)"), " ");
  return s;
}

inline std::string render(const std::string& text, const std::string& format) { return format == "latex" ? latex(text) : text; }

inline json value_record(int n, int m, const Partition& lam, const std::string& method, const std::string& value,
                         const std::string& status) {
  return json{{"n", n}, {"m", m}, {"lambda", lam.parts()}, {"method", method}, {"value", value}, {"status", status}};
}

// Substitutions.

/// Applies var=val substitutions in order: u=0, t=1, q=1, t=qinv, t=tinv.
inline LaurentQTU substitute(LaurentQTU p, const std::vector<std::string>& subst) {
  for (const auto& s : subst) {
    if (s == "u=0") p = p.u_to_zero();
    else if (s == "t=1") p = p.t_to_one();
    else if (s == "q=1") p = p.q_to_one();
    else if (s == "t=qinv") p = p.t_to_qinv();
    else if (s == "t=tinv") p = p.t_inverse();
    else fail(ErrorKind::InvalidArgument, "unsupported substitution '" + s + "'");
  }
  return p;
}

inline std::string subst_key(const std::vector<std::string>& subst) {
  std::string k;
  for (const auto& s : subst) k += (k.empty() ? "" : ",") + s;
  return k;
}

// Results cache: a JSON object file keyed by the full request.

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (in) {
      try {
        in >> table_;
      } catch (const json::exception&) {
        table_ = json::object();
      }
    }
    if (!table_.is_object()) table_ = json::object();
  }

  static std::string key(const std::string& cmd, int n, int m, const Partition& lam, const std::string& method,
                         const std::vector<std::string>& subst) {
    return cmd + "|" + std::to_string(n) + "|" + std::to_string(m) + "|" + lam.to_string() + "|" + method + "|" +
           subst_key(subst) + "|" + kCodeVersion;
  }

  std::optional<std::string> lookup(const std::string& k) const {
    if (path_.empty() || !table_.contains(k)) return std::nullopt;
    return table_.at(k).get<std::string>();
  }

  /// One hit in ten, chosen by a stable hash of the key, is recomputed.
  static bool sampled(const std::string& k) { return fnv1a(k) % 10 == 0; }

  void store(const std::string& k, const std::string& v) {
    if (path_.empty()) return;
    table_[k] = v;
    dirty_ = true;
  }

  /// Cached value or a fresh one; a sampled hit that disagrees with the fresh
  /// value is reported and replaced.
  std::string get(const std::string& k, const std::function<std::string()>& compute, std::ostream& err) {
    const auto hit = lookup(k);
    if (hit && !sampled(k)) return *hit;
    const std::string v = compute();
    if (hit && *hit != v) err << "warning: cache entry " << k << " disagrees with a fresh computation; replaced\n";
    if (!hit || *hit != v) store(k, v);
    return v;
  }

  void save() const {
    if (path_.empty() || !dirty_) return;
    std::ofstream out(path_);
    out << table_.dump(1) << "\n";
  }

 private:
  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
  }

  std::string path_;
  json table_ = json::object();
  bool dirty_ = false;
};

// Superpolynomial by method.

inline const std::vector<std::string>& all_methods() {
  static const std::vector<std::string> methods{"syt", "tesler", "combinatorial", "operator", "theorem"};
  return methods;
}

/// P~ (or P with `cherednik`) by one route, before substitutions.
inline knots::SuperPoly super_by_method(int n, int m, const Partition& lam, const std::string& method, bool cherednik) {
  knots::SuperPoly r;
  const bool uncolored = lam == Partition{1};
  if (!uncolored && method != "syt" && method != "operator") {
    fail(ErrorKind::InvalidArgument, "method " + method + " supports only the uncolored invariant");
  }
  if (!uncolored) {
    r = knots::colored_super(n, m, lam);
  } else if (method == "operator") {
    r = {n, m, lam, knots::lambda_pairing(knots::ptilde_one(n, m))};
  } else if (method == "syt") {
    r = knots::supertilde_syt(n, m);
  } else if (method == "tesler") {
    r = knots::super_tesler(n, m);
  } else if (method == "combinatorial") {
    r = {n, m, lam, UPoly::from_laurent(models::schroeder_sum(n, m))};
  } else if (method == "theorem") {
    r = knots::tilde_from(knots::theorem_formula(n, m));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown method '" + method + "'");
  }
  return cherednik ? knots::untilde(r) : r;
}

inline std::string super_text(const knots::SuperPoly& s, const std::vector<std::string>& subst) {
  if (subst.empty()) return s.to_string();
  if (!s.is_laurent()) fail(ErrorKind::NotPolynomial, "substitutions need a Laurent polynomial value");
  return substitute(s.laurent(), subst).to_string();
}

// Verification suites.

struct Task {
  std::string name, params;
  bool proven = false;
  std::function<knots::CheckOutcome()> run;
};

inline std::string pair_params(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

inline std::vector<std::pair<int, int>> coprime_pairs(int nmax, int mmax, int nmin = 1) {
  std::vector<std::pair<int, int>> out;
  for (int n = nmin; n <= nmax; ++n) {
    for (int m = 1; m <= mmax; ++m) {
      if (std::gcd(n, m) == 1) out.emplace_back(n, m);
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> coprime_pairs_sum(int total) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n < total; ++n) {
    for (int m = 1; n + m <= total; ++m) {
      if (std::gcd(n, m) == 1) out.emplace_back(n, m);
    }
  }
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"proven", "catalan", "schroeder", "shuffle", "operators", "duality", "springer", "symmetry", "all"};
}

inline std::vector<Task> build_suite(const std::string& suite, const RunConfig& cfg) {
  using namespace knots;
  std::vector<Task> tasks;
  auto pairs = [&](int nmax, int mmax) {
    return cfg.have_pair ? std::vector<std::pair<int, int>>{{cfg.n, cfg.m}} : coprime_pairs(nmax, mmax);
  };
  auto add = [&](std::string name, std::string params, bool proven, std::function<CheckOutcome()> f) {
    tasks.push_back({std::move(name), std::move(params), proven, std::move(f)});
  };
  const int pmax = cfg.max > 0 ? cfg.max : 9;
  const int cmax = cfg.max > 0 ? cfg.max : 7;

  if (suite == "proven" || suite == "all") {
    for (auto [n, m] : pairs(std::min(5, pmax), pmax)) {
      add("route_equivalence", pair_params(n, m), true, [n, m] { return route_equivalence(n, m); });
      add("t_one_theorem", pair_params(n, m), true, [n, m] { return t_one_theorem(n, m); });
      add("q_factorial", pair_params(n, m), true, [n, m] { return q_factorial(n, m); });
    }
    for (int m = 1; m <= 20; ++m) add("unknot", "m=" + std::to_string(m), true, [m] { return unknot(m); });
    for (int n = 1; n <= 5; ++n) add("ptilde_e", "n=" + std::to_string(n), true, [n] { return ptilde_e(n); });
    for (int n = 1; n <= 4; ++n) add("ptilde_nabla_e", "n=" + std::to_string(n), true, [n] { return ptilde_nabla_e(n); });
    for (int d = 0; d <= 5; ++d) {
      for (const auto& lam : partitions(d)) {
        add("evaluation", "lambda=" + lam.to_string(), true, [lam] { return evaluation_theorem(lam); });
        if (d <= 4) add("evalv_consistency", "lambda=" + lam.to_string(), true, [lam] { return evalv_consistency(lam); });
      }
    }
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lam : partitions(n)) {
        add("garsia_haiman", "lambda=" + lam.to_string(), true, [lam] { return garsia_haiman(lam); });
      }
    }
    for (auto [n, m] : pairs(4, 7)) {
      add("schur_t_qinv", pair_params(n, m), true, [n, m] { return schur_t_qinv(n, m); });
      add("counting_anchors", pair_params(n, m), true, [n, m] { return counting_anchors(n, m); });
    }
  }
  if (suite == "operators" || suite == "proven" || suite == "all") {
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= 4; ++d) {
        const std::string p = "n=" + std::to_string(n) + " d=" + std::to_string(d);
        add("pieri_power_sum", p, true, [n, d] { return pieri(n, d, Normalization::PowerSum); });
        add("pieri_hall", p, true, [n, d] { return pieri(n, d, Normalization::Hall); });
        add("commutator", p, true, [n, d] { return commutator(n, d); });
      }
    }
    const std::vector<std::tuple<int, int, int>> conj{{1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3, 1}, {1, 2, 3}, {2, 1, 0}, {2, 1, 1}};
    for (auto [k, n, m] : conj) {
      for (int d = 0; d <= 4; ++d) {
        const std::string p = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
        add("nabla_conjugation", p, true, [k, n, m, d] { return nabla_conjugation(k, n, m, d); });
      }
    }
  }
  if (suite == "duality" || suite == "proven" || suite == "all") {
    std::vector<Partition> colors;
    if (suite == "duality" && cfg.color != Partition{1}) {
      colors = {cfg.color};
    } else {
      colors = {Partition{1}, Partition{2}, Partition{1, 1}};
    }
    for (auto [n, m] : pairs(3, suite == "duality" && cfg.max > 0 ? cfg.max : 5)) {
      for (const auto& lam : colors) {
        add("duality", pair_params(n, m) + " lambda=" + lam.to_string(), true, [n, m, lam] { return duality(n, m, lam); });
      }
    }
  }
  if (suite == "catalan" || suite == "all") {
    for (auto [n, m] : pairs(4, cmax)) add("catalan", pair_params(n, m), false, [n, m] { return catalan_conjecture(n, m); });
    for (auto [n, m] : cfg.have_pair ? std::vector<std::pair<int, int>>{{cfg.n, cfg.m}} : coprime_pairs_sum(12)) {
      add("catalan_qt_symmetry", pair_params(n, m), false, [n, m] { return catalan_symmetry(n, m); });
    }
  }
  if (suite == "schroeder" || suite == "all") {
    for (auto [n, m] : pairs(4, cmax)) add("schroeder", pair_params(n, m), false, [n, m] { return schroeder_conjecture(n, m); });
  }
  if (suite == "shuffle" || suite == "all") {
    for (auto [n, m] : pairs(4, cmax)) add("shuffle", pair_params(n, m), false, [n, m] { return shuffle_conjecture(n, m); });
  }
  if (suite == "symmetry" || suite == "all") {
    for (auto [n, m] : cfg.have_pair ? std::vector<std::pair<int, int>>{{cfg.n, cfg.m}} : coprime_pairs_sum(11)) {
      add("qt_symmetry", pair_params(n, m), false, [n, m] { return qt_symmetry(n, m); });
      add("mn_symmetry", pair_params(n, m), false, [n, m] { return mn_symmetry(n, m); });
    }
  }
  if (suite == "springer" || suite == "all") {
    for (auto [n, m] : pairs(4, cmax)) {
      if (suite == "springer") add("counting_anchors", pair_params(n, m), true, [n, m] { return counting_anchors(n, m); });
      add("springer_cells", pair_params(n, m), false, [n, m] { return springer(n, m); });
    }
  }
  return tasks;
}

inline Record run_task(const Task& t) {
  Record r{t.name, t.params, t.proven, Status::Fail, "", "", "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const knots::CheckOutcome c = t.run();
    r.left = c.left;
    r.right = c.right;
    r.status = c.pass ? (t.proven ? Status::ProvenPass : Status::ConjecturePass) : Status::Fail;
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Subcommands.

inline int cmd_super(const RunConfig& cfg, ResultCache& cache, std::ostream& out, std::ostream& err) {
  const bool all = cfg.method == "all";
  const std::vector<std::string> methods = all ? (cfg.color == Partition{1} ? all_methods() : std::vector<std::string>{"operator"})
                                               : std::vector<std::string>{cfg.method};
  std::vector<std::string> values;
  for (const auto& method : methods) {
    const std::string k = ResultCache::key(cfg.cherednik ? "cherednik" : "super", cfg.n, cfg.m, cfg.color, method, cfg.subst);
    values.push_back(cache.get(k, [&] { return super_text(super_by_method(cfg.n, cfg.m, cfg.color, method, cfg.cherednik), cfg.subst); }, err));
  }
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < methods.size(); ++i) {
      arr.push_back(value_record(cfg.n, cfg.m, cfg.color, methods[i], values[i], agree ? "ok" : "disagree"));
    }
    out << (all ? arr : arr[0]).dump() << "\n";
  } else if (all) {
    for (std::size_t i = 0; i < methods.size(); ++i) out << methods[i] << ": " << render(values[i], cfg.format) << "\n";
    out << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
  } else {
    out << render(values.front(), cfg.format) << "\n";
  }
  return agree ? kOk : kDisagreement;
}

inline int cmd_polynomial(const RunConfig& cfg, const std::string& method, const LaurentQTU& value, std::ostream& out) {
  const std::string v = substitute(value, cfg.subst).to_string();
  if (cfg.format == "json") {
    out << value_record(cfg.n, cfg.m, Partition{1}, method, v, "ok").dump() << "\n";
  } else {
    out << render(v, cfg.format) << "\n";
  }
  return kOk;
}

inline int cmd_shuffle(const RunConfig& cfg, std::ostream& out) {
  const SymFunc fr = symfunc::change_basis(models::frobenius_hikita(cfg.n, cfg.m), Basis::s);
  if (cfg.format == "json") {
    json j = value_record(cfg.n, cfg.m, Partition{1}, "parking", fr.to_string(), "ok");
    j["schur"] = fr.to_json();
    out << j.dump() << "\n";
  } else {
    out << render(fr.to_string(), cfg.format) << "\n";
  }
  return kOk;
}

inline int cmd_tesler(const RunConfig& cfg, std::ostream& out) {
  const auto terms = models::tesler_enumerate(cfg.n, cfg.m);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& t : terms) {
      arr.push_back({{"matrix", t.x}, {"quasi_diagonal", t.quasi_diagonal}, {"weight", t.weight.to_string()},
                     {"path", models::tesler_projection(cfg.n, cfg.m, t.x).rows}});
    }
    out << arr.dump() << "\n";
    return kOk;
  }
  for (const auto& t : terms) {
    std::string rows;
    for (std::size_t i = 0; i < t.x.size(); ++i) {
      rows += i ? " | " : "";
      for (std::size_t j = i; j < t.x.size(); ++j) rows += (j > i ? " " : "") + std::to_string(t.x[i][j]);
    }
    out << "[" << rows << "]" << (t.quasi_diagonal ? " quasi-diagonal" : "") << "  " << render(t.weight.to_string(), cfg.format)
        << "  path " << models::tesler_projection(cfg.n, cfg.m, t.x).to_string() << "\n";
  }
  out << terms.size() << " Tesler matrices\n";
  return kOk;
}

inline int cmd_cells(const RunConfig& cfg, std::ostream& out) {
  const auto cells = models::affine_cells(cfg.n, cfg.m);
  LaurentQTU poincare;
  for (const auto& c : cells) poincare += LaurentQTU::term(1, c.dimension, 0);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back({{"window", c.perm.window}, {"dimension", c.dimension}});
    out << json{{"n", cfg.n}, {"m", cfg.m}, {"cells", arr}, {"poincare", poincare.to_string()}}.dump() << "\n";
    return kOk;
  }
  for (const auto& c : cells) out << c.perm.to_string() << " dim " << c.dimension << "\n";
  out << cells.size() << " cells, Poincare polynomial " << render(poincare.to_string(), cfg.format) << "\n";
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) fail(ErrorKind::InvalidArgument, "unknown suite '" + cfg.suite + "'");
  const std::vector<Task> tasks = build_suite(cfg.suite, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Record> records =
      util::ordered_map<Record>(tasks.size(), cfg.jobs, [&](std::size_t i) { return run_task(tasks[i]); });
  int proven_fail = 0, conj_fail = 0;
  json arr = json::array();
  for (const auto& r : records) {
    if (r.status == Status::Fail) ++(r.proven ? proven_fail : conj_fail);
    if (cfg.format == "json") {
      arr.push_back({{"identity", r.name}, {"params", r.params}, {"status", to_string(r.status)}, {"left", r.left},
                     {"right", r.right}, {"error", r.error}});
      continue;
    }
    out << "[" << to_string(r.status) << "] " << r.name << " " << r.params << "\n";
    if (r.status == Status::Fail || cfg.have_pair) {
      if (!r.error.empty()) out << "  error: " << r.error << "\n";
      out << "  left:  " << render(r.left, cfg.format) << "\n  right: " << render(r.right, cfg.format) << "\n";
    }
  }
  if (cfg.format == "json") out << arr.dump(1) << "\n";
  out << "summary: " << records.size() << " checks, " << proven_fail << " proven failures, " << conj_fail
      << " conjecture failures\n";
  double slowest = 0;
  std::string slowest_name;
  for (const auto& r : records) {
    if (r.seconds > slowest) {
      slowest = r.seconds;
      slowest_name = r.name + " " + r.params;
    }
  }
  err << "verify " << cfg.suite << ": " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
      << " s wall, slowest " << slowest_name << " (" << slowest << " s)\n";
  return proven_fail > 0 ? kFailure : kOk;
}

inline int cmd_table(const RunConfig& cfg, ResultCache& cache, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<int, int>> pairs;
  if (!cfg.pairs.empty()) {
    for (const auto& s : cfg.pairs) {
      int n = 0, m = 0;
      char comma = 0;
      std::istringstream in(s);
      if (!(in >> n >> comma >> m) || comma != ',') fail(ErrorKind::Parse, "pair '" + s + "' is not of the form n,m");
      pairs.emplace_back(n, m);
    }
  } else {
    const int total = cfg.max > 0 ? cfg.max : 8;
    for (int n = 1; n < total; ++n) {
      for (int m = 1; n + m <= total; ++m) {
        if (std::gcd(n, m) == 1) pairs.emplace_back(n, m);
      }
    }
  }
  const std::string method = cfg.method == "all" ? "syt" : cfg.method;
  const std::string cmd = cfg.cherednik ? "cherednik" : "super";
  std::vector<std::optional<std::string>> hits;
  for (auto [n, m] : pairs) hits.push_back(cache.lookup(ResultCache::key(cmd, n, m, cfg.color, method, cfg.subst)));
  std::vector<json> rows = util::ordered_map<json>(pairs.size(), cfg.jobs, [&](std::size_t i) {
    auto [n, m] = pairs[i];
    const std::string k = ResultCache::key(cmd, n, m, cfg.color, method, cfg.subst);
    if (hits[i] && !ResultCache::sampled(k)) return value_record(n, m, cfg.color, method, *hits[i], "ok");
    try {
      if (std::gcd(n, m) != 1 || n < 1 || m < 1) models::require_coprime(n, m);
      const std::string v = super_text(super_by_method(n, m, cfg.color, method, cfg.cherednik), cfg.subst);
      return value_record(n, m, cfg.color, method, v, "ok");
    } catch (const Error& e) {
      return value_record(n, m, cfg.color, method, "", std::string(superpoly::to_string(e.kind())));
    }
  });
  json arr = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [n, m] = pairs[i];
    if (rows[i]["status"] == "ok") {
      const std::string v = rows[i]["value"];
      const std::string k = ResultCache::key(cmd, n, m, cfg.color, method, cfg.subst);
      if (hits[i] && *hits[i] != v) err << "warning: cache entry " << k << " disagrees with a fresh computation; replaced\n";
      if (!hits[i] || *hits[i] != v) cache.store(k, v);
    } else {
      err << "warning: (" << n << "," << m << "): " << rows[i]["status"].get<std::string>() << "\n";
    }
    arr.push_back(rows[i]);
  }
  out << arr.dump(1) << "\n";
  return kOk;
}

// Argument parsing and dispatch.

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  std::string color_text = "1";
  CLI::App app{"Torus knot superpolynomials and their combinatorial models"};
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);

  auto knot_options = [&](CLI::App* sub, bool pair_required) {
    auto* on = sub->add_option("-n", cfg.n, "first torus knot parameter");
    auto* om = sub->add_option("-m", cfg.m, "second torus knot parameter");
    if (pair_required) {
      on->required();
      om->required();
    }
    sub->add_option("--format", cfg.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* super = app.add_subcommand("super", "superpolynomial P~_{n,m} (or P with --cherednik)");
  knot_options(super, true);
  super->add_option("--color", color_text, "color partition, e.g. 2 or 1,1");
  super->add_option("--method", cfg.method, "syt, tesler, combinatorial, operator, theorem or all")
      ->check(CLI::IsMember({"syt", "tesler", "combinatorial", "operator", "theorem", "all"}));
  super->add_option("--subst", cfg.subst, "substitution: u=0, t=1, q=1, t=qinv, t=tinv (repeatable)");
  super->add_option("--cache", cfg.cache, "results cache file");
  super->add_flag("--cherednik", cfg.cherednik, "print P = (-q)^{n|lam|} P~(u,q,1/t)");

  auto* catalan = app.add_subcommand("catalan", "rational q,t-Catalan number from Dyck paths");
  knot_options(catalan, true);
  catalan->add_option("--subst", cfg.subst, "substitution (repeatable)");
  auto* schroeder = app.add_subcommand("schroeder", "Schroeder sum over Dyck paths with the beta statistic");
  knot_options(schroeder, true);
  schroeder->add_option("--subst", cfg.subst, "substitution (repeatable)");
  auto* shuffle = app.add_subcommand("shuffle", "Hikita's Fr_{n,m} in the Schur basis");
  knot_options(shuffle, true);
  auto* tesler = app.add_subcommand("tesler", "list m/n Tesler matrices with weights");
  knot_options(tesler, true);
  auto* cells = app.add_subcommand("cells", "m-stable affine permutations and cell dimensions");
  knot_options(cells, true);

  auto* verify = app.add_subcommand("verify", "run identity and conjecture suites");
  knot_options(verify, false);
  verify->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max", cfg.max, "upper bound on m in pair ranges");
  verify->add_option("--color", color_text, "color partition for the duality suite");

  auto* table = app.add_subcommand("table", "JSON table of superpolynomials");
  table->add_option("--max", cfg.max, "include coprime pairs with n + m <= max (default 8)");
  table->add_option("--pair", cfg.pairs, "explicit pair n,m (repeatable)");
  table->add_option("--subst", cfg.subst, "substitution (repeatable)");
  table->add_option("--method", cfg.method, "route")->check(CLI::IsMember({"syt", "tesler", "combinatorial", "operator", "theorem", "all"}));
  table->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  table->add_option("--cache", cfg.cache, "results cache file");
  table->add_flag("--cherednik", cfg.cherednik, "tabulate P instead of P~");

  std::vector<std::string> argv_store{"superpoly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.color = Partition::parse(color_text);
    cfg.have_pair = cfg.n != 0 || cfg.m != 0;
    if (cfg.have_pair && cfg.command != "table") models::require_coprime(cfg.n, cfg.m);
    ResultCache cache(cfg.cache);
    int code = kOk;
    if (cfg.command == "super") code = cmd_super(cfg, cache, out, err);
    else if (cfg.command == "catalan") code = cmd_polynomial(cfg, "dyck", models::catalan_qt(cfg.n, cfg.m), out);
    else if (cfg.command == "schroeder") code = cmd_polynomial(cfg, "dyck", models::schroeder_sum(cfg.n, cfg.m), out);
    else if (cfg.command == "shuffle") code = cmd_shuffle(cfg, out);
    else if (cfg.command == "tesler") code = cmd_tesler(cfg, out);
    else if (cfg.command == "cells") code = cmd_cells(cfg, out);
    else if (cfg.command == "verify") code = cmd_verify(cfg, out, err);
    else if (cfg.command == "table") code = cmd_table(cfg, cache, out, err);
    cache.save();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotCoprime ? kNotCoprime : kFailure;
  }
}

}  // namespace superpoly::cli
