#pragma once

// Symmetric functions with coefficients in Q(q,t), stored as a sparse map
// from partitions to coefficients in one named basis.

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "superpoly/algebra/ratqt.hpp"
#include "superpoly/errors.hpp"
#include "superpoly/young/partition.hpp"

namespace superpoly::symfunc {

using algebra::Rat;
using algebra::RatQT;
using young::Partition;
using young::partitions;

enum class Basis { p, m, e, h, s, P, J, Htilde };

inline std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::P: return "P";
    case Basis::J: return "J";
    case Basis::Htilde: return "Htilde";
  }
  return "?";
}

inline Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::p, Basis::m, Basis::e, Basis::h, Basis::s, Basis::P, Basis::J, Basis::Htilde}) {
    if (basis_name(b) == name) return b;
  }
  if (name == "H" || name == "H~") return Basis::Htilde;
  fail(ErrorKind::Parse, "unknown basis '" + std::string(name) + "'");
}

/// Largest degree any basis conversion will accept.
inline std::atomic<int>& degree_bound() {
  static std::atomic<int> bound{12};
  return bound;
}

inline void check_degree(int d) {
  if (d > degree_bound().load())
    fail(ErrorKind::DegreeBound, "degree " + std::to_string(d) + " exceeds bound " + std::to_string(degree_bound().load()));
}

using Terms = std::map<Partition, RatQT>;

inline void add_to(Terms& terms, const Partition& lam, const RatQT& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

class SymFunc {
 public:
  explicit SymFunc(Basis b = Basis::p) : basis_(b) {}
  SymFunc(Basis b, Terms terms) : basis_(b) {
    for (auto& [lam, c] : terms) add_term(lam, c);
  }
  static SymFunc element(Basis b, const Partition& lam, const RatQT& c = RatQT(1)) {
    SymFunc f(b);
    f.add_term(lam, c);
    return f;
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatQT coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatQT() : it->second;
  }
  void add_term(const Partition& lam, const RatQT& c) { add_to(terms_, lam, c); }

  std::set<int> degrees() const {
    std::set<int> d;
    for (const auto& [lam, c] : terms_) d.insert(lam.size());
    return d;
  }
  int max_degree() const { return terms_.empty() ? 0 : *degrees().rbegin(); }
  SymFunc component(int d) const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_) {
      if (lam.size() == d) r.terms_.emplace(lam, c);
    }
    return r;
  }

  SymFunc& operator+=(const SymFunc& o) {
    same_basis(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    same_basis(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const RatQT& s, const SymFunc& f) {
    SymFunc r(f.basis_);
    if (s.is_zero()) return r;
    for (const auto& [lam, c] : f.terms_) r.terms_.emplace(lam, s * c);
    return r;
  }
  template <class F>
  SymFunc map_coeffs(F fn) const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_) r.add_term(lam, fn(lam, c));
    return r;
  }

  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.basis_ == b.basis_ && a.terms_ == b.terms_; }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : terms_) {
      terms.push_back({{"partition", lam.parts()}, {"coeff", c.to_string()}});
    }
    return {{"basis", std::string(basis_name(basis_))}, {"terms", terms}};
  }
  static SymFunc from_json(const nlohmann::json& j) {
    try {
      SymFunc f(parse_basis(j.at("basis").get<std::string>()));
      for (const auto& term : j.at("terms")) {
        f.add_term(Partition(term.at("partition").get<std::vector<int>>()),
                   RatQT::parse(term.at("coeff").get<std::string>()));
      }
      return f;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::Parse, std::string("bad symmetric function JSON: ") + e.what());
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + std::string(basis_name(basis_)) + lam.to_string();
    }
    return out;
  }

 private:
  void same_basis(const SymFunc& o) {
    if (o.basis_ == basis_ || o.terms_.empty()) return;
    if (!terms_.empty()) fail(ErrorKind::ShapeMismatch, "adding symmetric functions in different bases");
    basis_ = o.basis_;
  }

  Basis basis_;
  Terms terms_;
};

/// Union of parts, i.e. the partition indexing p_a * p_b.
inline Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

/// Product of two functions given in the p basis.
inline SymFunc multiply_p(const SymFunc& a, const SymFunc& b) {
  if (a.basis() != Basis::p || b.basis() != Basis::p) fail(ErrorKind::ShapeMismatch, "multiply_p needs p-basis inputs");
  SymFunc r(Basis::p);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) r.add_term(join(la, lb), ca * cb);
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const SymFunc& x) { return os << x.to_string(); }

}  // namespace superpoly::symfunc
