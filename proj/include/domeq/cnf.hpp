#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domeq/error.hpp"

namespace domeq {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula over variables 1..num_vars. Every clause has three literals
/// over three distinct variables, and there is at least one clause.
class CnfFormula {
 public:
  CnfFormula(int num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 3) throw Error("3-CNF formula needs at least 3 variables");
    if (clauses_.empty()) throw Error("3-CNF formula needs at least one clause");
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
      const auto& c = clauses_[j];
      for (const auto& lit : c) {
        if (lit.var < 1 || lit.var > num_vars_) {
          throw Error("clause " + std::to_string(j + 1) + ": variable " + std::to_string(lit.var) + " out of range");
        }
      }
      if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
        throw Error("clause " + std::to_string(j + 1) + " repeats a variable");
      }
    }
  }

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

/// assignment[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

inline bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses()) {
    bool sat = false;
    for (const auto& lit : c) sat = sat || (a.at(lit.var - 1) == lit.positive);
    if (!sat) return false;
  }
  return true;
}

inline constexpr int kSatVariableLimit = 20;

/// Exhaustive satisfiability check. Refuses formulas over more than 20 variables.
inline std::optional<Assignment> cnf_satisfiable(const CnfFormula& f) {
  if (f.num_vars() > kSatVariableLimit) {
    throw SizeGuardError("cnf_satisfiable: too many variables", kSatVariableLimit, f.num_vars());
  }
  // Clause j is falsified by x iff (x & vars) == falsifying pattern.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : f.clauses()) {
    std::uint32_t vars = 0, pattern = 0;
    for (const auto& lit : c) {
      vars |= std::uint32_t{1} << (lit.var - 1);
      if (!lit.positive) pattern |= std::uint32_t{1} << (lit.var - 1);
    }
    masks.push_back({vars, pattern});
  }
  const std::uint32_t limit = std::uint32_t{1} << f.num_vars();
  for (std::uint32_t x = 0; x < limit; ++x) {
    bool ok = true;
    for (auto [vars, pattern] : masks) {
      if ((x & vars) == pattern) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(f.num_vars());
      for (int i = 0; i < f.num_vars(); ++i) a[i] = (x >> i) & 1U;
      return a;
    }
  }
  return std::nullopt;
}

/// For every three variables some clause mentions none of them. Under this
/// condition the 3-SAT reduction is an equivalence.
inline bool triple_cover_holds(const CnfFormula& f) {
  const int k = f.num_vars();
  auto avoids = [](const Clause& c, int a, int b, int d) {
    for (const auto& lit : c) {
      if (lit.var == a || lit.var == b || lit.var == d) return false;
    }
    return true;
  };
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int d = b + 1; d <= k; ++d) {
        bool avoided = false;
        for (const auto& c : f.clauses()) {
          if (avoids(c, a, b, d)) {
            avoided = true;
            break;
          }
        }
        if (!avoided) return false;
      }
  return true;
}

}  // namespace domeq
