#include "starfree/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace starfree {

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool header = false;
  int declared_clauses = 0;
  std::vector<int> current;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (header || !(ls >> kind) || kind != "cnf" ||
          !(ls >> f.num_vars >> declared_clauses) || f.num_vars < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": malformed DIMACS header");
      header = true;
      continue;
    }
    if (!header)
      throw ParseError("line " + std::to_string(lineno) +
                       ": clause before \"p cnf\" header");
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.num_vars)
          throw ParseError("line " + std::to_string(lineno) +
                           ": literal out of range");
        current.push_back(lit);
      }
    }
    if (!ls.eof())
      throw ParseError("line " + std::to_string(lineno) + ": bad token");
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!current.empty())
    throw ParseError("last clause is not terminated by 0");
  if (declared_clauses != static_cast<int>(f.clauses.size()))
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

std::string format_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

void validate_2p1n(const CnfFormula& f) {
  std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    if (c.size() < 2 || c.size() > 3)
      throw ValidationError("clause " + std::to_string(i + 1) + " has size " +
                            std::to_string(c.size()) + ", want 2 or 3");
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw ValidationError("clause " + std::to_string(i + 1) +
                              " has an out-of-range literal");
      (lit > 0 ? pos : neg)[std::abs(lit)] += 1;
    }
  }
  for (int v = 1; v <= f.num_vars; ++v)
    if (pos[v] != 2 || neg[v] != 1)
      throw ValidationError("variable " + std::to_string(v) + " occurs " +
                            std::to_string(pos[v]) + "x positively and " +
                            std::to_string(neg[v]) +
                            "x negatively, want 2 and 1");
}

namespace {

enum : int { kUnset = -1 };

bool dpll(const std::vector<std::vector<int>>& clauses,
          std::vector<int>& value) {
  // unit propagation to fixpoint
  std::vector<std::pair<int, int>> trail;  // (var, previous value)
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : clauses) {
      int unassigned = 0, last = 0;
      bool satisfied = false;
      for (int lit : c) {
        const int v = std::abs(lit);
        if (value[v] == kUnset) {
          ++unassigned;
          last = lit;
        } else if (value[v] == (lit > 0 ? 1 : 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) {  // conflict
        for (auto it = trail.rbegin(); it != trail.rend(); ++it)
          value[it->first] = it->second;
        return false;
      }
      if (unassigned == 1) {
        const int v = std::abs(last);
        trail.emplace_back(v, value[v]);
        value[v] = last > 0 ? 1 : 0;
        changed = true;
      }
    }
  }
  int branch = 0;
  for (std::size_t v = 1; v < value.size(); ++v)
    if (value[v] == kUnset) {
      branch = static_cast<int>(v);
      break;
    }
  if (branch == 0) return true;
  for (int b : {1, 0}) {
    value[branch] = b;
    if (dpll(clauses, value)) return true;
  }
  value[branch] = kUnset;
  for (auto it = trail.rbegin(); it != trail.rend(); ++it)
    value[it->first] = it->second;
  return false;
}

}  // namespace

std::optional<std::vector<bool>> sat_solve(const CnfFormula& f) {
  for (const auto& c : f.clauses)
    if (c.empty()) return std::nullopt;
  std::vector<int> value(f.num_vars + 1, kUnset);
  if (!dpll(f.clauses, value)) return std::nullopt;
  std::vector<bool> out(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v) out[v - 1] = value[v] == 1;
  return out;
}

std::optional<std::vector<bool>> sat_2p1n(const CnfFormula& f) {
  validate_2p1n(f);
  return sat_solve(f);
}

CnfFormula random_2p1n(int num_vars, std::uint64_t seed) {
  if (num_vars < 2) throw ValidationError("random_2p1n needs >= 2 variables");
  std::uint64_t state = seed;
  auto next = [&]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<int> tokens;
  for (int v = 1; v <= num_vars; ++v) {
    tokens.push_back(v);
    tokens.push_back(v);
    tokens.push_back(-v);
  }
  for (std::size_t i = tokens.size(); i > 1; --i)
    std::swap(tokens[i - 1], tokens[next() % i]);
  // clause sizes: 3s with an occasional block of three 2s (keeps the total
  // token count 3n)
  std::vector<int> sizes;
  int remaining = 3 * num_vars;
  while (remaining > 0) {
    if (remaining >= 6 && next() % 4 == 0) {
      sizes.insert(sizes.end(), {2, 2, 2});
      remaining -= 6;
    } else {
      sizes.push_back(3);
      remaining -= 3;
    }
  }
  CnfFormula f;
  f.num_vars = num_vars;
  std::size_t at = 0;
  for (int s : sizes) {
    f.clauses.emplace_back(tokens.begin() + at, tokens.begin() + at + s);
    at += s;
  }
  return f;
}

std::uint64_t formula_digest(const CnfFormula& f) {
  // FNV-1a over the canonical DIMACS text
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_dimacs(f)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace starfree
