#ifndef REACHLIE_CATALOG_HPP
#define REACHLIE_CATALOG_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "reachlie/diagram.hpp"
#include "reachlie/roots.hpp"

namespace reachlie {

/// Ground-truth row for one nilpotent orbit: Bala-Carter label, diagram in
/// Bourbaki order, rigidity and the expected verdict flags, each with a
/// provenance string naming its source table.
struct CatalogEntry
{
  LieType type;
  std::string label;
  WeightedDynkinDiagram diagram;
  bool rigid = false;
  bool expected_reachable = false;
  bool expected_strong = false;
  std::string provenance;
};

struct RigidNonStrongEntry
{
  LieType type;
  std::string label;
  std::size_t dim_centralizer = 0;
  std::size_t dim_derived = 0;
};

/// Minimal computed-verdict view consumed by the catalog checks; the
/// reachability layer produces these.
struct VerdictSummary
{
  WeightedDynkinDiagram diagram;
  std::string label;
  bool reachable = false;
  bool strongly_reachable = false;
  bool rigid = false;
  std::size_t dim_centralizer = 0;
  std::size_t dim_derived = 0;
};

class CatalogError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline std::string default_catalog_dir()
{
#ifdef REACHLIE_DATA_DIR
  return REACHLIE_DATA_DIR;
#else
  return "data/catalog";
#endif
}

/// Parse one catalog file, line format
///   type | label | d1 d2 ... dn | rigid | reachable | strong | provenance
/// with '#' comments. Malformed input raises CatalogError with file and line.
inline std::vector<CatalogEntry> load_catalog(const LieType& t,
                                              const std::string& dir = default_catalog_dir())
{
  const std::string path = dir + "/" + t.name() + ".cat";
  std::ifstream in(path);
  if (!in)
    throw CatalogError("catalog: cannot open " + path);
  std::vector<CatalogEntry> out;
  std::set<std::vector<int>> seen;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw CatalogError("catalog: " + path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto notspace = line.find_first_not_of(" \t\r");
    if (notspace == std::string::npos)
      continue;
    std::vector<std::string> fields;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, '|')) {
      auto b = cur.find_first_not_of(" \t\r");
      auto e = cur.find_last_not_of(" \t\r");
      fields.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    if (fields.size() != 7)
      fail("expected 7 '|'-separated fields, got " + std::to_string(fields.size()));
    if (fields[0] != t.name())
      fail("type field '" + fields[0] + "' does not match " + t.name());
    if (fields[1].empty())
      fail("empty label");
    std::vector<int> weights;
    {
      std::stringstream ws(fields[2]);
      int v;
      while (ws >> v) {
        if (v < 0 || v > 2)
          fail("diagram weight out of {0,1,2}");
        weights.push_back(v);
      }
      if (weights.size() != static_cast<std::size_t>(t.rank))
        fail("expected " + std::to_string(t.rank) + " diagram weights");
    }
    auto parse_flag = [&](const std::string& s, const char* what) {
      if (s == "1")
        return true;
      if (s == "0")
        return false;
      fail(std::string(what) + " flag must be 0 or 1");
      return false;
    };
    CatalogEntry entry{t,
                       fields[1],
                       WeightedDynkinDiagram(weights),
                       parse_flag(fields[3], "rigid"),
                       parse_flag(fields[4], "reachable"),
                       parse_flag(fields[5], "strong"),
                       fields[6]};
    if (entry.expected_strong && !entry.expected_reachable)
      fail("strong orbit not marked reachable");
    if (!seen.insert(weights).second)
      fail("duplicate diagram");
    out.push_back(std::move(entry));
  }
  if (out.empty())
    throw CatalogError("catalog: " + path + " has no entries");
  return out;
}

/// Result of checking "strongly reachable iff reachable and rigid" plus
/// verdict/catalog coverage.
struct TheoremReport
{
  bool passed = true;
  std::vector<std::string> problems;

  void fail(std::string msg)
  {
    passed = false;
    problems.push_back(std::move(msg));
  }
};

inline TheoremReport verify_theorem(const LieType& t,
                                    const std::vector<VerdictSummary>& verdicts,
                                    const std::vector<CatalogEntry>& catalog)
{
  TheoremReport rep;
  std::map<std::vector<int>, const CatalogEntry*> by_diagram;
  for (const CatalogEntry& e : catalog)
    by_diagram[e.diagram.weights] = &e;
  std::set<std::vector<int>> seen;
  for (const VerdictSummary& v : verdicts) {
    auto it = by_diagram.find(v.diagram.weights);
    if (it == by_diagram.end()) {
      rep.fail(t.name() + ": computed orbit [" + v.diagram.str() + "] missing from catalog");
      continue;
    }
    seen.insert(v.diagram.weights);
    const CatalogEntry& c = *it->second;
    bool expected = v.reachable && c.rigid;
    if (v.strongly_reachable != expected)
      rep.fail(t.name() + " " + c.label + " [" + v.diagram.str() +
               "]: strongly_reachable=" + (v.strongly_reachable ? "1" : "0") +
               " but reachable&rigid=" + (expected ? "1" : "0"));
  }
  for (const CatalogEntry& e : catalog)
    if (!seen.count(e.diagram.weights))
      rep.fail(t.name() + ": catalog orbit " + e.label + " [" + e.diagram.str() +
               "] missing from computed verdicts");
  return rep;
}

/// The rigid orbits that are not strongly reachable, with their computed
/// (dim g_e, dim [g_e, g_e]) pairs, diagram-sorted.
inline std::vector<RigidNonStrongEntry>
rigid_nonstrong_report(const LieType& t, const std::vector<VerdictSummary>& verdicts,
                       const std::vector<CatalogEntry>& catalog)
{
  std::map<std::vector<int>, const CatalogEntry*> by_diagram;
  for (const CatalogEntry& e : catalog)
    by_diagram[e.diagram.weights] = &e;
  std::vector<RigidNonStrongEntry> out;
  for (const VerdictSummary& v : verdicts) {
    auto it = by_diagram.find(v.diagram.weights);
    if (it == by_diagram.end())
      continue;
    if (it->second->rigid && !v.strongly_reachable)
      out.push_back(RigidNonStrongEntry{t, it->second->label, v.dim_centralizer, v.dim_derived});
  }
  return out;
}

} // namespace reachlie

#endif
