#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "easp/classical.hpp"
#include "easp/syntax.hpp"
#include "oracle.hpp"

namespace testing_support {

using AtomLists = std::vector<std::vector<std::string>>;

inline std::string fixture_path(const std::string& name) {
  return std::string(EASP_FIXTURE_DIR) + "/" + name;
}

inline easp::Program fixture(const std::string& name) {
  return easp::parse_program_file(fixture_path(name));
}

inline easp::Collection coll(const easp::Signature& sig, const AtomLists& points) {
  std::vector<easp::Valuation> pts;
  for (const auto& p : points) pts.push_back(easp::parse_valuation(p, sig));
  return easp::Collection(std::move(pts));
}

inline easp::Valuation val(const easp::Signature& sig, const std::vector<std::string>& atoms) {
  return easp::parse_valuation(atoms, sig);
}

// Order-free view of a list of collections.
inline std::set<AtomLists> as_set(const std::vector<easp::Collection>& cs,
                                  const easp::Signature& sig) {
  std::set<AtomLists> out;
  for (const auto& c : cs) out.insert(easp::to_atom_lists(c, sig));
  return out;
}

inline oracle::Worlds worlds_of(const easp::Collection& c, const easp::Signature& sig) {
  oracle::Worlds out;
  for (easp::Valuation v : c.points()) {
    oracle::World w;
    for (std::size_t i = 0; i < sig.size(); ++i)
      if (v.contains(i)) w.insert(sig.name(i));
    out.push_back(w);
  }
  return out;
}

inline easp::Collection from_worlds(const oracle::Worlds& ws, const easp::Signature& sig) {
  std::vector<easp::Valuation> pts;
  for (const auto& w : ws) pts.push_back(easp::parse_valuation({w.begin(), w.end()}, sig));
  return easp::Collection(std::move(pts));
}

inline AtomLists lists_of(const oracle::Worlds& ws) {
  AtomLists out;
  for (const auto& w : ws) out.emplace_back(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace testing_support
