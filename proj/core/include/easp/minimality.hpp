// Truth-minimality: functional and relational weakenings, checked point by
// point or globally.
//
// All checks take the reduct of each point with respect to the original
// pointed collection; weakening never re-takes the reduct.

#pragma once

#include <cstddef>
#include <vector>

#include "easp/classical.hpp"

namespace easp {

enum class TVariant { kFunctional, kRelational };
enum class TScope { kPerPoint, kGlobal };

// How a relational weakening at a point is refuted: by some replacement point
// (the default) or by all of them.
enum class Refutation { kExistential, kUniversal };

struct TMinOptions {
  TVariant variant = TVariant::kFunctional;
  TScope scope = TScope::kPerPoint;
  Refutation refutation = Refutation::kExistential;
};

// A subset function: one subset per point (image[i] within point i).
struct WeakeningF {
  std::vector<Valuation> image;
};

// A serial multi-valued subset function: a nonempty set of subsets per point.
struct WeakeningR {
  std::vector<std::vector<Valuation>> images;

  // Indexed family of all images, point by point.
  Collection collection() const;
};

struct PointedWeakening {
  Collection collection;
  std::size_t point;
};

struct RelationalWeakening {
  Collection collection;
  std::vector<std::size_t> points;  // indices of the replacement points
};

// One weakening per strict subset of point i (in increasing mask order).
std::vector<PointedWeakening> f_weakenings_at(const Collection& c, std::size_t i);

// One weakening per nonempty set S of subsets of point i that contains a
// strict subset; point i is replaced in place by the members of S.
std::vector<RelationalWeakening> r_weakenings_at(const Collection& c, std::size_t i);

// easp_reduct of p at every point of c.
std::vector<EncodedProgram> point_reducts(const EncodedProgram& p, const Collection& c);

bool is_t_minimal_perpoint(const EncodedProgram& p, const Collection& c, TVariant variant,
                           Refutation refutation = Refutation::kExistential);
bool is_t_minimal_global(const EncodedProgram& p, const Collection& c, TVariant variant);
bool is_t_minimal(const EncodedProgram& p, const Collection& c, const TMinOptions& opt);

struct TMinResult {
  std::vector<Collection> models;
  std::uint64_t candidates_checked = 0;
};

TMinResult t_minimal_models(const EncodedProgram& p, std::size_t atoms, const TMinOptions& opt,
                            std::size_t cap = kDefaultSignatureCap, unsigned jobs = 1);

// AST conveniences: strong negation is eliminated and the program signature
// is used; collections are over that signature.
bool is_t_minimal_perpoint(const Program& p, const Collection& c, TVariant variant);
bool is_t_minimal_global(const Program& p, const Collection& c, TVariant variant);
std::vector<Collection> t_minimal_models(const Program& p, TVariant variant, TScope scope,
                                         std::size_t cap = kDefaultSignatureCap);

}  // namespace easp
