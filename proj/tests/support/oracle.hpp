// Brute-force reference implementations, written directly against the AST
// with worlds as sets of atom names. They share no evaluation code with the
// library and are only meant for tiny signatures.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "easp/eht.hpp"
#include "easp/syntax.hpp"

namespace oracle {

using World = std::set<std::string>;
using Worlds = std::vector<World>;

bool sat(const easp::Literal& l, const World& at, const Worlds& c);
bool sat(const easp::ExtLiteral& l, const World& at, const Worlds& c);
bool sat(const easp::Rule& r, const World& at, const Worlds& c);
bool sat(const easp::Program& p, const World& at, const Worlds& c);
bool model(const easp::Program& p, const Worlds& c);

// Literals under naf become truth constants at (at, c).
easp::Program easp_reduct(const easp::Program& p, const World& at, const Worlds& c);
// Subjective literals (with any naf prefix) become truth constants over c.
easp::Program es94_reduct(const easp::Program& p, const Worlds& c);

std::vector<World> subsets(const World& w);
std::vector<World> worlds(const std::vector<std::string>& atoms);
// Every nonempty set of worlds over the atoms, each sorted.
std::vector<Worlds> collections(const std::vector<std::string>& atoms);
// Nonempty sets of subsets of w.
std::vector<Worlds> families(const World& w);

std::vector<World> answer_sets(const easp::Program& p, const std::vector<std::string>& atoms);

bool tmin_perpoint_f(const easp::Program& p, const Worlds& c);
bool tmin_perpoint_r(const easp::Program& p, const Worlds& c, bool universal = false);
bool tmin_global_f(const easp::Program& p, const Worlds& c);
bool tmin_global_r(const easp::Program& p, const Worlds& c);

bool belief_stable(const easp::Program& p, const Worlds& c, const std::vector<std::string>& atoms,
                   bool reflexive);

bool es94_world_view(const easp::Program& p, const Worlds& c,
                     const std::vector<std::string>& atoms);

// EHT on the formula tree. A model is a list of (here, there) pairs.
struct Pair {
  World here;
  World there;
};
bool eht_here(const easp::eht::Formula& f, const World& h, const World& t,
              const std::vector<Pair>& model);
bool eht_total(const easp::eht::Formula& f, const World& t, const Worlds& theres);
bool eem_f(const easp::eht::Formula& f, const Worlds& c);
bool eem_r(const easp::eht::Formula& f, const Worlds& c);

}  // namespace oracle
