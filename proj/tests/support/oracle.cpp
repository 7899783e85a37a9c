#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using namespace easp;

bool sat(const Literal& l, const World& at, const Worlds& c) {
  if (auto* o = std::get_if<ObjLiteral>(&l)) return at.count(to_string(*o)) > 0;
  if (auto* s = std::get_if<SubjLiteral>(&l)) {
    const std::string a = to_string(s->inner);
    auto has = [&](const World& w) { return w.count(a) > 0; };
    if (s->modality == Modality::kKnow) return std::all_of(c.begin(), c.end(), has);
    return std::any_of(c.begin(), c.end(), has);
  }
  return std::get<Constant>(l).value;
}

bool sat(const ExtLiteral& l, const World& at, const Worlds& c) {
  bool v = sat(l.base, at, c);
  for (int i = 0; i < l.naf_depth; ++i) v = !v;
  return v;
}

bool sat(const Rule& r, const World& at, const Worlds& c) {
  for (const ExtLiteral& b : r.body)
    if (!sat(b, at, c)) return true;
  for (const Literal& h : r.head)
    if (sat(h, at, c)) return true;
  return false;
}

bool sat(const Program& p, const World& at, const Worlds& c) {
  for (const Rule& r : p.rules)
    if (!sat(r, at, c)) return false;
  return true;
}

bool model(const Program& p, const Worlds& c) {
  for (const World& w : c)
    if (!sat(p, w, c)) return false;
  return true;
}

Program easp_reduct(const Program& p, const World& at, const Worlds& c) {
  Program out = p;
  for (Rule& r : out.rules)
    for (ExtLiteral& b : r.body)
      if (b.naf_depth > 0) b = ExtLiteral{Constant{sat(b, at, c)}, 0, {}};
  return out;
}

Program es94_reduct(const Program& p, const Worlds& c) {
  Program out = p;
  for (Rule& r : out.rules) {
    for (ExtLiteral& b : r.body)
      if (std::holds_alternative<SubjLiteral>(b.base))
        b = ExtLiteral{Constant{sat(b, World{}, c)}, 0, {}};
    for (Literal& h : r.head)
      if (std::holds_alternative<SubjLiteral>(h)) h = Constant{sat(h, World{}, c)};
  }
  return out;
}

std::vector<World> subsets(const World& w) {
  std::vector<std::string> atoms(w.begin(), w.end());
  std::vector<World> out;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms.size()); ++m) {
    World s;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((m >> i) & 1) s.insert(atoms[i]);
    out.push_back(s);
  }
  return out;
}

std::vector<World> worlds(const std::vector<std::string>& atoms) {
  return subsets(World(atoms.begin(), atoms.end()));
}

namespace {

std::vector<Worlds> nonempty_subfamilies(const std::vector<World>& ws) {
  std::vector<Worlds> out;
  for (std::size_t m = 1; m < (std::size_t{1} << ws.size()); ++m) {
    Worlds f;
    for (std::size_t i = 0; i < ws.size(); ++i)
      if ((m >> i) & 1) f.push_back(ws[i]);
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

// Calls fn(choice) for every element of the product of the option lists.
template <typename T, typename Fn>
bool any_product(const std::vector<std::vector<T>>& options, Fn&& fn) {
  std::vector<std::size_t> idx(options.size(), 0);
  for (;;) {
    std::vector<T> choice;
    for (std::size_t i = 0; i < options.size(); ++i) choice.push_back(options[i][idx[i]]);
    if (fn(choice)) return true;
    std::size_t i = 0;
    for (; i < options.size(); ++i) {
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
    }
    if (i == options.size()) return false;
  }
}

Worlds distinct(Worlds c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

std::vector<Worlds> collections(const std::vector<std::string>& atoms) {
  return nonempty_subfamilies(worlds(atoms));
}

std::vector<Worlds> families(const World& w) { return nonempty_subfamilies(subsets(w)); }

std::vector<World> answer_sets(const Program& p, const std::vector<std::string>& atoms) {
  std::vector<World> out;
  for (const World& t : worlds(atoms)) {
    const Program r = easp_reduct(p, t, {t});
    if (!sat(r, t, {t})) continue;
    bool minimal = true;
    for (const World& h : subsets(t))
      if (h != t && sat(r, h, {h})) minimal = false;
    if (minimal) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tmin_perpoint_f(const Program& p, const Worlds& c_in) {
  const Worlds c = distinct(c_in);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Program r = easp_reduct(p, c[i], c);
    if (!sat(r, c[i], c)) return false;
    for (const World& h : subsets(c[i])) {
      if (h == c[i]) continue;
      Worlds w = c;
      w[i] = h;
      if (sat(r, h, w)) return false;
    }
  }
  return true;
}

bool tmin_perpoint_r(const Program& p, const Worlds& c_in, bool universal) {
  const Worlds c = distinct(c_in);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Program r = easp_reduct(p, c[i], c);
    if (!sat(r, c[i], c)) return false;
    for (const Worlds& s : families(c[i])) {
      if (s == Worlds{c[i]}) continue;
      Worlds w;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != i) w.push_back(c[j]);
      w.insert(w.end(), s.begin(), s.end());
      auto fails = [&](const World& h) { return !sat(r, h, w); };
      const bool refuted = universal ? std::all_of(s.begin(), s.end(), fails)
                                     : std::any_of(s.begin(), s.end(), fails);
      if (!refuted) return false;
    }
  }
  return true;
}

bool tmin_global_f(const Program& p, const Worlds& c_in) {
  const Worlds c = distinct(c_in);
  std::vector<Program> rs;
  std::vector<std::vector<World>> options;
  for (const World& t : c) {
    rs.push_back(easp_reduct(p, t, c));
    if (!sat(rs.back(), t, c)) return false;
    options.push_back(subsets(t));
  }
  return !any_product(options, [&](const std::vector<World>& w) {
    if (w == c) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!sat(rs[i], w[i], w)) return false;
    return true;
  });
}

bool tmin_global_r(const Program& p, const Worlds& c_in) {
  const Worlds c = distinct(c_in);
  std::vector<Program> rs;
  std::vector<std::vector<Worlds>> options;
  for (const World& t : c) {
    rs.push_back(easp_reduct(p, t, c));
    if (!sat(rs.back(), t, c)) return false;
    options.push_back(families(t));
  }
  return !any_product(options, [&](const std::vector<Worlds>& s) {
    bool identity = true;
    Worlds w;
    for (std::size_t i = 0; i < c.size(); ++i) {
      identity &= s[i] == Worlds{c[i]};
      w.insert(w.end(), s[i].begin(), s[i].end());
    }
    if (identity) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (const World& h : s[i])
        if (!sat(rs[i], h, w)) return false;
    return true;
  });
}

bool belief_stable(const Program& p, const Worlds& c, const std::vector<std::string>& atoms,
                   bool reflexive) {
  auto view = [&](const World& x) {
    Worlds v = c;
    if (reflexive) v.push_back(x);
    return v;
  };
  for (const World& i : worlds(atoms)) {
    if (std::find(c.begin(), c.end(), i) != c.end()) continue;
    const Program r = easp_reduct(p, i, view(i));
    if (!sat(r, i, view(i))) continue;
    bool shrinkable = false;
    for (const World& h : subsets(i))
      if (h != i && sat(r, h, view(h))) shrinkable = true;
    if (!shrinkable) return false;
  }
  return true;
}

bool es94_world_view(const Program& p, const Worlds& c, const std::vector<std::string>& atoms) {
  return distinct(c) == answer_sets(es94_reduct(p, c), atoms);
}

// {{{ EHT

using eht::Formula;
using eht::Op;

bool eht_total(const Formula& f, const World& t, const Worlds& theres) {
  switch (f.op()) {
    case Op::kAtom: return t.count(f.name()) > 0;
    case Op::kBottom: return false;
    case Op::kAnd: return eht_total(f.left(), t, theres) && eht_total(f.right(), t, theres);
    case Op::kOr: return eht_total(f.left(), t, theres) || eht_total(f.right(), t, theres);
    case Op::kImplies: return !eht_total(f.left(), t, theres) || eht_total(f.right(), t, theres);
    case Op::kKnow:
      for (const World& u : theres)
        if (!eht_total(f.child(), u, theres)) return false;
      return true;
    case Op::kPossible:
      for (const World& u : theres)
        if (eht_total(f.child(), u, theres)) return true;
      return false;
  }
  throw std::logic_error("bad formula");
}

bool eht_here(const Formula& f, const World& h, const World& t, const std::vector<Pair>& m) {
  Worlds theres;
  for (const Pair& p : m) theres.push_back(p.there);
  switch (f.op()) {
    case Op::kAtom: return h.count(f.name()) > 0;
    case Op::kBottom: return false;
    case Op::kAnd: return eht_here(f.left(), h, t, m) && eht_here(f.right(), h, t, m);
    case Op::kOr: return eht_here(f.left(), h, t, m) || eht_here(f.right(), h, t, m);
    case Op::kImplies:
      return (!eht_here(f.left(), h, t, m) || eht_here(f.right(), h, t, m)) &&
             (!eht_total(f.left(), t, theres) || eht_total(f.right(), t, theres));
    case Op::kKnow:
      for (const Pair& p : m)
        if (!eht_here(f.child(), p.here, p.there, m)) return false;
      return true;
    case Op::kPossible:
      for (const Pair& p : m)
        if (eht_here(f.child(), p.here, p.there, m)) return true;
      return false;
  }
  throw std::logic_error("bad formula");
}

bool eem_f(const Formula& f, const Worlds& c_in) {
  const Worlds c = distinct(c_in);
  for (const World& t : c)
    if (!eht_total(f, t, c)) return false;
  std::vector<std::vector<World>> options;
  for (const World& t : c) options.push_back(subsets(t));
  return !any_product(options, [&](const std::vector<World>& w) {
    if (w == c) return false;
    std::vector<Pair> m;
    for (std::size_t i = 0; i < c.size(); ++i) m.push_back({w[i], c[i]});
    for (const Pair& p : m)
      if (!eht_here(f, p.here, p.there, m)) return false;
    return true;
  });
}

bool eem_r(const Formula& f, const Worlds& c_in) {
  const Worlds c = distinct(c_in);
  for (const World& t : c)
    if (!eht_total(f, t, c)) return false;
  std::vector<std::vector<Worlds>> options;
  for (const World& t : c) options.push_back(families(t));
  return !any_product(options, [&](const std::vector<Worlds>& s) {
    std::vector<Pair> m;
    bool identity = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      identity &= s[i] == Worlds{c[i]};
      for (const World& h : s[i]) m.push_back({h, c[i]});
    }
    if (identity) return false;
    for (const Pair& p : m)
      if (!eht_here(f, p.here, p.there, m)) return false;
    return true;
  });
}

// }}}

}  // namespace oracle
