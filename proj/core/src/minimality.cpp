#include "easp/minimality.hpp"

#include <algorithm>

#include "easp/parallel.hpp"
#include "easp/reducts.hpp"

namespace easp {

namespace {

// Calls fn(h) for every submask h of `mask`, in increasing order.
template <typename Fn>
void for_each_submask(std::uint32_t mask, Fn&& fn) {
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    subs.push_back(s);
    if (s == 0) break;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) fn(*it);
}

// Same, stopping as soon as fn returns true. Order is unspecified.
template <typename Fn>
bool any_submask(std::uint32_t mask, Fn&& fn) {
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    if (fn(s)) return true;
    if (s == 0) return false;
  }
}

ModalView view_without(const Collection& c, std::size_t skip) {
  ModalView v{~0u, 0u};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == skip) continue;
    v.known &= c[j].bits;
    v.possible |= c[j].bits;
  }
  return v;
}

std::vector<Valuation> allowed_subsets(const EncodedProgram& reduct, Valuation t, std::uint32_t k,
                                       std::uint32_t p) {
  std::vector<Valuation> out;
  const ModalView view{k, p};
  // k <= h <= p and h <= t
  if ((k & ~t.bits) != 0) return out;
  for_each_submask(t.bits & p & ~k, [&](std::uint32_t extra) {
    Valuation h{k | extra};
    if (holds(reduct, h, view)) out.push_back(h);
  });
  return out;
}

bool perpoint_functional_at(const EncodedProgram& r, const Collection& c, std::size_t i) {
  const Valuation t = c[i];
  const ModalView others = view_without(c, i);
  return !any_submask(t.bits, [&](std::uint32_t h) {
    if (h == t.bits) return false;
    return holds(r, Valuation{h}, ModalView{others.known & h, others.possible | h});
  });
}

// A relational weakening at point i that satisfies r at every replacement
// point exists iff, for some modal view (k, p), taking every admissible
// subset reproduces exactly that view and includes a strict subset. Adding
// admissible subsets only widens the view, so the maximal choice decides.
bool perpoint_relational_existential_at(const EncodedProgram& r, const Collection& c,
                                        std::size_t i) {
  const Valuation t = c[i];
  const ModalView others = view_without(c, i);
  const std::uint32_t k_cap = others.known & t.bits;
  const std::uint32_t p_free = t.bits & ~others.possible;
  bool witness = any_submask(k_cap, [&](std::uint32_t k) {
    return any_submask(p_free, [&](std::uint32_t p_extra) {
      const std::uint32_t p = others.possible | p_extra;
      if ((k & ~p) != 0) return false;
      auto allowed = allowed_subsets(r, t, k, p);
      bool strict = false;
      std::uint32_t a = others.known, o = others.possible;
      for (Valuation h : allowed) {
        strict |= h != t;
        a &= h.bits;
        o |= h.bits;
      }
      return strict && a == k && o == p;
    });
  });
  return !witness;
}

bool perpoint_relational_universal_at(const EncodedProgram& r, const Collection& c,
                                      std::size_t i) {
  for (const RelationalWeakening& w : r_weakenings_at(c, i)) {
    const ModalView view = ModalView::of(w.collection);
    bool refuted = std::all_of(w.points.begin(), w.points.end(), [&](std::size_t j) {
      return !holds(r, w.collection[j], view);
    });
    if (!refuted) return false;
  }
  return true;
}

struct GlobalSearch {
  const std::vector<EncodedProgram>& reducts;
  const Collection& c;

  // Some non-identity weakening (functional or relational) satisfies every
  // point's reduct at every weakened point.
  bool has_satisfying_weakening(TVariant variant) const {
    std::uint32_t all_and = ~0u, all_or = 0;
    for (Valuation t : c.points()) {
      all_and &= t.bits;
      all_or |= t.bits;
    }
    return any_submask(all_or, [&](std::uint32_t p) {
      return any_submask(all_and & p, [&](std::uint32_t k) {
        std::vector<std::vector<Valuation>> allowed(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) {
          allowed[j] = allowed_subsets(reducts[j], c[j], k, p);
          if (allowed[j].empty()) return false;
        }
        return variant == TVariant::kRelational ? relational_fits(allowed, k, p)
                                                : functional_fits(allowed, k, p);
      });
    });
  }

  bool relational_fits(const std::vector<std::vector<Valuation>>& allowed, std::uint32_t k,
                       std::uint32_t p) const {
    std::uint32_t a = ~0u, o = 0;
    bool identity = true;
    for (std::size_t j = 0; j < allowed.size(); ++j) {
      for (Valuation h : allowed[j]) {
        a &= h.bits;
        o |= h.bits;
        identity &= h == c[j];
      }
    }
    return !identity && a == k && o == p;
  }

  // Depth-first choice of one admissible subset per point.
  bool functional_fits(const std::vector<std::vector<Valuation>>& allowed, std::uint32_t k,
                       std::uint32_t p) const {
    const std::size_t n = allowed.size();
    std::vector<std::uint32_t> forced(n + 1, ~0u), reachable(n + 1, 0u);
    for (std::size_t j = n; j-- > 0;) {
      std::uint32_t f = ~0u, r = 0;
      for (Valuation h : allowed[j]) {
        f &= h.bits;
        r |= h.bits;
      }
      forced[j] = forced[j + 1] & f;
      reachable[j] = reachable[j + 1] | r;
    }
    return dfs(allowed, forced, reachable, k, p, 0, ~0u, 0u, true);
  }

  bool dfs(const std::vector<std::vector<Valuation>>& allowed,
           const std::vector<std::uint32_t>& forced, const std::vector<std::uint32_t>& reachable,
           std::uint32_t k, std::uint32_t p, std::size_t j, std::uint32_t run_and,
           std::uint32_t run_or, bool identity) const {
    if (j == allowed.size()) return !identity && run_and == k && run_or == p;
    if (((run_and & forced[j]) & ~k) != 0) return false;
    if ((p & ~(run_or | reachable[j])) != 0) return false;
    for (Valuation h : allowed[j]) {
      if (dfs(allowed, forced, reachable, k, p, j + 1, run_and & h.bits, run_or | h.bits,
              identity && h == c[j]))
        return true;
    }
    return false;
  }
};

}  // namespace

Collection WeakeningR::collection() const {
  std::vector<Valuation> pts;
  for (const auto& img : images) pts.insert(pts.end(), img.begin(), img.end());
  return Collection(std::move(pts));
}

std::vector<PointedWeakening> f_weakenings_at(const Collection& c, std::size_t i) {
  std::vector<PointedWeakening> out;
  const Valuation t = c[i];
  for_each_submask(t.bits, [&](std::uint32_t h) {
    if (h == t.bits) return;
    std::vector<Valuation> pts = c.points();
    pts[i] = Valuation{h};
    out.push_back({Collection(std::move(pts)), i});
  });
  return out;
}

std::vector<RelationalWeakening> r_weakenings_at(const Collection& c, std::size_t i) {
  std::vector<RelationalWeakening> out;
  const Valuation t = c[i];
  std::vector<Valuation> subsets;
  for_each_submask(t.bits, [&](std::uint32_t h) { subsets.emplace_back(h); });
  if (subsets.size() > 20) throw CapExceeded("too many relational weakenings to enumerate");
  const std::uint32_t families = std::uint32_t{1} << subsets.size();
  for (std::uint32_t s = 1; s < families; ++s) {
    std::vector<Valuation> chosen;
    bool strict = false;
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      if (!((s >> b) & 1u)) continue;
      chosen.push_back(subsets[b]);
      strict |= subsets[b] != t;
    }
    if (!strict) continue;
    std::vector<Valuation> pts(c.points().begin(), c.points().begin() + i);
    RelationalWeakening w{Collection{Valuation{}}, {}};
    for (Valuation h : chosen) {
      w.points.push_back(pts.size());
      pts.push_back(h);
    }
    pts.insert(pts.end(), c.points().begin() + i + 1, c.points().end());
    w.collection = Collection(std::move(pts));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<EncodedProgram> point_reducts(const EncodedProgram& p, const Collection& c) {
  const ModalView view = ModalView::of(c);
  std::vector<EncodedProgram> out;
  out.reserve(c.size());
  for (Valuation t : c.points()) out.push_back(easp_reduct(p, t, view));
  return out;
}

bool is_t_minimal_perpoint(const EncodedProgram& p, const Collection& c_in, TVariant variant,
                           Refutation refutation) {
  const Collection c = c_in.canonical();
  const ModalView view = ModalView::of(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const EncodedProgram r = easp_reduct(p, c[i], view);
    if (!holds(r, c[i], view)) return false;
    bool minimal;
    if (variant == TVariant::kFunctional) {
      minimal = perpoint_functional_at(r, c, i);
    } else if (refutation == Refutation::kExistential) {
      minimal = perpoint_relational_existential_at(r, c, i);
    } else {
      minimal = perpoint_relational_universal_at(r, c, i);
    }
    if (!minimal) return false;
  }
  return true;
}

bool is_t_minimal_global(const EncodedProgram& p, const Collection& c_in, TVariant variant) {
  const Collection c = c_in.canonical();
  const std::vector<EncodedProgram> reducts = point_reducts(p, c);
  const ModalView view = ModalView::of(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!holds(reducts[i], c[i], view)) return false;
  return !GlobalSearch{reducts, c}.has_satisfying_weakening(variant);
}

bool is_t_minimal(const EncodedProgram& p, const Collection& c, const TMinOptions& opt) {
  if (opt.scope == TScope::kGlobal) return is_t_minimal_global(p, c, opt.variant);
  return is_t_minimal_perpoint(p, c, opt.variant, opt.refutation);
}

TMinResult t_minimal_models(const EncodedProgram& p, std::size_t atoms, const TMinOptions& opt,
                            std::size_t cap, unsigned jobs) {
  require_no_may(p);
  std::vector<Collection> candidates = enumerate_candidates(atoms, cap);
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), jobs,
               [&](std::size_t i) { keep[i] = is_t_minimal(p, candidates[i], opt); });
  TMinResult out;
  out.candidates_checked = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.models.push_back(std::move(candidates[i]));
  return out;
}

namespace {

struct Prepared {
  Signature sig;
  EncodedProgram program;
};

Prepared prepare(const Program& p) {
  Program plain = eliminate_strong_negation(p);
  Prepared out{plain.signature(), {}};
  out.program = encode(plain, out.sig);
  return out;
}

}  // namespace

bool is_t_minimal_perpoint(const Program& p, const Collection& c, TVariant variant) {
  Prepared pp = prepare(p);
  return is_t_minimal_perpoint(pp.program, c, variant);
}

bool is_t_minimal_global(const Program& p, const Collection& c, TVariant variant) {
  Prepared pp = prepare(p);
  return is_t_minimal_global(pp.program, c, variant);
}

std::vector<Collection> t_minimal_models(const Program& p, TVariant variant, TScope scope,
                                         std::size_t cap) {
  Prepared pp = prepare(p);
  TMinOptions opt;
  opt.variant = variant;
  opt.scope = scope;
  return t_minimal_models(pp.program, pp.sig.size(), opt, cap).models;
}

}  // namespace easp
