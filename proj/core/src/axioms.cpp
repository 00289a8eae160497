#include "cifkit/axioms.hpp"

#include <algorithm>

#include "cifkit/error.hpp"
#include "indexed.hpp"

namespace cifkit {

using detail::IndexedFrame;
using detail::IndexedSystem;
using detail::Mask;
using detail::StageData;
using detail::subset;
using detail::TokenIndex;

namespace {

int first_bit(Mask m) { return std::countr_zero(m); }

/// Iterate the bits of m in ascending token order.
template <typename Fn>
void for_bits(Mask m, Fn&& fn) {
  while (m) {
    fn(first_bit(m));
    m &= m - 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// systems

Report check_system(const InfoSystem& s, SystemLevel level, const CheckOptions& opts) {
  IndexedSystem sx(s);
  const TokenIndex& ix = sx.ix;
  Budget budget{opts.budget};
  Report rep;

  auto set_of = [&](Mask m) { return ix.set_of(m); };

  // (1) every singleton is consistent
  for (int a = 0; a < ix.size(); ++a) {
    budget.spend();
    if (!sx.in_con(Mask{1} << a))
      rep.add("sys(1)", {ix.toks[a]}, "{" + ix.toks[a].text() + "} is not consistent");
  }

  for (Mask x : sx.data.order) {
    Mask fmax = sx.targets(x);

    // (2) cis only: X |- a forces X u {a} consistent
    if (level == SystemLevel::cis) {
      for_bits(fmax, [&](int a) {
        budget.spend();
        if (!sx.in_con(x | (Mask{1} << a)))
          rep.add("sys(2)", {set_of(x), ix.toks[a]},
                  to_text(set_of(x | (Mask{1} << a))) + " is not consistent");
      });
    }

    // (3) superset weakening
    for (Mask y : sx.data.order) {
      if (!subset(x, y)) continue;
      budget.spend();
      Mask missing = fmax & ~sx.targets(y);
      if (missing)
        rep.add("sys(3)", {set_of(x), set_of(y), ix.toks[first_bit(missing)]},
                "entailment does not persist to the superset");
    }

    // (4) cut through entailed consistent sets
    for (Mask y : sx.data.order) {
      if (!subset(y, fmax)) continue;  // X |- Y
      budget.spend();
      Mask missing = sx.targets(y) & ~fmax;
      if (missing)
        rep.add("sys(4)", {set_of(x), set_of(y), ix.toks[first_bit(missing)]},
                "cut conclusion missing");
    }

    if (fmax == 0) continue;

    // (5) interpolation at the maximal entailed set
    {
      bool found = false;
      for (Mask z : sx.data.order) {
        budget.spend();
        if (subset(z, fmax) && subset(fmax, sx.targets(z))) {
          found = true;
          break;
        }
      }
      if (!found)
        rep.add("sys(5)", {set_of(x), set_of(fmax)}, "no interpolating consistent set");
    }

    // (6) some consistent superset of the maximal entailed set is entailed;
    // the only candidate is the maximal set itself
    budget.spend();
    if (!sx.in_con(fmax))
      rep.add("sys(6)", {set_of(x), set_of(fmax)},
              "maximal entailed set " + to_text(set_of(fmax)) + " is not consistent");
  }

  rep.finalize(opts.all_witnesses);
  return rep;
}

// ---------------------------------------------------------------------------
// frames

Report check_frame(const Frame& f, bool require_strong, bool require_truth,
                   const CheckOptions& opts) {
  if (require_truth && !f.truth) fail(Errc::no_truth, "no truth token declared");

  IndexedFrame fx(f);
  const TokenIndex& ix = fx.ix;
  Budget budget{opts.budget};
  Report rep;

  auto set_of = [&](Mask m) { return ix.set_of(m); };

  for (int i = 0; i < ix.size(); ++i) {
    const StageData& st = fx.stage[i];
    const Token& ti = ix.toks[i];
    const Mask self = Mask{1} << i;

    // (1) self consistency
    budget.spend();
    if (!st.has(self))
      rep.add("self-consistency", {ti}, "{" + ti.text() + "} is not in con(" + ti.text() + ")");

    for (Mask x : st.order) {
      const Mask ymax = st.targets(x);

      // (2) consistency preservation: subsets stay consistent
      for (Mask sub = x;; sub = (sub - 1) & x) {
        budget.spend();
        if (sub != x && !st.has(sub)) {
          rep.add("consistency-preservation", {ti, set_of(x), set_of(sub)},
                  "subset is not consistent");
          break;
        }
        if (sub == 0) break;
      }

      // (3) soundness at the maximal entailed set
      budget.spend();
      if (ymax != 0 && !st.has(ymax))
        rep.add("soundness", {ti, set_of(x), set_of(ymax)},
                "entailed set " + to_text(set_of(ymax)) + " is not consistent");

      // (4) weakening
      for (Mask y : st.order) {
        if (!subset(x, y)) continue;
        budget.spend();
        Mask missing = ymax & ~st.targets(y);
        if (missing)
          rep.add("weakening", {ti, set_of(x), set_of(y), ix.toks[first_bit(missing)]},
                  "entailment does not persist to the superset");
      }

      // (5) cut
      for (Mask y : st.order) {
        if (!subset(y, ymax)) continue;  // X |=_i Y
        budget.spend();
        Mask missing = st.targets(y) & ~ymax;
        if (missing)
          rep.add("cut", {ti, set_of(x), set_of(y), ix.toks[first_bit(missing)]},
                  "cut conclusion missing");
      }

      // (8) interpolation at the maximal entailed set
      if (ymax != 0) {
        bool found = false;
        for_bits(ymax, [&](int e) {
          if (found) return;
          for (Mask z : fx.stage[e].order) {
            budget.spend();
            if (subset(z | (Mask{1} << e), ymax) && subset(ymax, fx.stage[e].targets(z))) {
              found = true;
              return;
            }
          }
        });
        if (!found)
          rep.add("interpolation", {ti, set_of(x), set_of(ymax)},
                  "no witnessed interpolant for the maximal entailed set");
      }

      // (S)
      if (require_strong && x != self) {
        budget.spend();
        if (!subset(x, st.targets(self)))
          rep.add("(S)", {ti, set_of(x)},
                  "{" + ti.text() + "} does not entail " + to_text(set_of(x)));
      }
    }

    // (6)/(7) global transfer along iRj
    for (int j = 0; j < ix.size(); ++j) {
      if (i == j) continue;
      if (!fx.in_con(j, self)) continue;  // iRj
      const StageData& stj = fx.stage[j];
      for (Mask x : st.order) {
        budget.spend();
        if (!stj.has(x)) {
          rep.add("consistency-transfer", {ti, ix.toks[j], set_of(x)},
                  to_text(set_of(x)) + " is not in con(" + ix.toks[j].text() + ")");
          continue;
        }
        Mask missing = st.targets(x) & ~stj.targets(x);
        if (missing)
          rep.add("entailment-transfer", {ti, ix.toks[j], set_of(x), ix.toks[first_bit(missing)]},
                  "entailment does not transfer along R");
      }
    }

    // (T)
    if (require_truth) {
      budget.spend();
      int t = ix.at(*f.truth);
      if (!(st.has(0) && (st.targets(0) >> t) & 1))
        rep.add("(T)", {ti}, "empty set does not entail the truth token at " + ti.text());
    }
  }

  rep.finalize(opts.all_witnesses);
  return rep;
}

bool DerivedR::has(const Token& i, const Token& j) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
}

DerivedR derived_R(const Frame& f) {
  DerivedR r;
  for (const Token& i : f.tokens) {
    TokenSet singleton({i});
    for (const Token& j : f.tokens)
      if (f.consistent_at(j, singleton)) r.pairs.emplace_back(i, j);
  }
  std::sort(r.pairs.begin(), r.pairs.end());
  return r;
}

// ---------------------------------------------------------------------------
// morphisms

namespace {

/// Mapping relation indexed over two system universes: source set mask to
/// target token mask.
std::map<Mask, Mask> index_mapping(const Morphism& h, const TokenIndex& six,
                                   const TokenIndex& tix) {
  std::map<Mask, Mask> rel;
  for (const RelTriple& t : h.rel) {
    if (t.stage) fail(Errc::type, "mapping morphism with staged tuples");
    rel[six.mask_of(t.from)] |= Mask{1} << tix.at(t.to);
  }
  return rel;
}

std::vector<std::map<Mask, Mask>> index_family(const Morphism& h, const TokenIndex& six,
                                               const TokenIndex& tix) {
  std::vector<std::map<Mask, Mask>> rel(six.size());
  for (const RelTriple& t : h.rel) {
    if (!t.stage) fail(Errc::type, "family morphism with unstaged tuples");
    rel[six.at(*t.stage)][six.mask_of(t.from)] |= Mask{1} << tix.at(t.to);
  }
  return rel;
}

Mask lookup(const std::map<Mask, Mask>& rel, Mask x) {
  auto it = rel.find(x);
  return it == rel.end() ? 0 : it->second;
}

}  // namespace

Report check_mapping(const Morphism& h, const InfoSystem& src, const InfoSystem& dst,
                     const CheckOptions& opts) {
  if (h.kind != MorphismKind::mapping) fail(Errc::type, "check_mapping requires kind mapping");
  IndexedSystem sx(src), tx(dst);
  std::map<Mask, Mask> rel = index_mapping(h, sx.ix, tx.ix);
  Budget budget{opts.budget};
  Report rep;

  auto sset = [&](Mask m) { return sx.ix.set_of(m); };
  auto tset = [&](Mask m) { return tx.ix.set_of(m); };

  for (Mask x : sx.data.order) {
    const Mask hmax = lookup(rel, x);

    // (1) right cut through the target entailment
    for (Mask y : tx.data.order) {
      if (!subset(y, hmax)) continue;
      budget.spend();
      Mask missing = tx.targets(y) & ~hmax;
      if (missing)
        rep.add("map(1)", {sset(x), tset(y), tx.ix.toks[first_bit(missing)]},
                "right cut conclusion missing");
    }

    // (2) superset weakening
    for (Mask y : sx.data.order) {
      if (!subset(x, y)) continue;
      budget.spend();
      Mask missing = hmax & ~lookup(rel, y);
      if (missing)
        rep.add("map(2)", {sset(x), sset(y), tx.ix.toks[first_bit(missing)]},
                "image does not persist to the superset");
    }

    // (3) left cut through the source entailment
    for (Mask y : sx.data.order) {
      if (!subset(y, sx.targets(x))) continue;  // X |- Y
      budget.spend();
      Mask missing = lookup(rel, y) & ~hmax;
      if (missing)
        rep.add("map(3)", {sset(x), sset(y), tx.ix.toks[first_bit(missing)]},
                "left cut conclusion missing");
    }

    if (hmax == 0) continue;

    // (4a) interpolation on the source side
    {
      bool found = false;
      for (Mask z : sx.data.order) {
        budget.spend();
        if (subset(z, sx.targets(x)) && subset(hmax, lookup(rel, z))) {
          found = true;
          break;
        }
      }
      if (!found) rep.add("map(4a)", {sset(x), tset(hmax)}, "no source-side interpolant");
    }

    // (4b) interpolation on the target side
    {
      bool found = false;
      for (Mask z : tx.data.order) {
        budget.spend();
        if (subset(z, hmax) && subset(hmax, tx.targets(z))) {
          found = true;
          break;
        }
      }
      if (!found) rep.add("map(4b)", {sset(x), tset(hmax)}, "no target-side interpolant");
    }

    // (5) the maximal image set must be consistent in the target
    budget.spend();
    if (!tx.in_con(hmax))
      rep.add("map(5)", {sset(x), tset(hmax)},
              "maximal image " + to_text(tset(hmax)) + " is not consistent in the target");
  }

  rep.finalize(opts.all_witnesses);
  return rep;
}

Report check_family(const Morphism& h, const Frame& src, const Frame& dst,
                    bool require_truth_respect, const CheckOptions& opts) {
  if (h.kind == MorphismKind::mapping) fail(Errc::type, "check_family requires staged tuples");
  IndexedFrame sx(src), tx(dst);
  std::vector<std::map<Mask, Mask>> rel = index_family(h, sx.ix, tx.ix);
  Budget budget{opts.budget};
  Report rep;

  auto sset = [&](Mask m) { return sx.ix.set_of(m); };
  auto tset = [&](Mask m) { return tx.ix.set_of(m); };

  for (int i = 0; i < sx.ix.size(); ++i) {
    const StageData& st = sx.stage[i];
    const Token& ti = sx.ix.toks[i];
    for (Mask x : st.order) {
      const Mask hmax = lookup(rel[i], x);

      // (a) right cut through the target entailment family
      for (int k = 0; k < tx.ix.size(); ++k) {
        for (Mask y : tx.stage[k].order) {
          if (!subset(y | (Mask{1} << k), hmax)) continue;
          budget.spend();
          Mask missing = tx.stage[k].targets(y) & ~hmax;
          if (missing)
            rep.add("fam(a)", {ti, sset(x), tx.ix.toks[k], tset(y), tx.ix.toks[first_bit(missing)]},
                    "right cut conclusion missing");
        }
      }

      // (b) superset weakening
      for (Mask y : st.order) {
        if (!subset(x, y)) continue;
        budget.spend();
        Mask missing = hmax & ~lookup(rel[i], y);
        if (missing)
          rep.add("fam(b)", {ti, sset(x), sset(y), tx.ix.toks[first_bit(missing)]},
                  "image does not persist to the superset");
      }

      // (c) left cut through the source entailment
      for (Mask y : st.order) {
        if (!subset(y, st.targets(x))) continue;
        budget.spend();
        Mask missing = lookup(rel[i], y) & ~hmax;
        if (missing)
          rep.add("fam(c)", {ti, sset(x), sset(y), tx.ix.toks[first_bit(missing)]},
                  "left cut conclusion missing");
      }

      // (d) transfer along derived R
      for (int j = 0; j < sx.ix.size(); ++j) {
        if (i == j || !sx.in_con(j, Mask{1} << i)) continue;
        budget.spend();
        Mask missing = hmax & ~lookup(rel[j], x);
        if (missing)
          rep.add("fam(d)", {ti, sx.ix.toks[j], sset(x), tx.ix.toks[first_bit(missing)]},
                  "image does not transfer along R");
      }

      if (hmax == 0) continue;

      // (e1) split interpolation, source side
      {
        bool found = false;
        for (int c = 0; c < sx.ix.size() && !found; ++c) {
          if (!((st.targets(x) >> c) & 1)) continue;
          for (Mask u : sx.stage[c].order) {
            budget.spend();
            if (subset(u | (Mask{1} << c), st.targets(x)) && subset(hmax, lookup(rel[c], u))) {
              found = true;
              break;
            }
          }
        }
        if (!found) rep.add("fam(e1)", {ti, sset(x), tset(hmax)}, "no source-side interpolant");
      }

      // (e2) split interpolation, target side
      {
        bool found = false;
        for (int e = 0; e < tx.ix.size() && !found; ++e) {
          if (!((hmax >> e) & 1)) continue;
          for (Mask v : tx.stage[e].order) {
            budget.spend();
            if (subset(v | (Mask{1} << e), hmax) && subset(hmax, tx.stage[e].targets(v))) {
              found = true;
              break;
            }
          }
        }
        if (!found) rep.add("fam(e2)", {ti, sset(x), tset(hmax)}, "no target-side interpolant");
      }
    }
  }

  if (require_truth_respect) {
    if (!src.truth || !dst.truth) fail(Errc::no_truth, "truth respect requires truth elements");
    budget.spend();
    int t = sx.ix.at(*src.truth);
    int t2 = tx.ix.at(*dst.truth);
    if (!((lookup(rel[t], 0) >> t2) & 1))
      rep.add("fam(T)", {TokenSet{}, *dst.truth}, "empty set is not related to the target truth");
  }

  rep.finalize(opts.all_witnesses);
  return rep;
}

// ---------------------------------------------------------------------------
// metatheorems

Report verify_metatheorems(const Frame& f, const CheckOptions& opts) {
  IndexedFrame fx(f);
  const TokenIndex& ix = fx.ix;
  Budget budget{opts.budget};
  Report rep;

  auto set_of = [&](Mask m) { return ix.set_of(m); };

  for (int i = 0; i < ix.size(); ++i) {
    const StageData& st = fx.stage[i];
    for (Mask x : st.order) {
      const Mask ymax = st.targets(x);

      // (m1) entailed tokens are R-related to the stage
      for_bits(ymax, [&](int a) {
        budget.spend();
        if (!st.has(Mask{1} << a))
          rep.add("m1", {ix.toks[i], set_of(x), ix.toks[a]},
                  "{" + ix.toks[a].text() + "} is not in con(" + ix.toks[i].text() + ")");
      });

      // (m2) strengthened cut across stages
      for (int j = 0; j < ix.size(); ++j) {
        if (!((ymax >> j) & 1)) continue;
        for (Mask y : fx.stage[j].order) {
          if (!subset(y | (Mask{1} << j), ymax)) continue;
          budget.spend();
          Mask missing = fx.stage[j].targets(y) & ~ymax;
          if (missing)
            rep.add("m2", {ix.toks[i], set_of(x), ix.toks[j], set_of(y),
                           ix.toks[first_bit(missing)]},
                    "strengthened cut conclusion missing");
        }
      }

      if (ymax == 0) continue;

      // (m3a) local interpolation inside the stage
      {
        bool found = false;
        for (Mask z : st.order) {
          budget.spend();
          if (subset(z, ymax) && subset(ymax, st.targets(z))) {
            found = true;
            break;
          }
        }
        if (!found)
          rep.add("m3a", {ix.toks[i], set_of(x), set_of(ymax)}, "no local interpolant");
      }

      // (m3b) some entailed witness sees the entailed set as consistent
      {
        bool found = false;
        for_bits(ymax, [&](int e) {
          budget.spend();
          if (fx.stage[e].has(ymax)) found = true;
        });
        if (!found)
          rep.add("m3b", {ix.toks[i], set_of(x), set_of(ymax)},
                  "no entailed witness token sees the set as consistent");
      }
    }
  }

  rep.finalize(opts.all_witnesses);
  return rep;
}

}  // namespace cifkit
