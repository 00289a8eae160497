#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "cifkit/error.hpp"
#include "cifkit/structures.hpp"

namespace cifkit::detail {

using Mask = std::uint64_t;

/// Token universe indexed by the canonical token order. Structures are capped
/// at 64 tokens so that finite token sets fit in one machine word.
struct TokenIndex {
  std::vector<Token> toks;
  std::map<Token, int> pos;

  explicit TokenIndex(const TokenSet& universe) {
    if (universe.size() > 64) fail(Errc::bound, "token universe exceeds 64 tokens");
    for (const Token& t : universe) {
      pos.emplace(t, static_cast<int>(toks.size()));
      toks.push_back(t);
    }
  }

  int size() const { return static_cast<int>(toks.size()); }

  int at(const Token& t) const {
    auto it = pos.find(t);
    if (it == pos.end()) fail(Errc::unknown_token, "token " + t.text() + " outside the universe");
    return it->second;
  }

  Mask mask_of(const TokenSet& s) const {
    Mask m = 0;
    for (const Token& t : s) m |= Mask{1} << at(t);
    return m;
  }

  TokenSet set_of(Mask m) const {
    std::vector<Token> elems;
    while (m) {
      int b = std::countr_zero(m);
      elems.push_back(toks[b]);
      m &= m - 1;
    }
    return TokenSet(std::move(elems));
  }
};

/// Lexicographic order of the token sets denoted by two masks, matching
/// TokenSet::operator<=> (element indices ascend with token order).
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// One stage of consistency data: family membership plus the maximal entailed
/// target mask per member.
struct StageData {
  std::map<Mask, Mask> fam;   // member set -> entailed targets (0 when none)
  std::vector<Mask> order;    // members in lexicographic set order

  bool has(Mask x) const { return fam.count(x) != 0; }

  Mask targets(Mask x) const {
    auto it = fam.find(x);
    return it == fam.end() ? 0 : it->second;
  }
};

struct IndexedFrame {
  TokenIndex ix;
  std::vector<StageData> stage;

  explicit IndexedFrame(const Frame& f) : ix(f.tokens), stage(ix.size()) {
    for (const auto& [i, fam] : f.con) {
      StageData& st = stage[ix.at(i)];
      for (const TokenSet& x : fam) {
        Mask m = ix.mask_of(x);
        st.fam.emplace(m, 0);
        st.order.push_back(m);
      }
      std::sort(st.order.begin(), st.order.end(), lex_less);
    }
    for (const auto& [i, es] : f.entails) {
      StageData& st = stage[ix.at(i)];
      for (const Entailment& e : es) st.fam[ix.mask_of(e.from)] |= Mask{1} << ix.at(e.to);
    }
  }

  bool in_con(int i, Mask x) const { return stage[i].has(x); }
  Mask targets(int i, Mask x) const { return stage[i].targets(x); }
};

struct IndexedSystem {
  TokenIndex ix;
  StageData data;

  explicit IndexedSystem(const InfoSystem& s) : ix(s.tokens) {
    for (const TokenSet& x : s.con) {
      Mask m = ix.mask_of(x);
      data.fam.emplace(m, 0);
      data.order.push_back(m);
    }
    std::sort(data.order.begin(), data.order.end(), lex_less);
    for (const Entailment& e : s.entails) data.fam[ix.mask_of(e.from)] |= Mask{1} << ix.at(e.to);
  }

  bool in_con(Mask x) const { return data.has(x); }
  Mask targets(Mask x) const { return data.targets(x); }
};

}  // namespace cifkit::detail
