#include "cifkit/structures.hpp"

#include <algorithm>

#include "cifkit/error.hpp"

namespace cifkit {

namespace {

const std::vector<TokenSet> kNoSets;
const std::vector<Entailment> kNoEnts;

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_in_universe(const TokenSet& universe, const Token& t, const std::string& where) {
  if (!universe.contains(t))
    fail(Errc::unknown_token, "token " + t.text() + " in " + where + " is not declared");
}

void check_in_universe(const TokenSet& universe, const TokenSet& s, const std::string& where) {
  for (const Token& t : s) check_in_universe(universe, t, where);
}

}  // namespace

std::string_view morphism_kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::mapping: return "mapping";
    case MorphismKind::family: return "family";
    case MorphismKind::global: return "global";
  }
  return "?";
}

const std::vector<TokenSet>& Frame::con_of(const Token& i) const {
  auto it = con.find(i);
  return it == con.end() ? kNoSets : it->second;
}

const std::vector<Entailment>& Frame::entails_of(const Token& i) const {
  auto it = entails.find(i);
  return it == entails.end() ? kNoEnts : it->second;
}

bool Frame::consistent_at(const Token& i, const TokenSet& x) const {
  const auto& fam = con_of(i);
  return std::binary_search(fam.begin(), fam.end(), x);
}

bool Frame::entails_at(const Token& i, const TokenSet& x, const Token& a) const {
  const auto& es = entails_of(i);
  return std::binary_search(es.begin(), es.end(), Entailment{x, a});
}

void Frame::canonicalize() {
  for (auto it = con.begin(); it != con.end();) {
    sort_unique(it->second);
    it = it->second.empty() ? con.erase(it) : std::next(it);
  }
  for (auto it = entails.begin(); it != entails.end();) {
    sort_unique(it->second);
    it = it->second.empty() ? entails.erase(it) : std::next(it);
  }
}

bool InfoSystem::consistent(const TokenSet& x) const {
  return std::binary_search(con.begin(), con.end(), x);
}

bool InfoSystem::entails_pair(const TokenSet& x, const Token& a) const {
  return std::binary_search(entails.begin(), entails.end(), Entailment{x, a});
}

void InfoSystem::canonicalize() {
  sort_unique(con);
  sort_unique(entails);
}

bool Morphism::has(const std::optional<Token>& stage, const TokenSet& x, const Token& b) const {
  return std::binary_search(rel.begin(), rel.end(), RelTriple{stage, x, b});
}

void Morphism::canonicalize() { sort_unique(rel); }

void validate_wellformed(const Frame& f) {
  if (f.tokens.empty()) fail(Errc::syntax, "frame with empty token universe");
  if (f.truth) check_in_universe(f.tokens, *f.truth, "truth declaration");
  for (const auto& [i, fam] : f.con) {
    check_in_universe(f.tokens, i, "con");
    for (std::size_t k = 0; k < fam.size(); ++k) {
      check_in_universe(f.tokens, fam[k], "con(" + i.text() + ")");
      if (k > 0 && fam[k] == fam[k - 1])
        fail(Errc::duplicate_set, "duplicate set " + to_text(fam[k]) + " in con(" + i.text() + ")");
    }
  }
  for (const auto& [i, es] : f.entails) {
    check_in_universe(f.tokens, i, "entails");
    for (const Entailment& e : es) {
      check_in_universe(f.tokens, e.from, "entails(" + i.text() + ")");
      check_in_universe(f.tokens, e.to, "entails(" + i.text() + ")");
      if (!f.consistent_at(i, e.from))
        fail(Errc::ent_domain, "entailment (" + i.text() + ", " + to_text(e.from) + " -> " +
                                   e.to.text() + ") has a left side outside con(" + i.text() + ")");
    }
  }
}

void validate_wellformed(const InfoSystem& s) {
  if (s.tokens.empty()) fail(Errc::syntax, "system with empty token universe");
  for (std::size_t k = 0; k < s.con.size(); ++k) {
    check_in_universe(s.tokens, s.con[k], "con");
    if (k > 0 && s.con[k] == s.con[k - 1])
      fail(Errc::duplicate_set, "duplicate set " + to_text(s.con[k]) + " in con");
  }
  for (const Entailment& e : s.entails) {
    check_in_universe(s.tokens, e.from, "entails");
    check_in_universe(s.tokens, e.to, "entails");
    if (!s.consistent(e.from))
      fail(Errc::ent_domain, "entailment (" + to_text(e.from) + " -> " + e.to.text() +
                                 ") has a left side outside the consistency family");
  }
}

void validate_morphism(const Morphism& m, const Structure& source, const Structure& target) {
  const bool staged = m.kind != MorphismKind::mapping;

  const Frame* sf = std::get_if<Frame>(&source);
  const InfoSystem* ss = std::get_if<InfoSystem>(&source);
  if (m.kind == MorphismKind::mapping && !ss)
    fail(Errc::type, "mapping morphism requires an information system source");
  if (staged && !sf) fail(Errc::type, "family/global morphism requires a frame source");

  const TokenSet* target_tokens = nullptr;
  if (const Frame* tf = std::get_if<Frame>(&target))
    target_tokens = &tf->tokens;
  else if (const InfoSystem* ts = std::get_if<InfoSystem>(&target))
    target_tokens = &ts->tokens;
  else
    fail(Errc::type, "morphism target must be a frame or a system");

  for (const RelTriple& t : m.rel) {
    if (staged != t.stage.has_value())
      fail(Errc::type, std::string("rel tuple stage does not match kind ") +
                           std::string(morphism_kind_name(m.kind)));
    if (staged) {
      if (!sf->consistent_at(*t.stage, t.from))
        fail(Errc::ent_domain, "rel tuple (" + t.stage->text() + ", " + to_text(t.from) +
                                   ") has a left side outside con(" + t.stage->text() + ")");
    } else if (!ss->consistent(t.from)) {
      fail(Errc::ent_domain,
           "rel tuple " + to_text(t.from) + " has a left side outside the source family");
    }
    if (!target_tokens->contains(t.to))
      fail(Errc::unknown_token, "rel target " + t.to.text() + " is not in the target universe");
  }
}

}  // namespace cifkit
