#include "cifkit/token.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace cifkit {

TokenSet::TokenSet(std::vector<Token> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool TokenSet::contains(const Token& t) const {
  return std::binary_search(elems_.begin(), elems_.end(), t);
}

bool TokenSet::subset_of(const TokenSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

TokenSet TokenSet::union_with(const TokenSet& other) const {
  std::vector<Token> out;
  out.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  TokenSet r;
  r.elems_ = std::move(out);
  return r;
}

TokenSet TokenSet::minus(const Token& t) const {
  TokenSet r;
  for (const Token& e : elems_)
    if (!(e == t)) r.elems_.push_back(e);
  return r;
}

TokenSet TokenSet::with(const Token& t) const { return union_with(TokenSet({t})); }

std::strong_ordering TokenSet::operator<=>(const TokenSet& other) const {
  return std::lexicographical_compare_three_way(elems_.begin(), elems_.end(),
                                                other.elems_.begin(), other.elems_.end());
}

bool TokenSet::operator==(const TokenSet& other) const { return (*this <=> other) == 0; }

Token Token::atom(std::string name) {
  return Token(Kind::atom, std::move(name), nullptr, nullptr);
}

Token Token::set(TokenSet elems) {
  return Token(Kind::set, {}, nullptr, std::make_shared<const TokenSet>(std::move(elems)));
}

Token Token::pair(Token first, TokenSet second) {
  return Token(Kind::pair, {}, std::make_shared<const Token>(std::move(first)),
               std::make_shared<const TokenSet>(std::move(second)));
}

std::strong_ordering Token::compare(const Token& a, const Token& b) {
  auto rank = [](Kind k) { return k == Kind::atom ? 0 : k == Kind::set ? 1 : 2; };
  if (auto c = rank(a.kind_) <=> rank(b.kind_); c != 0) return c;
  switch (a.kind_) {
    case Kind::atom:
      return a.name_ <=> b.name_;
    case Kind::set:
      return *a.parts_ <=> *b.parts_;
    case Kind::pair:
      if (auto c = compare(*a.first_, *b.first_); c != 0) return c;
      return *a.parts_ <=> *b.parts_;
  }
  return std::strong_ordering::equal;
}

bool Token::valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  char c0 = name[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_' || c0 == '#')) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    char c = name[i];
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string Token::text() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Token& t) {
  switch (t.kind()) {
    case Token::Kind::atom:
      return os << t.name();
    case Token::Kind::set:
      return os << '{' << t.parts() << '}';
    case Token::Kind::pair:
      return os << '(' << t.first() << ", [" << t.parts() << "])";
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const TokenSet& s) {
  bool first = true;
  for (const Token& t : s.elems()) {
    if (!first) os << ' ';
    os << t;
    first = false;
  }
  return os;
}

std::string to_text(const TokenSet& s) {
  std::ostringstream os;
  os << '{' << s << '}';
  return os.str();
}

}  // namespace cifkit
