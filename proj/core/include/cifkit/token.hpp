#pragma once

#include <compare>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace cifkit {

class Token;

/// Canonical finite set of tokens: sorted ascending, duplicate free.
class TokenSet {
public:
  TokenSet() = default;
  explicit TokenSet(std::vector<Token> elems);

  const std::vector<Token>& elems() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Token& t) const;
  bool subset_of(const TokenSet& other) const;

  TokenSet union_with(const TokenSet& other) const;
  TokenSet minus(const Token& t) const;
  TokenSet with(const Token& t) const;

  std::strong_ordering operator<=>(const TokenSet& other) const;
  bool operator==(const TokenSet& other) const;

  std::vector<Token>::const_iterator begin() const { return elems_.begin(); }
  std::vector<Token>::const_iterator end() const { return elems_.end(); }

private:
  std::vector<Token> elems_;
};

/// Tree-structured identifier. Atoms carry a name; pair tokens carry a token
/// and a token set (the shape used for pair-indexed frame tokens); set tokens
/// carry a token set (the shape used for consistent-set tokens).
///
/// Total order across variants: Atom < SetTok < Pair; atoms by name, set
/// tokens lexicographically on their sorted elements, pairs by (first, second).
class Token {
public:
  enum class Kind { atom, set, pair };

  Token() : Token(atom("_")) {}

  static Token atom(std::string name);
  static Token set(TokenSet elems);
  static Token pair(Token first, TokenSet second);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::atom; }
  bool is_set() const { return kind_ == Kind::set; }
  bool is_pair() const { return kind_ == Kind::pair; }

  /// Atom name; only valid for atoms.
  const std::string& name() const { return name_; }
  /// Set elements (set tokens) or the pair's second component (pair tokens).
  const TokenSet& parts() const { return *parts_; }
  /// The pair's first component; only valid for pairs.
  const Token& first() const { return *first_; }

  std::strong_ordering operator<=>(const Token& other) const { return compare(*this, other); }
  bool operator==(const Token& other) const { return compare(*this, other) == 0; }

  static std::strong_ordering compare(const Token& a, const Token& b);

  /// True iff `name` matches the atom grammar `[A-Za-z_#][A-Za-z0-9_]*`.
  static bool valid_atom_name(const std::string& name);

  std::string text() const;

private:
  Kind kind_;
  std::string name_;
  std::shared_ptr<const Token> first_;
  std::shared_ptr<const TokenSet> parts_;

  Token(Kind k, std::string n, std::shared_ptr<const Token> f, std::shared_ptr<const TokenSet> p)
      : kind_(k), name_(std::move(n)), first_(std::move(f)), parts_(std::move(p)) {}
};

std::ostream& operator<<(std::ostream& os, const Token& t);
std::ostream& operator<<(std::ostream& os, const TokenSet& s);

std::string to_text(const TokenSet& s);

}  // namespace cifkit
