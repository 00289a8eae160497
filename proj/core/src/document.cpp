#include "cifkit/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cifkit/error.hpp"

namespace cifkit {

namespace {

// ---------------------------------------------------------------------------
// lexer

enum class Tok { ident, str, lbrack, rbrack, lbrace, rbrace, lparen, rparen, comma, colon, arrow, end };

struct Lexeme {
  Tok kind;
  std::string text;
  int line;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Lexeme& peek() const { return cur_; }

  Lexeme take() {
    Lexeme out = cur_;
    advance();
    return out;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= src_.size()) {
      cur_ = {Tok::end, "", line_};
      return;
    }
    char c = src_[pos_];
    auto single = [&](Tok k) {
      cur_ = {k, std::string(1, c), line_};
      ++pos_;
    };
    switch (c) {
      case '[': return single(Tok::lbrack);
      case ']': return single(Tok::rbrack);
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ',': return single(Tok::comma);
      case ':': return single(Tok::colon);
      default: break;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      cur_ = {Tok::arrow, "->", line_};
      pos_ += 2;
      return;
    }
    if (c == '"') {
      std::size_t end = src_.find('"', pos_ + 1);
      if (end == std::string::npos) fail(Errc::syntax, "unterminated string at line " + std::to_string(line_));
      cur_ = {Tok::str, src_.substr(pos_ + 1, end - pos_ - 1), line_};
      pos_ = end + 1;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      cur_ = {Tok::ident, src_.substr(start, pos_ - start), line_};
      return;
    }
    fail(Errc::syntax, std::string("unexpected character '") + c + "' at line " + std::to_string(line_));
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  Lexeme cur_{Tok::end, "", 1};
};

// ---------------------------------------------------------------------------
// parser

class Parser {
public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Document parse() {
    std::string head = expect_ident("document kind");
    Document d;
    if (head == "frame")
      d = parse_frame();
    else if (head == "system")
      d = parse_system();
    else if (head == "morphism")
      d = parse_morphism();
    else if (head == "csl")
      d = parse_csl();
    else if (head == "basis")
      d = parse_basis();
    else
      fail(Errc::syntax, "unknown document kind '" + head + "'");
    if (lex_.peek().kind != Tok::end) fail(Errc::syntax, "trailing input after document");
    return d;
  }

private:
  [[noreturn]] void bad(const std::string& what) {
    fail(Errc::syntax, what + " at line " + std::to_string(lex_.peek().line));
  }

  void expect(Tok k, const char* what) {
    if (lex_.peek().kind != k) bad(std::string("expected ") + what);
    lex_.take();
  }

  std::string expect_ident(const char* what) {
    if (lex_.peek().kind != Tok::ident) bad(std::string("expected ") + what);
    return lex_.take().text;
  }

  void expect_keyword(const char* kw) {
    std::string id = expect_ident(kw);
    if (id != kw) bad(std::string("expected '") + kw + "', got '" + id + "'");
  }

  bool peek_keyword(const char* kw) {
    return lex_.peek().kind == Tok::ident && lex_.peek().text == kw;
  }

  Token parse_token() {
    const Lexeme& l = lex_.peek();
    if (l.kind == Tok::ident) return Token::atom(lex_.take().text);
    if (l.kind == Tok::lbrace) {
      lex_.take();
      std::vector<Token> elems;
      while (lex_.peek().kind != Tok::rbrace) elems.push_back(parse_token());
      lex_.take();
      return Token::set(TokenSet(std::move(elems)));
    }
    if (l.kind == Tok::lparen) {
      lex_.take();
      Token first = parse_token();
      expect(Tok::comma, "','");
      TokenSet second = parse_set_literal();
      expect(Tok::rparen, "')'");
      return Token::pair(std::move(first), std::move(second));
    }
    bad("expected a token");
  }

  TokenSet parse_set_literal() {
    expect(Tok::lbrack, "'['");
    std::vector<Token> elems;
    while (lex_.peek().kind != Tok::rbrack) elems.push_back(parse_token());
    lex_.take();
    return TokenSet(std::move(elems));
  }

  std::vector<TokenSet> parse_family_literal() {
    expect(Tok::lbrack, "'['");
    std::vector<TokenSet> fam;
    while (lex_.peek().kind != Tok::rbrack) fam.push_back(parse_set_literal());
    lex_.take();
    return fam;
  }

  Entailment parse_ent_entry() {
    expect(Tok::lbrack, "'['");
    std::vector<Token> from;
    while (lex_.peek().kind != Tok::arrow) from.push_back(parse_token());
    lex_.take();
    Token to = parse_token();
    expect(Tok::rbrack, "']'");
    return {TokenSet(std::move(from)), std::move(to)};
  }

  std::vector<Entailment> parse_ent_list() {
    expect(Tok::lbrack, "'['");
    std::vector<Entailment> es;
    while (lex_.peek().kind != Tok::rbrack) es.push_back(parse_ent_entry());
    lex_.take();
    return es;
  }

  void check_reserved(const TokenSet& tokens, const std::optional<Token>& truth) {
    Token reserved = Token::atom(kReservedTruthName);
    if (tokens.contains(reserved) && !(truth && *truth == reserved))
      fail(Errc::reserved,
           kReservedTruthName + " is reserved for invented truth tokens and may only "
           "appear as the declared truth");
  }

  Frame parse_frame() {
    Frame f;
    expect(Tok::lbrace, "'{'");
    expect_keyword("tokens");
    f.tokens = parse_set_literal();
    if (peek_keyword("truth")) {
      lex_.take();
      f.truth = parse_token();
    }
    expect_keyword("con");
    expect(Tok::lbrace, "'{'");
    while (lex_.peek().kind != Tok::rbrace) {
      Token i = parse_token();
      expect(Tok::colon, "':'");
      std::vector<TokenSet> fam = parse_family_literal();
      auto& slot = f.con[i];
      if (!slot.empty()) fail(Errc::duplicate_set, "repeated con entry for " + i.text());
      slot = std::move(fam);
    }
    lex_.take();
    expect_keyword("entails");
    expect(Tok::lbrace, "'{'");
    while (lex_.peek().kind != Tok::rbrace) {
      Token i = parse_token();
      expect(Tok::colon, "':'");
      std::vector<Entailment> es = parse_ent_list();
      auto& slot = f.entails[i];
      slot.insert(slot.end(), es.begin(), es.end());
    }
    lex_.take();
    expect(Tok::rbrace, "'}'");
    check_reserved(f.tokens, f.truth);
    // Duplicate family members are a declared error, not silent dedup.
    for (auto& [i, fam] : f.con) {
      std::vector<TokenSet> sorted = fam;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] == sorted[k - 1])
          fail(Errc::duplicate_set,
               "duplicate set " + to_text(sorted[k]) + " in con(" + i.text() + ")");
    }
    f.canonicalize();
    validate_wellformed(f);
    return f;
  }

  InfoSystem parse_system() {
    InfoSystem s;
    expect(Tok::lbrace, "'{'");
    expect_keyword("tokens");
    s.tokens = parse_set_literal();
    if (peek_keyword("simplified")) {
      lex_.take();
      s.simplified = true;
    }
    expect_keyword("con");
    s.con = parse_family_literal();
    {
      std::vector<TokenSet> sorted = s.con;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] == sorted[k - 1])
          fail(Errc::duplicate_set, "duplicate set " + to_text(sorted[k]) + " in con");
    }
    expect_keyword("entails");
    s.entails = parse_ent_list();
    expect(Tok::rbrace, "'}'");
    s.canonicalize();
    validate_wellformed(s);
    return s;
  }

  Morphism parse_morphism() {
    Morphism m;
    expect(Tok::lbrace, "'{'");
    expect_keyword("kind");
    std::string kind = expect_ident("morphism kind");
    if (kind == "mapping")
      m.kind = MorphismKind::mapping;
    else if (kind == "family")
      m.kind = MorphismKind::family;
    else if (kind == "global")
      m.kind = MorphismKind::global;
    else
      bad("unknown morphism kind '" + kind + "'");
    expect_keyword("source");
    if (lex_.peek().kind != Tok::str) bad("expected source path string");
    m.source = lex_.take().text;
    expect_keyword("target");
    if (lex_.peek().kind != Tok::str) bad("expected target path string");
    m.target = lex_.take().text;
    expect_keyword("rel");
    expect(Tok::lbrace, "'{'");
    if (m.kind == MorphismKind::mapping) {
      if (lex_.peek().kind != Tok::rbrace) {
        for (const Entailment& e : parse_ent_list())
          m.rel.push_back({std::nullopt, e.from, e.to});
      }
    } else {
      while (lex_.peek().kind != Tok::rbrace) {
        Token i = parse_token();
        expect(Tok::colon, "':'");
        for (const Entailment& e : parse_ent_list()) m.rel.push_back({i, e.from, e.to});
      }
    }
    lex_.take();
    expect(Tok::rbrace, "'}'");
    m.canonicalize();
    return m;
  }

  CslTable parse_csl() {
    CslTable t;
    expect(Tok::lbrace, "'{'");
    expect_keyword("tokens");
    t.tokens = parse_set_literal();
    expect_keyword("truth");
    t.truth = parse_token();
    expect_keyword("stages");
    expect(Tok::lbrace, "'{'");
    while (lex_.peek().kind != Tok::rbrace) {
      Token p = parse_token();
      expect(Tok::colon, "':'");
      t.stages[p] = parse_set_literal();
    }
    lex_.take();
    expect_keyword("derives");
    expect(Tok::lbrace, "'{'");
    while (lex_.peek().kind != Tok::rbrace) {
      Token p = parse_token();
      expect(Tok::colon, "':'");
      expect(Tok::lbrack, "'['");
      while (lex_.peek().kind != Tok::rbrack) {
        expect(Tok::lbrack, "'['");
        TableAntecedent ante;
        if (peek_keyword("self")) {
          lex_.take();
          ante.self = true;
          if (lex_.peek().kind != Tok::arrow) bad("'self' must stand alone before '->'");
        } else {
          std::vector<Token> atoms;
          while (lex_.peek().kind != Tok::arrow) atoms.push_back(parse_token());
          ante.atoms = TokenSet(std::move(atoms));
        }
        expect(Tok::arrow, "'->'");
        Token q = parse_token();
        expect(Tok::rbrack, "']'");
        t.rows[p].push_back({std::move(ante), std::move(q)});
      }
      lex_.take();
    }
    lex_.take();
    expect(Tok::rbrace, "'}'");
    check_reserved(t.tokens, t.truth);
    t.canonicalize();
    validate_table(t);
    return t;
  }

  AbstractBasis parse_basis() {
    AbstractBasis b;
    expect(Tok::lbrace, "'{'");
    expect_keyword("carrier");
    b.carrier = parse_set_literal();
    expect_keyword("prec");
    expect(Tok::lbrack, "'['");
    while (lex_.peek().kind != Tok::rbrack) {
      expect(Tok::lbrack, "'['");
      Token u = parse_token();
      expect(Tok::arrow, "'->'");
      Token v = parse_token();
      expect(Tok::rbrack, "']'");
      b.prec.emplace_back(std::move(u), std::move(v));
    }
    lex_.take();
    expect(Tok::rbrace, "'}'");
    b.canonicalize();
    for (const auto& [u, v] : b.prec)
      if (!b.carrier.contains(u) || !b.carrier.contains(v))
        fail(Errc::unknown_token, "prec pair outside the declared carrier");
    return b;
  }

  Lexer lex_;
};

// ---------------------------------------------------------------------------
// serializer

void write_set(std::ostream& os, const TokenSet& s) { os << '[' << s << ']'; }

void write_family(std::ostream& os, const std::vector<TokenSet>& fam) {
  os << '[';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) os << ' ';
    os << '[' << fam[i] << ']';
  }
  os << ']';
}

void write_ent_entry(std::ostream& os, const TokenSet& from, const Token& to) {
  os << '[';
  if (!from.empty()) os << from << ' ';
  os << "-> " << to << ']';
}

void write_ent_list(std::ostream& os, const std::vector<Entailment>& es) {
  os << '[';
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) os << ' ';
    write_ent_entry(os, es[i].from, es[i].to);
  }
  os << ']';
}

}  // namespace

Document parse_document(const std::string& text) { return Parser(text).parse(); }

std::string serialize(const Frame& f) {
  Frame c = f;
  c.canonicalize();
  std::ostringstream os;
  os << "frame {\n  tokens ";
  write_set(os, c.tokens);
  os << '\n';
  if (c.truth) os << "  truth " << *c.truth << '\n';
  if (c.con.empty()) {
    os << "  con {}\n";
  } else {
    os << "  con {\n";
    for (const auto& [i, fam] : c.con) {
      os << "    " << i << ": ";
      write_family(os, fam);
      os << '\n';
    }
    os << "  }\n";
  }
  if (c.entails.empty()) {
    os << "  entails {}\n";
  } else {
    os << "  entails {\n";
    for (const auto& [i, es] : c.entails) {
      os << "    " << i << ": ";
      write_ent_list(os, es);
      os << '\n';
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const InfoSystem& s) {
  InfoSystem c = s;
  c.canonicalize();
  std::ostringstream os;
  os << "system {\n  tokens ";
  write_set(os, c.tokens);
  os << '\n';
  if (c.simplified) os << "  simplified\n";
  os << "  con ";
  write_family(os, c.con);
  os << "\n  entails ";
  write_ent_list(os, c.entails);
  os << "\n}\n";
  return os.str();
}

std::string serialize(const Morphism& m) {
  Morphism c = m;
  c.canonicalize();
  std::ostringstream os;
  os << "morphism {\n  kind " << morphism_kind_name(c.kind) << "\n  source \"" << c.source
     << "\"\n  target \"" << c.target << "\"\n";
  if (c.rel.empty()) {
    os << "  rel {}\n}\n";
    return os.str();
  }
  os << "  rel {\n";
  if (c.kind == MorphismKind::mapping) {
    os << "    [";
    for (std::size_t i = 0; i < c.rel.size(); ++i) {
      if (i) os << ' ';
      write_ent_entry(os, c.rel[i].from, c.rel[i].to);
    }
    os << "]\n";
  } else {
    std::map<Token, std::vector<Entailment>> staged;
    for (const RelTriple& t : c.rel) staged[*t.stage].push_back({t.from, t.to});
    for (const auto& [i, es] : staged) {
      os << "    " << i << ": ";
      write_ent_list(os, es);
      os << '\n';
    }
  }
  os << "  }\n}\n";
  return os.str();
}

std::string serialize(const CslTable& t) {
  CslTable c = t;
  c.canonicalize();
  std::ostringstream os;
  os << "csl {\n  tokens ";
  write_set(os, c.tokens);
  os << "\n  truth " << c.truth << '\n';
  os << "  stages {\n";
  for (const auto& [p, ps] : c.stages) {
    os << "    " << p << ": ";
    write_set(os, ps);
    os << '\n';
  }
  os << "  }\n";
  if (c.rows.empty()) {
    os << "  derives {}\n";
  } else {
    os << "  derives {\n";
    for (const auto& [p, rows] : c.rows) {
      os << "    " << p << ": [";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ' ';
        os << '[';
        if (rows[i].ante.self)
          os << "self ";
        else if (!rows[i].ante.atoms.empty())
          os << rows[i].ante.atoms << ' ';
        os << "-> " << rows[i].to << ']';
      }
      os << "]\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const AbstractBasis& b) {
  AbstractBasis c = b;
  c.canonicalize();
  std::ostringstream os;
  os << "basis {\n  carrier ";
  write_set(os, c.carrier);
  os << "\n  prec [";
  for (std::size_t i = 0; i < c.prec.size(); ++i) {
    if (i) os << ' ';
    os << '[' << c.prec[i].first << " -> " << c.prec[i].second << ']';
  }
  os << "]\n}\n";
  return os.str();
}

std::string serialize(const Document& d) {
  return std::visit([](const auto& v) { return serialize(v); }, d);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::syntax, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const Document& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::syntax, "cannot write " + path);
  out << serialize(d);
}

std::string_view document_kind(const Document& d) {
  switch (d.index()) {
    case 0: return "frame";
    case 1: return "system";
    case 2: return "morphism";
    case 3: return "csl";
    default: return "basis";
  }
}

}  // namespace cifkit
