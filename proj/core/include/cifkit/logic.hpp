#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cifkit/report.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

/// Binary conjunction tree over atoms. Compared structurally; set semantics
/// enters only through flatten.
class Formula {
public:
  Formula() : Formula(atom(Token::atom("_"))) {}

  static Formula atom(Token t);
  static Formula conj(Formula left, Formula right);

  bool is_atom() const;
  const Token& tok() const;
  const Formula& left() const;
  const Formula& right() const;

  static std::strong_ordering compare(const Formula& a, const Formula& b);
  std::strong_ordering operator<=>(const Formula& other) const { return compare(*this, other); }
  bool operator==(const Formula& other) const { return compare(*this, other) == 0; }

  std::string text() const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Continuous stratified conjunctive logic, presented by a frame that passes
/// check_frame(require_strong, require_truth). Atoms are the frame tokens,
/// the truth constant is the frame's truth token, and derivability is decided
/// by flattening against the frame relations.
struct Csl {
  Frame frame;

  const Token& truth() const { return *frame.truth; }
  /// P_p = {q : {p} entails q at p}.
  TokenSet stage_set(const Token& p) const;
};

/// Wraps a validated strong frame with truth as a logic. Object part of the
/// functor from frames to logics; the caller is responsible for validation.
Csl apply_C(const Frame& f);
/// Morphism part: the approximable family becomes the atom-level table of a
/// global consequence relation.
Morphism apply_C(const Morphism& family);

struct Sequent {
  Token stage;
  bool self = false;                // antecedent = {p}
  std::vector<Formula> antecedent;  // used when !self
  Formula consequent;
};

Formula parse_formula(const std::string& text, const Csl& logic);

/// Atoms occurring in the formula.
TokenSet flatten(const Formula& f);
/// Left-bracketed conjunction of the set in token order; empty set yields the
/// truth atom.
Formula big_and(const TokenSet& x, const Token& truth);
/// Antecedent flattening: self gives {p}, the empty antecedent gives {truth}.
TokenSet flatten_antecedent(const Sequent& s, const Token& truth);

struct TraceStep {
  std::string rule;
  std::string text;
  TokenSet gamma_bar;
  std::optional<Token> atom;
  std::optional<Formula> formula;
};

struct DeriveResult {
  bool derivable = false;
  std::vector<TraceStep> trace;
};

/// Decides the sequent against the presentation frame. Errc::stage when the
/// antecedent contains atoms outside L(P_p) and is not self.
DeriveResult derives(const Csl& logic, const Sequent& s, bool want_trace = false);

/// Antecedent of one atom-level table row: the marker {p} or a set of atoms.
struct TableAntecedent {
  bool self = false;
  TokenSet atoms;

  std::strong_ordering operator<=>(const TableAntecedent& other) const;
  bool operator==(const TableAntecedent& other) const { return (*this <=> other) == 0; }
};

struct TableRow {
  TableAntecedent ante;
  Token to;

  auto operator<=>(const TableRow&) const = default;
};

/// Atom-level presentation of a stratified conjunctive logic: stage sets P_p
/// and the atom-level derivability restriction per stage.
struct CslTable {
  TokenSet tokens;
  Token truth;
  std::map<Token, TokenSet> stages;
  std::map<Token, std::vector<TableRow>> rows;

  bool operator==(const CslTable&) const = default;

  const std::vector<TableRow>& rows_of(const Token& p) const;
  bool row(const Token& p, const TableAntecedent& x, const Token& q) const;

  void canonicalize();
};

/// Structural typing of a table (declared universe, stage domains, row
/// domains). Throws Errc::table.
void validate_table(const CslTable& t);

/// Atom-level table of the logic presented by f.
CslTable read_table(const Csl& logic);

/// Frame determined by a table per the Con^P_p / entailment displays. Works
/// on raw tables; validity is what check_csl_table decides.
Frame apply_E(const CslTable& t);
/// Morphism part: a global consequence relation's atom table becomes an
/// approximable family.
Morphism apply_E(const Morphism& global);

/// Direct verification of the stratified-logic axioms on the table:
/// stratification, stage-inclusion, transfer, (W), (Cut), (R⊤), (SINT).
Report check_csl_table(const CslTable& t, const CheckOptions& opts = {});

/// Formula-level query against a global relation's atom table. When
/// `validated` is set the relation is trusted to be closed under (R⊤), so
/// truth-only consequents hold; raw tables answer from the table alone.
bool global_derives(const Morphism& g, const Csl& src, const Csl& dst, const Sequent& s,
                    bool validated = true);

Morphism compose_global(const Morphism& g1, const Morphism& g2, const Csl& mid,
                        const CheckOptions& opts = {});

/// Executable logic metatheorems: (b1) bar-rule flattening equivalences, (b2)
/// inverse cut, (b3) (INT) <=> (SINT) on the table.
Report verify_logic_metatheorems(const Csl& logic, const CheckOptions& opts = {});

/// Replays a trace produced by derives: every cited rule application must be
/// licensed by the presentation frame and the steps must reconstruct the
/// sequent. Returns false if the trace does not replay.
bool replay_trace(const Csl& logic, const Sequent& s, const std::vector<TraceStep>& trace);

}  // namespace cifkit
