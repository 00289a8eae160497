#include "cifkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace cifkit {

namespace {

std::string part_text(const WitnessPart& p) {
  if (const Token* t = std::get_if<Token>(&p)) return t->text();
  return to_text(std::get<TokenSet>(p));
}

}  // namespace

bool Violation::operator<(const Violation& other) const {
  if (axiom != other.axiom) return axiom < other.axiom;
  return witness_text(witness) < witness_text(other.witness);
}

bool Violation::operator==(const Violation& other) const {
  return axiom == other.axiom && witness_text(witness) == witness_text(other.witness);
}

bool Report::names(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::vector<std::string> Report::axiom_ids() const {
  std::vector<std::string> ids;
  for (const Violation& v : violations) ids.push_back(v.axiom);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void Report::add(std::string axiom, std::vector<WitnessPart> witness, std::string message) {
  violations.push_back({std::move(axiom), std::move(witness), std::move(message)});
}

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void Report::finalize(bool keep_all) {
  std::stable_sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  if (!keep_all) {
    std::vector<Violation> kept;
    for (Violation& v : violations)
      if (kept.empty() || kept.back().axiom != v.axiom) kept.push_back(std::move(v));
    violations = std::move(kept);
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (pass()) {
    os << "pass\n";
    return os.str();
  }
  os << "fail (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s")
     << ")\n";
  for (const Violation& v : violations)
    os << "  " << v.axiom << " at " << witness_text(v.witness) << ": " << v.message << "\n";
  return os.str();
}

std::string witness_text(const std::vector<WitnessPart>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << part_text(parts[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace cifkit
