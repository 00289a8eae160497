#pragma once

#include <string>
#include <variant>

#include "cifkit/bases.hpp"
#include "cifkit/logic.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

using Document = std::variant<Frame, InfoSystem, Morphism, CslTable, AbstractBasis>;

/// Parses one structure from document text. The result is canonicalized and
/// well-formed; morphism endpoint invariants are deferred to
/// validate_morphism since endpoints live in separate files.
Document parse_document(const std::string& text);

/// Deterministic canonical text: equal structures serialize byte-identically
/// and parse back to equal values.
std::string serialize(const Frame& f);
std::string serialize(const InfoSystem& s);
std::string serialize(const Morphism& m);
std::string serialize(const CslTable& t);
std::string serialize(const AbstractBasis& b);
std::string serialize(const Document& d);

Document load_document(const std::string& path);
void save_document(const Document& d, const std::string& path);

std::string_view document_kind(const Document& d);

}  // namespace cifkit
