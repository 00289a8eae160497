#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cifkit {

enum class Errc {
  syntax,         // malformed document text
  unknown_token,  // reference outside the declared universe
  ent_domain,     // entailment whose left set is not in the consistency family
  duplicate_set,  // duplicate set inside a consistency family
  reserved,       // reserved truth atom used as an ordinary token
  bound,          // a configured search or size bound was exceeded
  no_truth,       // truth token required but not declared
  type,           // morphism kind or endpoint mismatch
  stage,          // sequent antecedent outside the stage language
  interp_fail,    // extracted basis fails the interpolation law
  table,          // malformed atom-level derivability table
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::syntax: return "E_SYNTAX";
    case Errc::unknown_token: return "E_UNKNOWN_TOKEN";
    case Errc::ent_domain: return "E_ENT_DOMAIN";
    case Errc::duplicate_set: return "E_DUP";
    case Errc::reserved: return "E_RESERVED";
    case Errc::bound: return "E_BOUND";
    case Errc::no_truth: return "E_NO_TRUTH";
    case Errc::type: return "E_TYPE";
    case Errc::stage: return "E_STAGE";
    case Errc::interp_fail: return "E_INTERP_FAIL";
    case Errc::table: return "E_TABLE";
  }
  return "E_UNKNOWN";
}

/// Exception carrying one of the module error codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Countdown budget for existential searches. Each candidate visited spends
/// one unit; exhausting the budget raises Errc::bound.
struct Budget {
  long long left = 1'000'000;

  void spend(long long n = 1) {
    left -= n;
    if (left < 0) fail(Errc::bound, "search bound exceeded");
  }
};

}  // namespace cifkit
