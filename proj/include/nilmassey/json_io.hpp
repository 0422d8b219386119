#pragma once

// JSON encodings of the library's objects, built on nlohmann::ordered_json so
// that key order (and therefore output bytes) is stable.
//
//   Series        {"n", "m", "coeffs": [{"word": "XY", "value": 3}, ...]}
//                 nonzero coefficients only, shortlex word order
//   UniMatrix     {"n", "m", "entries": [[...], ...]}
//   ActionSpec    {"n", "m", "group": {"order", "table"}, "chi", "frak_f"}
//                 or {"cyclic": {"d", "c", "gamma"}}
//                 or {"graded": {"group", "chi", "h"}}
//   Cochain1/2    {"weight", "values"}
//   DefiningSystem {"n", "entries": {"i,j": Cochain1}}
//
// Group elements may also be written as words: "x", "y", products by
// juxtaposition, commutators "[a,b]", parentheses and integer powers "^k"
// (negative allowed), e.g. "[x,y]^2[[x,y],x]".

#include <string>

#include <json.hpp>

#include "nilmassey/defining_system.hpp"
#include "nilmassey/errors.hpp"
#include "nilmassey/na_cocycle.hpp"
#include "nilmassey/obstruction.hpp"

namespace nilmassey {

using Json = nlohmann::ordered_json;

/// Malformed input. path() is a JSON pointer-like location such as
/// "/scenarios/2/action/cyclic/c".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

GroupElt parse_group_word(const std::string& word, int n, const Modulus& mod);

Json to_json(const Series& s);
Json to_json(const GroupElt& g);
Json to_json(const UniMatrix& u);
Json to_json(const Cochain1& c);
Json to_json(const Cochain2& c);
Json to_json(const NACocycle& q);
Json to_json(const DefiningSystem& ds);
Json to_json(const ActionSpec& spec);
Json to_json(const ValidationReport& r);

/// Series JSON; n and m must match when given.
Series series_from_json(const Json& j, int n, const Modulus& mod, const std::string& path);
/// Series JSON or a word string; degree n.
GroupElt group_elt_from_json(const Json& j, int n, const Modulus& mod, const std::string& path);
UniMatrix unimatrix_from_json(const Json& j, const std::string& path);
Cochain1 cochain1_from_json(const Json& j, const TwistedGroup& tg, int weight, const std::string& path);
Cochain2 cochain2_from_json(const Json& j, const TwistedGroup& tg, int weight, const std::string& path);
DefiningSystem defining_system_from_json(const Json& j, const TwistedGroup& tg, const std::string& path);
FiniteGroup group_from_json(const Json& j, const std::string& path);

/// Any of the three action forms. n and m come from the caller (a scenario)
/// and must agree with "n"/"m" inside the object when present. Shape errors
/// raise ParseError; the algebraic laws are left to validate_action.
ActionSpec action_from_json(const Json& j, int n, const Modulus& mod, const std::string& path);

}  // namespace nilmassey
