#pragma once

#include <json.hpp>

#include "eulerdec/decompose.hpp"
#include "eulerdec/diophantine.hpp"
#include "eulerdec/recognize.hpp"

namespace eulerdec::cli {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const mpz_class& z);
json to_json(const Poly& p);
json to_json(const Linear& l);
json to_json(const NormalizedDecomposition& d);
json to_json(const ExceptionalForm& f);
json to_json(const FamilyPair& p);

/// Two-space indented, newline terminated. Re-dumping parsed output yields the same bytes.
std::string render(const json& j);

}  // namespace eulerdec::cli
