#pragma once

#include <json.hpp>

#include "orbitrace/hochschild.hpp"
#include "orbitrace/s1cw.hpp"
#include "orbitrace/seifert_data.hpp"
#include "orbitrace/t2cw.hpp"

namespace orbitrace::io {

using json = nlohmann::json;

/// Integers that fit in 64 bits become numbers, larger ones strings.
json to_json(const Integer& n);
Integer integer_from_json(const json& j);
/// {"num": n, "den": d} with d > 0 in lowest terms.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
/// {"free": [...], "torsion": [...], "group": {"rank": r, "torsion": [...]}}
json to_json(const AbelianElement& a);
json to_json(const FgAbelianGroup& g);

OraclePtr oracle_from_json(const json& j);
json oracle_to_json(const GroupOracle& oracle);

/// Word as [[generator, exponent], ...]; generator is an id or a name.
Word word_from_json(const json& j, const GroupOracle& oracle);
json word_to_json(const Word& w, const GroupOracle& oracle);

SeifertData seifert_from_json(const json& j);
json seifert_to_json(const SeifertData& d);

S1CWComplex s1cw_from_json(const json& j);
json s1cw_to_json(const S1CWComplex& x);

T2CWComplex t2cw_from_json(const json& j);
json t2cw_to_json(const T2CWComplex& x);

json class_to_json(const ClassId& id);
json to_json(const ComponentClass& c);
json to_json(const Chain1& c);

}  // namespace orbitrace::io
