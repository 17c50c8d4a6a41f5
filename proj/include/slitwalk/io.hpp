#pragma once

// JSON and CSV renderings of series, exact numbers and enumeration tables.
// Output is deterministic: terms are sorted by (n, i, j, k).

#include <string>
#include <vector>

#include "json.hpp"
#include "slitwalk/fps.hpp"
#include "slitwalk/oracle.hpp"

namespace slitwalk {

using Json = nlohmann::ordered_json;

// Default variable names for a series of the given arity: (x), (x, y), (x, y, v).
std::vector<std::string> default_vars(int arity);

// {"vars":[..., "t"], "order":N, "terms":[{"i":..,"j":..,"n":..,"c":"num/den"}]}
// Exponent keys are i, j, k for the first, second and third variable.
Json series_to_json(const TSeries<BigRat>& s, const std::vector<std::string>& vars = {});
TSeries<BigRat> series_from_json(const Json& j);
// Header "n,i[,j[,k]],c".
std::string series_to_csv(const TSeries<BigRat>& s);

Json rat_to_json(const BigRat& q);
BigRat rat_from_json(const Json& j);
Json rats_to_json(const std::vector<BigRat>& v);

// {"a":"num/den","b":"num/den","d":D}
template <int D>
Json quad_to_json(const QuadElem<D>& x) {
  return Json{{"a", to_compact_string(x.a())}, {"b", to_compact_string(x.b())}, {"d", D}};
}
AnyQuad quad_from_json(const Json& j);

// One row per (n, i, j): "n,i,j,count".
std::string tables_to_csv(const std::vector<CountTable>& tables);
Json tables_to_json(const std::vector<CountTable>& tables);

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace slitwalk
