#include "slitwalk/io.hpp"

#include <sstream>

#include "slitwalk/errors.hpp"

namespace slitwalk {

namespace {
const char* const kExpKeys[] = {"i", "j", "k"};
}

std::vector<std::string> default_vars(int arity) {
  static const std::vector<std::string> names = {"x", "y", "v"};
  if (arity < 1 || arity > kMaxArity) throw PreconditionError("arity must be 1..3");
  return {names.begin(), names.begin() + arity};
}

Json rat_to_json(const BigRat& q) { return to_compact_string(q); }

BigRat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return BigRat(std::to_string(j.get<long long>()));
  throw PreconditionError("expected a rational as \"num/den\"");
}

Json rats_to_json(const std::vector<BigRat>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat_to_json(q));
  return out;
}

AnyQuad quad_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d")) {
    throw PreconditionError("expected {\"a\", \"b\", \"d\"}");
  }
  return make_quad(rat_from_json(j.at("a")), rat_from_json(j.at("b")), j.at("d").get<int>());
}

Json series_to_json(const TSeries<BigRat>& s, const std::vector<std::string>& vars) {
  const int ar = s.arity();
  std::vector<std::string> names = vars.empty() ? default_vars(ar) : vars;
  if (static_cast<int>(names.size()) != ar) throw ArityMismatch("one name per variable expected");
  names.push_back("t");
  Json terms = Json::array();
  for (int n = 0; n <= s.order(); ++n) {
    // Laurent terms are ordered lexicographically by exponent vector already.
    for (const auto& [e, c] : s[n].terms()) {
      Json t;
      for (int v = 0; v < ar; ++v) t[kExpKeys[v]] = e[v];
      t["n"] = n;
      t["c"] = to_compact_string(c);
      terms.push_back(std::move(t));
    }
  }
  return Json{{"vars", names}, {"order", s.order()}, {"terms", std::move(terms)}};
}

TSeries<BigRat> series_from_json(const Json& j) {
  const auto vars = j.at("vars").get<std::vector<std::string>>();
  const int ar = static_cast<int>(vars.size()) - 1;
  if (ar < 1 || ar > kMaxArity) throw PreconditionError("series JSON needs 2..4 variables");
  const int order = j.at("order").get<int>();
  TSeries<BigRat> s(order, ar);
  for (const auto& t : j.at("terms")) {
    Exponents e{0, 0, 0};
    for (int v = 0; v < ar; ++v) e[v] = t.at(kExpKeys[v]).get<int>();
    const int n = t.at("n").get<int>();
    if (n < 0 || n > order) throw TruncationError("term beyond the stated order");
    s.at(n).add_term(e, rat_from_json(t.at("c")));
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string series_to_csv(const TSeries<BigRat>& s) {
  std::ostringstream os;
  const int ar = s.arity();
  os << "n";
  for (int v = 0; v < ar; ++v) os << "," << kExpKeys[v];
  os << ",c\n";
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [e, c] : s[n].terms()) {
      os << n;
      for (int v = 0; v < ar; ++v) os << "," << e[v];
      os << "," << to_compact_string(c) << "\n";
    }
  }
  return os.str();
}

std::string tables_to_csv(const std::vector<CountTable>& tables) {
  std::ostringstream os;
  os << "n,i,j,count\n";
  for (const auto& t : tables) {
    for (const auto& [p, c] : t.counts) {
      os << t.n << "," << p.first << "," << p.second << "," << to_compact_string(c) << "\n";
    }
  }
  return os.str();
}

Json tables_to_json(const std::vector<CountTable>& tables) {
  Json out = Json::array();
  for (const auto& t : tables) {
    Json counts = Json::array();
    for (const auto& [p, c] : t.counts) {
      counts.push_back({{"i", p.first}, {"j", p.second}, {"c", to_compact_string(c)}});
    }
    out.push_back({{"n", t.n}, {"total", to_compact_string(t.total())}, {"counts", counts}});
  }
  return out;
}

}  // namespace slitwalk
