#include "params_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "equiform/errors.hpp"

namespace equiform::cli {

namespace {

using nlohmann::json;

enum class Kind { integer, rational, real };

struct Entry {
  std::string field;
  Kind kind;
  Rational exact;
  double value = 0.0;
};

Entry read_entry(const json& v, const std::string& field) {
  Entry e{field, Kind::integer, Rational(0), 0.0};
  if (v.is_string()) {
    const auto r = parse_rational(v.get<std::string>());
    if (!r) throw InputError(field + ": \"" + v.get<std::string>() + "\" is not a rational p/q");
    e.kind = Kind::rational;
    e.exact = *r;
    e.value = r->get_d();
  } else if (v.is_number_integer()) {
    e.exact = v.is_number_unsigned() ? Rational(std::to_string(v.get<std::uint64_t>()))
                                     : Rational(std::to_string(v.get<std::int64_t>()));
    e.value = v.get<double>();
  } else if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw InputError(field + ": not a finite number");
    if (d == std::trunc(d) && std::fabs(d) < 9.0e15) {
      e.exact = Rational(d);
    } else {
      e.kind = Kind::real;
    }
    e.value = d;
  } else {
    throw InputError(field + ": expected a number or a \"p/q\" string");
  }
  return e;
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

void read_array(const json& doc, const char* key, std::size_t expected, std::vector<Entry>& out) {
  const json& arr = require(doc, key);
  if (!arr.is_array()) throw InputError(std::string(key) + ": expected an array");
  if (arr.size() != expected)
    throw InputError(std::string(key) + ": expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(arr.size()));
  for (std::size_t k = 0; k < expected; ++k)
    out.push_back(read_entry(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
}

}  // namespace

AnyParams parse_params(const json& doc, ScalarMode mode) {
  if (!doc.is_object()) throw InputError("top level: expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "s_prime" && key != "omega" && key != "d_prime")
      throw InputError("unknown field \"" + key + "\"");

  std::vector<Entry> entries;
  entries.push_back(read_entry(require(doc, "s_prime"), "s_prime"));
  read_array(doc, "omega", 21, entries);
  read_array(doc, "d_prime", 7, entries);

  const Entry* first_rational = nullptr;
  const Entry* first_real = nullptr;
  for (const auto& e : entries) {
    if (e.kind == Kind::rational && !first_rational) first_rational = &e;
    if (e.kind == Kind::real && !first_real) first_real = &e;
  }
  if (first_rational && first_real)
    throw InputError("mixed modes: " + first_rational->field + " is an exact string but " +
                     first_real->field + " is a non-integer number");

  bool exact = first_real == nullptr;
  if (mode == ScalarMode::exact) {
    if (!exact) throw InputError("exact mode requested but " + first_real->field + " is a float");
  } else if (mode == ScalarMode::floating) {
    exact = false;
  }

  auto fill = [&](auto& p, auto get) {
    p.s_prime = get(entries[0]);
    for (int i = 0; i < 21; ++i) p.omega[static_cast<std::size_t>(i)] = get(entries[1 + i]);
    for (int i = 0; i < 7; ++i) p.d_prime[static_cast<std::size_t>(i)] = get(entries[22 + i]);
  };
  if (exact) {
    MotionParams<Rational> p;
    fill(p, [](const Entry& e) { return e.exact; });
    return p;
  }
  MotionParams<double> p;
  fill(p, [](const Entry& e) { return e.value; });
  return p;
}

AnyParams parse_params_text(const std::string& text, ScalarMode mode) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Report a line number rather than a byte offset.
    const std::size_t at = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at ? at - 1 : 0), '\n');
    throw InputError("JSON syntax error at line " + std::to_string(line) + ": " + e.what());
  }
  return parse_params(doc, mode);
}

AnyParams load_params(const std::string& path, ScalarMode mode) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_params_text(buf.str(), mode);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class S>
json to_json(const MotionParams<S>& p) {
  auto enc = [](const S& x) -> json {
    if constexpr (is_exact_v<S>)
      return x.get_str();
    else
      return x;
  };
  json omega = json::array();
  for (const auto& x : p.omega) omega.push_back(enc(x));
  json d = json::array();
  for (const auto& x : p.d_prime) d.push_back(enc(x));
  return json{{"s_prime", enc(p.s_prime)}, {"omega", omega}, {"d_prime", d}};
}

template json to_json(const MotionParams<Rational>&);
template json to_json(const MotionParams<double>&);

}  // namespace equiform::cli
