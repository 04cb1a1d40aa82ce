#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "equiform/motion.hpp"

namespace equiform::cli {

enum class ScalarMode { exact, floating, automatic };

using AnyParams = std::variant<MotionParams<Rational>, MotionParams<double>>;

/// Reads {"s_prime": x, "omega": [21 x], "d_prime": [7 x]}.
///
/// "p/q" strings force exact mode, non-integer numbers force float mode,
/// integers fit either. Mixing strings with non-integer numbers, wrong array
/// lengths and non-numeric entries throw InputError naming the field.
/// `mode` overrides the automatic choice; exact with float input is rejected.
AnyParams parse_params(const nlohmann::json& doc, ScalarMode mode = ScalarMode::automatic);
AnyParams parse_params_text(const std::string& text, ScalarMode mode = ScalarMode::automatic);
AnyParams load_params(const std::string& path, ScalarMode mode = ScalarMode::automatic);

/// Exact values serialize as "p/q" strings (integers as "p"), floats as numbers.
template <class S>
nlohmann::json to_json(const MotionParams<S>& p);

}  // namespace equiform::cli
