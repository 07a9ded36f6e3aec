#pragma once

// Flat-file form of periodic and even functions.
//
// Text (LF line endings, '#' starts a comment line):
//
//   <modulus> periodic          <modulus> even
//   <f(1)>                      <d> <f(d)>
//   ...                         ...
//   <f(r)>
//
// A value is an exact rational ("p", "p/q"), a decimal float, or a complex
// number written as two floats "<re> <im>". One non-rational value makes the
// whole file floating. A file whose name ends in ".json" is read as
//
//   {"modulus": 4, "representation": "even",
//    "values": [{"divisor": 1, "value": "1"}, ...]}
//
// with rational values as strings, floats as numbers and complex values as
// {"re": x, "im": y}; periodic files use a plain array of values.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drft/drft.hpp"

namespace drft::cli {

enum class Representation { periodic, even };

std::string_view to_string(Representation representation);

struct FunctionFile {
  std::int64_t modulus = 1;
  Representation representation = Representation::periodic;
  // Divisor keys, in file order; empty for periodic files.
  std::vector<std::int64_t> divisors;
  std::variant<std::vector<Rational>, std::vector<Complex>> values;

  bool is_exact() const { return values.index() == 0; }
  std::vector<Complex> complex_values() const;
};

// Throws ParseError naming the offending line or field, and DomainError when
// the values do not match the modulus (wrong count, wrong divisor set).
FunctionFile parse_text(std::string_view text);
FunctionFile parse_json(std::string_view text);
FunctionFile read_function_file(const std::filesystem::path& path);

// Components with magnitude <= chop print as 0.
std::string format_text(const FunctionFile& file, double chop);
std::string format_json(const FunctionFile& file, double chop);

template <Scalar S>
FunctionFile make_file(const ResidueFunction<S>& f) {
  return {f.modulus(), Representation::periodic, {},
          std::vector<S>(f.values().begin(), f.values().end())};
}

template <Scalar S, class Tag>
FunctionFile make_file(const DivisorIndexed<S, Tag>& f) {
  const auto ds = f.divisors().values();
  return {f.modulus(), Representation::even, {ds.begin(), ds.end()},
          std::vector<S>(f.values().begin(), f.values().end())};
}

FunctionFile make_file(const PeriodicSpectrum& spectrum);

template <Scalar S>
ResidueFunction<S> as_periodic(const FunctionFile& file);

template <Scalar S, class Tag = EvenFunctionTag>
DivisorIndexed<S, Tag> as_even(const FunctionFile& file);

}  // namespace drft::cli
