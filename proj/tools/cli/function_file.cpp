#include "cli/function_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace drft::cli {

namespace {

using Token = std::variant<Rational, Complex>;

bool looks_rational(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      return false;
    }
  }
  return true;
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

Token parse_scalar(std::string_view token, std::size_t line) {
  if (looks_rational(token)) {
    try {
      return Rational::parse(token);
    } catch (const ParseError& e) {
      throw ParseError(where(line) + e.what());
    }
  }
  if (auto d = parse_double(token)) return Complex(*d, 0.0);
  throw ParseError(where(line) + "not a number: '" + std::string(token) + "'");
}

Token parse_complex(std::string_view re, std::string_view im, std::size_t line) {
  const auto a = parse_double(re);
  const auto b = parse_double(im);
  if (!a || !b) {
    throw ParseError(where(line) + "not a complex number: '" + std::string(re) + " " +
                     std::string(im) + "'");
  }
  return Complex(*a, *b);
}

std::int64_t parse_int(std::string_view s, std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError(where(line) + "bad " + std::string(field) + ": '" + std::string(s) + "'");
  }
  return value;
}

Representation parse_representation(std::string_view s, std::size_t line) {
  if (s == "periodic") return Representation::periodic;
  if (s == "even") return Representation::even;
  throw ParseError(where(line) + "representation must be 'periodic' or 'even', got '" +
                   std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Collapses tokens into one scalar kind and checks them against the modulus.
FunctionFile assemble(std::int64_t modulus, Representation representation,
                      std::vector<std::int64_t> keys, const std::vector<Token>& tokens) {
  if (modulus < 1) throw ParseError("modulus must be positive, got " + std::to_string(modulus));
  FunctionFile file;
  file.modulus = modulus;
  file.representation = representation;
  file.divisors = std::move(keys);
  bool exact = true;
  for (const auto& t : tokens) exact = exact && t.index() == 0;
  if (exact) {
    std::vector<Rational> v;
    for (const auto& t : tokens) v.push_back(std::get<Rational>(t));
    file.values = std::move(v);
  } else {
    std::vector<Complex> v;
    for (const auto& t : tokens) {
      v.push_back(t.index() == 0 ? to_complex(std::get<Rational>(t)) : std::get<Complex>(t));
    }
    file.values = std::move(v);
  }
  // Structural validation: construct the function once.
  if (exact) {
    representation == Representation::even ? (void)as_even<Rational>(file)
                                           : (void)as_periodic<Rational>(file);
  } else {
    representation == Representation::even ? (void)as_even<Complex>(file)
                                           : (void)as_periodic<Complex>(file);
  }
  return file;
}

std::string format_double(double x, double chop) {
  if (std::abs(x) <= chop || x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

template <class S>
const std::vector<S>& values_of(const FunctionFile& file) {
  return std::get<std::vector<S>>(file.values);
}

}  // namespace

std::string_view to_string(Representation representation) {
  return representation == Representation::even ? "even" : "periodic";
}

std::vector<Complex> FunctionFile::complex_values() const {
  if (!is_exact()) return std::get<std::vector<Complex>>(values);
  std::vector<Complex> out;
  for (const auto& q : std::get<std::vector<Rational>>(values)) out.push_back(to_complex(q));
  return out;
}

FunctionFile parse_text(std::string_view text) {
  std::optional<std::pair<std::int64_t, Representation>> header;
  std::vector<std::int64_t> keys;
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    const auto fields = split(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (!header) {
      if (fields.size() != 2) {
        throw ParseError(where(line_no) + "header must be '<modulus> periodic|even'");
      }
      header.emplace(parse_int(fields[0], "modulus", line_no),
                     parse_representation(fields[1], line_no));
      continue;
    }
    std::size_t first = 0;
    if (header->second == Representation::even) {
      if (fields.size() < 2) throw ParseError(where(line_no) + "expected '<divisor> <value>'");
      keys.push_back(parse_int(fields[0], "divisor", line_no));
      first = 1;
    }
    const std::size_t n = fields.size() - first;
    if (n == 1) {
      tokens.push_back(parse_scalar(fields[first], line_no));
    } else if (n == 2) {
      tokens.push_back(parse_complex(fields[first], fields[first + 1], line_no));
    } else {
      throw ParseError(where(line_no) + "too many fields");
    }
  }
  if (!header) throw ParseError("missing header line");
  return assemble(header->first, header->second, std::move(keys), tokens);
}

FunctionFile parse_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  auto field = [&](const json& obj, const char* name) -> const json& {
    if (!obj.is_object() || !obj.contains(name)) {
      throw ParseError(std::string("missing field '") + name + "'");
    }
    return obj.at(name);
  };
  auto scalar = [](const json& v, std::size_t index) -> Token {
    const std::string at = "values[" + std::to_string(index) + "]: ";
    if (v.is_string()) {
      try {
        return Rational::parse(v.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(at + e.what());
      }
    }
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_object() && v.contains("re") && v.contains("im") && v.at("re").is_number() &&
        v.at("im").is_number()) {
      return Complex(v.at("re").get<double>(), v.at("im").get<double>());
    }
    throw ParseError(at + "unsupported value " + v.dump());
  };

  const json& modulus = field(doc, "modulus");
  if (!modulus.is_number_integer()) throw ParseError("field 'modulus' must be an integer");
  const json& rep = field(doc, "representation");
  if (!rep.is_string()) throw ParseError("field 'representation' must be a string");
  const Representation representation = parse_representation(rep.get<std::string>(), 0);
  const json& values = field(doc, "values");
  if (!values.is_array()) throw ParseError("field 'values' must be an array");

  std::vector<std::int64_t> keys;
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (representation == Representation::even) {
      const json& d = field(values[i], "divisor");
      if (!d.is_number_integer()) throw ParseError("values[" + std::to_string(i) + "].divisor must be an integer");
      keys.push_back(d.get<std::int64_t>());
      tokens.push_back(scalar(field(values[i], "value"), i));
    } else {
      tokens.push_back(scalar(values[i], i));
    }
  }
  return assemble(modulus.get<std::int64_t>(), representation, std::move(keys), tokens);
}

FunctionFile read_function_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return path.extension() == ".json" ? parse_json(buffer.str()) : parse_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DomainError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_text(const FunctionFile& file, double chop) {
  std::string out = std::to_string(file.modulus) + " " + std::string(to_string(file.representation)) + "\n";
  const std::size_t count = file.is_exact() ? values_of<Rational>(file).size()
                                            : values_of<Complex>(file).size();
  for (std::size_t i = 0; i < count; ++i) {
    if (file.representation == Representation::even) {
      out += std::to_string(file.divisors[i]) + " ";
    }
    if (file.is_exact()) {
      out += values_of<Rational>(file)[i].to_string();
    } else {
      const Complex z = values_of<Complex>(file)[i];
      out += format_double(z.real(), chop);
      if (std::abs(z.imag()) > chop) out += " " + format_double(z.imag(), chop);
    }
    out += "\n";
  }
  return out;
}

std::string format_json(const FunctionFile& file, double chop) {
  using nlohmann::json;
  auto value = [&](std::size_t i) -> json {
    if (file.is_exact()) return values_of<Rational>(file)[i].to_string();
    const Complex z = values_of<Complex>(file)[i];
    const double re = std::abs(z.real()) <= chop ? 0.0 : z.real();
    if (std::abs(z.imag()) <= chop) return re;
    return json{{"re", re}, {"im", z.imag()}};
  };
  json values = json::array();
  const std::size_t count = file.is_exact() ? values_of<Rational>(file).size()
                                            : values_of<Complex>(file).size();
  for (std::size_t i = 0; i < count; ++i) {
    if (file.representation == Representation::even) {
      values.push_back({{"divisor", file.divisors[i]}, {"value", value(i)}});
    } else {
      values.push_back(value(i));
    }
  }
  json doc{{"modulus", file.modulus},
           {"representation", std::string(to_string(file.representation))},
           {"values", values}};
  return doc.dump() + "\n";
}

FunctionFile make_file(const PeriodicSpectrum& spectrum) {
  return {spectrum.modulus(), Representation::periodic, {},
          std::vector<Complex>(spectrum.coeffs().begin(), spectrum.coeffs().end())};
}

namespace {

template <Scalar S>
std::vector<S> scalars(const FunctionFile& file) {
  if constexpr (std::same_as<S, Rational>) {
    if (!file.is_exact()) throw DomainError("exact rational values required");
    return values_of<Rational>(file);
  } else {
    return file.complex_values();
  }
}

}  // namespace

template <Scalar S>
ResidueFunction<S> as_periodic(const FunctionFile& file) {
  if (file.representation == Representation::even) return to_periodic(as_even<S>(file));
  return ResidueFunction<S>(file.modulus, scalars<S>(file));
}

template <Scalar S, class Tag>
DivisorIndexed<S, Tag> as_even(const FunctionFile& file) {
  if (file.representation == Representation::periodic) {
    const EvenFunction<S> even = from_periodic(as_periodic<S>(file));
    const auto v = even.values();
    return DivisorIndexed<S, Tag>(even.divisors(), std::vector<S>(v.begin(), v.end()));
  }
  const auto values = scalars<S>(file);
  if (values.size() != file.divisors.size()) {
    throw DomainError("divisor/value count mismatch");
  }
  std::vector<std::pair<std::int64_t, S>> pairs;
  for (std::size_t i = 0; i < values.size(); ++i) pairs.emplace_back(file.divisors[i], values[i]);
  return DivisorIndexed<S, Tag>::from_pairs(file.modulus, pairs);
}

template ResidueFunction<Rational> as_periodic(const FunctionFile&);
template ResidueFunction<Complex> as_periodic(const FunctionFile&);
template EvenFunction<Rational> as_even(const FunctionFile&);
template EvenFunction<Complex> as_even(const FunctionFile&);
template EvenSpectrum<Rational> as_even(const FunctionFile&);
template EvenSpectrum<Complex> as_even(const FunctionFile&);

}  // namespace drft::cli
