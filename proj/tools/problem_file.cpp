#include "problem_file.hpp"

#include "taylorcert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace tcert {

namespace {

struct Value {
  std::string text;
  bool quoted = false;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of the first character of `text`
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::map<std::string, Value> split_assignments(std::string_view text) {
  std::map<std::string, Value> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::size_t i = 0;
    auto skip = [&] {
      while (i < line.size() && is_space(line[i])) ++i;
    };
    skip();
    if (i == line.size() || line[i] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t key_start = i;
    while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
    if (i == key_start) syntax_error(line_no, i + 1, "expected a key");
    std::string key(line.substr(key_start, i - key_start));
    skip();
    if (i == line.size() || line[i] != '=') syntax_error(line_no, i + 1, "expected '=' after '" + key + "'");
    ++i;
    skip();
    Value v;
    v.line = line_no;
    if (i < line.size() && line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) syntax_error(line_no, i + 1, "unterminated string");
      v.text = std::string(line.substr(i + 1, close - i - 1));
      v.quoted = true;
      v.column = i + 2;
      i = close + 1;
    } else {
      const std::size_t value_start = i;
      while (i < line.size() && !is_space(line[i]) && line[i] != '#') ++i;
      if (i == value_start) syntax_error(line_no, i + 1, "missing value for '" + key + "'");
      v.text = std::string(line.substr(value_start, i - value_start));
      v.column = value_start + 1;
    }
    skip();
    if (i < line.size() && line[i] != '#') syntax_error(line_no, i + 1, "unexpected text after value");
    if (out.contains(key)) syntax_error(line_no, key_start + 1, "duplicate key '" + key + "'");
    out.emplace(std::move(key), std::move(v));
    if (end == text.size()) break;
  }
  return out;
}

Rational rational_field(const std::string& key, const Value& v) {
  try {
    return Rational::parse(v.text);
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(v.line) + ", column " + std::to_string(v.column) + ": " + key +
                     ": expected an integer, decimal or p/q rational, got '" + v.text + "'");
  }
}

}  // namespace

ParsedProblem parse_problem(std::string_view text) {
  auto fields = split_assignments(text);
  static const char* const known[] = {"f", "x0", "y0", "degree", "x1", "r1", "r2", "rounding", "width"};
  for (const auto& [key, v] : fields) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw InputError("line " + std::to_string(v.line) + ": unknown key '" + key + "'");
    }
  }
  for (const char* required : {"f", "x0", "y0", "degree", "x1"}) {
    if (!fields.contains(required)) throw InputError(std::string(required) + ": missing required field");
  }

  ParsedProblem out;
  ProblemSpec& p = out.spec;

  const Value& fv = fields.at("f");
  try {
    p.f = parse_flow_expr(fv.text);
  } catch (const ExprSyntaxError& e) {
    throw InputError("line " + std::to_string(fv.line) + ", column " + std::to_string(fv.column + e.column() - 1) +
                     ": f: " + e.detail());
  }
  p.x0 = rational_field("x0", fields.at("x0"));
  p.y0 = rational_field("y0", fields.at("y0"));
  p.x1 = rational_field("x1", fields.at("x1"));

  const Value& dv = fields.at("degree");
  const bool digits_only =
      !dv.text.empty() && std::all_of(dv.text.begin(), dv.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!digits_only || dv.text.size() > 3) {
    throw InputError("degree: must be a non-negative integer below 1000, got '" + dv.text + "'");
  }
  p.degree = static_cast<unsigned>(std::stoul(dv.text));

  for (const char* key : {"r1", "r2"}) {
    Rational& target = std::string(key) == "r1" ? p.r1 : p.r2;
    if (const auto it = fields.find(key); it != fields.end()) {
      target = rational_field(key, it->second);
    } else {
      target = Rational(1);
      out.warnings.push_back(std::string(key) + " not given; using the default 1");
    }
  }
  if (const auto it = fields.find("rounding"); it != fields.end()) {
    try {
      p.rounding = DecimalRounding::parse(it->second.text);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("rounding: ") + e.what());
    }
  }
  if (const auto it = fields.find("width"); it != fields.end()) p.enclosure_width = rational_field("width", it->second);

  p.validate();
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedProblem load_problem(const std::string& path) { return parse_problem(read_text_file(path)); }

Polynomial load_polynomial(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string joined;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    joined += line + " ";
  }
  try {
    return parse_polynomial(joined);
  } catch (const ExprSyntaxError& e) {
    throw InputError(path + ": " + e.detail());
  }
}

}  // namespace tcert
