#include "kummer_app/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kummer::app {

using nlohmann::json;

DocumentError::DocumentError(std::vector<std::string> violations)
    : std::runtime_error(violations.empty() ? "invalid document" : violations.front()),
      violations_(std::move(violations)) {}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw std::invalid_argument("output format must be \"text\" or \"jsonl\", got \"" + name + "\"");
}

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Checker {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

  void only_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!allowed.count(it.key())) fail(path + "/" + it.key(), "unknown field");
    }
  }

  std::optional<long long> integer(const json& obj, const std::string& path, const std::string& key, long long lo,
                                   long long hi) {
    if (!obj.contains(key)) {
      fail(path + "/" + key, "missing required field");
      return std::nullopt;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
      fail(path + "/" + key, "expected an integer, got " + std::string(v.type_name()));
      return std::nullopt;
    }
    long long x = v.get<long long>();
    if (x < lo || x > hi) {
      fail(path + "/" + key, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
      return std::nullopt;
    }
    return x;
  }

  std::vector<int> int_list(const json& obj, const std::string& path, const std::string& key) {
    std::vector<int> out;
    if (!obj.contains(key)) {
      fail(path + "/" + key, "missing required field");
      return out;
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
      fail(path + "/" + key, "expected an array of positive integers");
      return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer() || v[i].get<long long>() < 1 || v[i].get<long long>() > 1000) {
        fail(path + "/" + key + "/" + std::to_string(i), "expected a positive integer");
        continue;
      }
      out.push_back(v[i].get<int>());
    }
    return out;
  }

  std::vector<std::string> string_list(const json& obj, const std::string& path, const std::string& key) {
    std::vector<std::string> out;
    if (!obj.contains(key)) {
      fail(path + "/" + key, "missing required field");
      return out;
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
      fail(path + "/" + key, "expected an array of strings");
      return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) {
        fail(path + "/" + key + "/" + std::to_string(i), "expected a string");
        out.emplace_back();
        continue;
      }
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }
};

hurwitz::BranchData read_branch_data(const json& j, Checker& c) {
  const std::string path = "/branch_data";
  hurwitz::BranchData b;
  if (!j.is_object()) {
    c.fail(path, "expected an object");
    return b;
  }
  c.only_keys(j, path, {"n", "x", "y", "z", "r"});
  std::size_t before = c.errors.size();
  auto n = c.integer(j, path, "n", 1, 64);
  b.x = c.int_list(j, path, "x");
  b.y = c.int_list(j, path, "y");
  b.z = c.int_list(j, path, "z");
  auto r = c.integer(j, path, "r", 0, 1000);
  if (c.errors.size() != before) return b;
  b.n = static_cast<int>(*n);
  b.r = static_cast<int>(*r);
  for (const auto& v : hurwitz::validate(b)) c.fail(path, v);
  return b;
}

hurwitz::HurwitzCover read_tuple(const json& j, Checker& c) {
  const std::string path = "/tuple";
  hurwitz::HurwitzCover g;
  if (!j.is_object()) {
    c.fail(path, "expected an object");
    return g;
  }
  c.only_keys(j, path, {"degree", "marks", "permutations"});
  std::size_t before = c.errors.size();
  auto degree = c.integer(j, path, "degree", 1, 64);
  auto marks = c.string_list(j, path, "marks");
  auto perms = c.string_list(j, path, "permutations");
  if (c.errors.size() != before) return g;
  g.degree = static_cast<std::size_t>(*degree);
  int extras = 0;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    try {
      hurwitz::Mark m = hurwitz::parse_mark(marks[i]);
      if (m.kind == hurwitz::MarkKind::extra && m.index == 0) m.index = ++extras;
      g.marks.push_back(m);
    } catch (const std::invalid_argument& e) {
      c.fail(path + "/marks/" + std::to_string(i), e.what());
    }
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    try {
      g.tuple.push_back(Permutation::parse(perms[i], g.degree));
    } catch (const std::exception& e) {
      c.fail(path + "/permutations/" + std::to_string(i), std::string("\"") + perms[i] + "\": " + e.what());
    }
  }
  if (c.errors.size() != before) return g;
  for (const auto& v : hurwitz::validate(g)) c.fail(path, v);
  return g;
}

DocumentOptions read_options(const json& j, Checker& c) {
  const std::string path = "/options";
  DocumentOptions o;
  if (!j.is_object()) {
    c.fail(path, "expected an object");
    return o;
  }
  c.only_keys(j, path, {"precision_bits", "step_scale", "output_format"});
  if (j.contains("precision_bits")) {
    if (auto p = c.integer(j, path, "precision_bits", 53, 4096)) o.precision_bits = static_cast<int>(*p);
  }
  if (j.contains("step_scale")) {
    const json& v = j.at("step_scale");
    if (!v.is_number() || !(v.get<double>() > 0) || v.get<double>() > 1) {
      c.fail(path + "/step_scale", "expected a number in (0, 1]");
    } else {
      o.step_scale = v.get<double>();
    }
  }
  if (j.contains("output_format")) {
    const json& v = j.at("output_format");
    try {
      if (!v.is_string()) throw std::invalid_argument("expected \"text\" or \"jsonl\"");
      o.output_format = parse_format(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      c.fail(path + "/output_format", e.what());
    }
  }
  return o;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw DocumentError({line_column(text, e.byte) + ": " + (pos == std::string::npos ? msg : msg.substr(pos))});
  }
  Checker c;
  InputDocument doc;
  if (!j.is_object()) throw DocumentError({"/: expected an object"});
  c.only_keys(j, "", {"branch_data", "tuple", "options"});
  bool has_b = j.contains("branch_data"), has_t = j.contains("tuple");
  if (has_b == has_t) c.fail("/", "exactly one of \"branch_data\" and \"tuple\" is required");
  if (has_b) doc.branch_data = read_branch_data(j.at("branch_data"), c);
  if (has_t) doc.tuple = read_tuple(j.at("tuple"), c);
  if (j.contains("options")) doc.options = read_options(j.at("options"), c);
  if (!c.errors.empty()) throw DocumentError(c.errors);
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError({path + ": cannot open file"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace kummer::app
