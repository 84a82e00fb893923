#include "culat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace culat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Lines with comments stripped; blank lines skipped.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) f(number, line);
    pos = end + 1;
  }
}

NamedPoset build(int n, std::vector<std::string> names, const std::vector<Relation>& relations, int line) {
  std::vector<Element> relabel;
  Poset p;
  try {
    p = Poset::from_covers(n, relations, &relabel);
  } catch (const CycleError& e) {
    std::string msg = "relations contain a cycle:";
    for (Element x : e.cycle()) msg += " " + names[x];
    throw ParseError(line, msg);
  }
  std::vector<std::string> renamed(n);
  for (Element x = 0; x < n; ++x) renamed[relabel.empty() ? x : relabel[x]] = std::move(names[x]);
  return NamedPoset{std::move(p), std::move(renamed)};
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Element NamedPoset::resolve(std::string_view token) const {
  for (Element x = 0; x < static_cast<Element>(names.size()); ++x) {
    if (names[x] == token) return x;
  }
  if (auto v = parse_int(token); v && *v >= 0 && *v < poset.size()) return *v;
  throw std::invalid_argument("unknown element '" + std::string(token) + "'");
}

NamedPoset parse_poset_text(std::string_view text) {
  int n = -1;
  bool named = false;
  std::vector<std::string> names;
  std::vector<Relation> relations;
  int last_line = 0;
  for_each_line(text, [&](int number, std::string_view line) {
    last_line = number;
    const auto tokens = split_ws(line);
    if (n < 0) {
      const auto v = parse_int(tokens[0]);
      if (tokens.size() != 1 || !v) throw ParseError(number, "expected the element count");
      if (*v < 0 || *v > kMaxElements) {
        throw ParseError(number, "element count must be between 0 and " + std::to_string(kMaxElements));
      }
      n = *v;
      names = default_names(n);
      return;
    }
    if (tokens[0] == "names") {
      if (named || !relations.empty()) throw ParseError(number, "`names` must directly follow the element count");
      if (static_cast<int>(tokens.size()) != n + 1) {
        throw ParseError(number, "expected " + std::to_string(n) + " names, got " + std::to_string(tokens.size() - 1));
      }
      for (int i = 0; i < n; ++i) {
        names[i] = std::string(tokens[i + 1]);
        for (int k = 0; k < i; ++k) {
          if (names[k] == names[i]) throw ParseError(number, "duplicate name '" + names[i] + "'");
        }
      }
      named = true;
      return;
    }
    if (tokens.size() != 2) throw ParseError(number, "expected a pair `u v`");
    Element ends[2];
    for (int k = 0; k < 2; ++k) {
      if (named) {
        const auto it = std::find(names.begin(), names.end(), tokens[k]);
        if (it == names.end()) throw ParseError(number, "unknown element '" + std::string(tokens[k]) + "'");
        ends[k] = static_cast<Element>(it - names.begin());
      } else {
        const auto v = parse_int(tokens[k]);
        if (!v || *v < 0 || *v >= n) {
          throw ParseError(number, "element '" + std::string(tokens[k]) + "' is not an index below " + std::to_string(n));
        }
        ends[k] = *v;
      }
    }
    if (ends[0] == ends[1]) throw ParseError(number, "an element cannot cover itself");
    relations.emplace_back(ends[0], ends[1]);
  });
  if (n < 0) throw ParseError(0, "empty input: expected the element count");
  return build(n, std::move(names), relations, last_line);
}

NamedPoset parse_poset_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line number.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxElements) throw ParseError(0, "element count out of range");
    std::vector<std::string> names = default_names(n);
    if (doc.contains("names")) {
      names = doc.at("names").get<std::vector<std::string>>();
      if (static_cast<int>(names.size()) != n) throw ParseError(0, "`names` must have n entries");
    }
    std::vector<Relation> relations;
    for (const auto& pair : doc.at("covers")) {
      const auto uv = pair.get<std::vector<int>>();
      if (uv.size() != 2 || uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n || uv[0] == uv[1]) {
        throw ParseError(0, "bad cover " + pair.dump());
      }
      relations.emplace_back(uv[0], uv[1]);
    }
    return build(n, std::move(names), relations, 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed poset JSON: ") + e.what());
  }
}

NamedPoset parse_poset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_poset_json(text);
  return parse_poset_text(text);
}

std::string format_poset(const Poset& p, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << p.size() << '\n';
  const bool named = !names.empty() && names != default_names(p.size());
  if (named) {
    out << "names";
    for (const auto& name : names) out << ' ' << name;
    out << '\n';
  }
  for (auto [u, v] : p.cover_relations()) {
    if (named) out << names[u] << ' ' << names[v] << '\n';
    else out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string format_poset_json(const Poset& p, const std::vector<std::string>& names) {
  nlohmann::json doc;
  doc["n"] = p.size();
  if (!names.empty()) doc["names"] = names;
  doc["covers"] = nlohmann::json::array();
  for (auto [u, v] : p.cover_relations()) doc["covers"].push_back({u, v});
  return doc.dump();
}

std::vector<Interval> parse_script(std::string_view text) {
  std::vector<Interval> steps;
  for_each_line(text, [&](int number, std::string_view line) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(number, "expected an interval `a b`");
    const auto a = parse_int(tokens[0]);
    const auto b = parse_int(tokens[1]);
    if (!a || !b || *a < 0 || *b < 0) throw ParseError(number, "interval ends must be nonnegative indices");
    steps.push_back({*a, *b});
  });
  return steps;
}

std::string to_dot(const Poset& p, const std::vector<std::string>& names, std::string_view graph_name,
                   const std::function<std::string(Element, Element)>& edge_label) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=\"" << (names.empty() ? std::to_string(x) : names[x]) << "\"];\n";
  }
  for (auto [u, v] : p.cover_relations()) {
    out << "  n" << u << " -> n" << v;
    if (edge_label) {
      const std::string label = edge_label(u, v);
      if (!label.empty()) out << " [label=\"" << label << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace culat
