#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "culat/doubling.hpp"
#include "culat/poset.hpp"

namespace culat {

// Malformed input; line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct NamedPoset {
  Poset poset;
  std::vector<std::string> names;  // one per element

  // Element by name, or by index when no name matches. Throws
  // std::invalid_argument.
  Element resolve(std::string_view token) const;
};

// Text format:
//   # comment
//   <n>
//   names <name_0> ... <name_{n-1}>     (optional)
//   <u> <v>                             (one cover or relation per line)
// Without a `names` line, u and v are indices; with it, names.
// JSON format: {"n": 5, "names": [...], "covers": [[0, 1], ...]}.
// parse_poset picks JSON when the first non-blank character is '{'. If the
// given indices are not a linear extension, elements are renumbered.
NamedPoset parse_poset(std::string_view text);
NamedPoset parse_poset_text(std::string_view text);
NamedPoset parse_poset_json(std::string_view text);

std::string format_poset(const Poset& p, const std::vector<std::string>& names = {});
std::string format_poset_json(const Poset& p, const std::vector<std::string>& names = {});

// Doubling script: one `a b` interval per line (indices into the lattice
// built so far), `#` comments.
std::vector<Interval> parse_script(std::string_view text);

// Hasse diagram in DOT, bottom to top; `edge_label` may return "" for none.
std::string to_dot(const Poset& p, const std::vector<std::string>& names, std::string_view graph_name,
                   const std::function<std::string(Element, Element)>& edge_label = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

std::vector<std::string> default_names(int n);

}  // namespace culat
