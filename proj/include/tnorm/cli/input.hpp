#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnorm/matrix.hpp"

namespace tnorm::cli {

enum class InputKind { MatrixOnly, Bundle };

/// One input file: a matrix, optionally with genus and singularity data.
struct InputDocument {
  InputKind kind = InputKind::MatrixOnly;
  std::optional<long> genus;
  std::optional<std::vector<long>> singularities;
  IntMatrix matrix{1};

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

/// Recursive-descent reader over a whitespace-free bracket expression.
class Cursor {
 public:
  Cursor(std::string text, std::size_t line) : text_(std::move(text)), line_(line) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Integer integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string token = text_.substr(start, pos_ - start);
    if (token[0] == '+') token.erase(0, 1);
    return Integer(token);
  }

  /// <int>(,<int>)*
  IntVector list() {
    IntVector out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1) + " of '" + text_ + "'");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

inline long to_long(const Integer& z, std::size_t line) {
  if (!z.fits_slong_p()) throw ParseError(line, "integer " + z.get_str() + " out of range");
  return z.get_si();
}

}  // namespace detail

/// `[a,b,...]` or a bare `a,b,...`; used for vectors passed on the command line.
inline IntVector parse_int_vector(std::string_view text, std::size_t line = 0) {
  detail::Cursor cur(detail::strip_spaces(text), line);
  bool bracketed = cur.accept('[');
  IntVector v = cur.list();
  if (bracketed) cur.expect(']');
  if (!cur.done()) cur.fail("trailing characters");
  return v;
}

inline IntMatrix parse_matrix(std::string_view text, std::size_t line = 0) {
  detail::Cursor cur(detail::strip_spaces(text), line);
  std::vector<IntVector> rows;
  cur.expect('[');
  do {
    cur.expect('[');
    rows.push_back(cur.list());
    cur.expect(']');
  } while (cur.accept(','));
  cur.expect(']');
  if (!cur.done()) cur.fail("trailing characters");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.size())
      throw ParseError(line, "matrix is not square: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries for " + std::to_string(rows.size()) +
                                 " rows");
  return IntMatrix(rows);
}

/// Line-oriented `key = value` grammar. Blank lines and `#` comments are
/// skipped; keys are genus, singularities and matrix, each at most once.
/// A genus or singularities key makes the document a Bundle, which then
/// needs both.
inline InputDocument parse_input(std::string_view text) {
  std::optional<std::pair<long, std::size_t>> genus;
  std::optional<std::pair<std::vector<long>, std::size_t>> sing;
  std::optional<IntMatrix> matrix;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string_view key = detail::trim(line.substr(0, eq));
    std::string_view value = detail::trim(line.substr(eq + 1));

    if (key == "genus") {
      if (genus) throw ParseError(line_no, "duplicate key 'genus'");
      detail::Cursor cur(detail::strip_spaces(value), line_no);
      Integer g = cur.integer();
      if (!cur.done()) cur.fail("trailing characters");
      genus.emplace(detail::to_long(g, line_no), line_no);
    } else if (key == "singularities") {
      if (sing) throw ParseError(line_no, "duplicate key 'singularities'");
      detail::Cursor cur(detail::strip_spaces(value), line_no);
      IntVector v = cur.list();
      if (!cur.done()) cur.fail("trailing characters");
      std::vector<long> prongs;
      for (const auto& z : v) prongs.push_back(detail::to_long(z, line_no));
      sing.emplace(std::move(prongs), line_no);
    } else if (key == "matrix") {
      if (matrix) throw ParseError(line_no, "duplicate key 'matrix'");
      matrix = parse_matrix(value, line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!matrix) throw ParseError(line_no, "missing key 'matrix'");
  if (genus && !sing) throw ParseError(genus->second, "'genus' given without 'singularities'");
  if (sing && !genus) throw ParseError(sing->second, "'singularities' given without 'genus'");

  InputDocument doc;
  doc.matrix = std::move(*matrix);
  if (genus) {
    doc.kind = InputKind::Bundle;
    doc.genus = genus->first;
    doc.singularities = std::move(sing->first);
  }
  return doc;
}

/// Inverse of parse_input.
inline std::string serialize_input(const InputDocument& doc) {
  std::string out;
  if (doc.kind == InputKind::Bundle) {
    out += "genus = " + std::to_string(*doc.genus) + "\n";
    out += "singularities = ";
    for (std::size_t i = 0; i < doc.singularities->size(); ++i) {
      if (i) out += ',';
      out += std::to_string((*doc.singularities)[i]);
    }
    out += "\n";
  }
  out += "matrix = " + doc.matrix.to_string() + "\n";
  return out;
}

}  // namespace tnorm::cli
