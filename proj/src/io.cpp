#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace npst {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("read failure on file: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw io_error("write failure on file: " + path);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string xml_unescape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '&') {
      if (s.compare(i, 5, "&amp;") == 0) { out += '&'; i += 5; continue; }
      if (s.compare(i, 4, "&lt;") == 0) { out += '<'; i += 4; continue; }
      if (s.compare(i, 4, "&gt;") == 0) { out += '>'; i += 4; continue; }
    }
    out += s[i++];
  }
  return out;
}

// Minimal scanner for the two fixed XML grammars. No namespaces, no
// nesting beyond what the grammars allow.
class XmlScanner {
 public:
  explicit XmlScanner(const std::string& text) : text_(text) {}

  void skip_prolog() {
    skip_ws();
    while (pos_ + 1 < text_.size() && text_[pos_] == '<' &&
           (text_[pos_ + 1] == '?' || text_[pos_ + 1] == '!')) {
      std::size_t close = text_.find('>', pos_);
      if (close == std::string::npos) fail("unterminated prolog");
      pos_ = close + 1;
      skip_ws();
    }
  }

  // Consumes "<name ...>" and returns raw attribute text.
  std::string open_tag(const std::string& name) {
    skip_ws();
    expect('<');
    std::string got = read_name();
    if (got != name) fail("expected <" + name + ">, found <" + got + ">");
    std::size_t close = text_.find('>', pos_);
    if (close == std::string::npos) fail("unterminated <" + name + ">");
    std::string attrs = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    return attrs;
  }

  bool try_close_tag(const std::string& name) {
    std::size_t save = pos_;
    skip_ws();
    if (text_.compare(pos_, name.size() + 3, "</" + name + ">") == 0) {
      pos_ += name.size() + 3;
      return true;
    }
    pos_ = save;
    return false;
  }

  void close_tag(const std::string& name) {
    if (!try_close_tag(name)) fail("expected </" + name + ">");
  }

  // Text content up to the matching close tag (no nested elements allowed).
  std::string element_text(const std::string& name) {
    std::string close = "</" + name + ">";
    std::size_t at = text_.find(close, pos_);
    if (at == std::string::npos) fail("unterminated <" + name + ">");
    std::string content = text_.substr(pos_, at - pos_);
    if (content.find('<') != std::string::npos)
      fail("unexpected markup inside <" + name + ">");
    pos_ = at + close.size();
    return xml_unescape(content);
  }

  bool peek_open(const std::string& name) {
    std::size_t save = pos_;
    skip_ws();
    bool ok = text_.compare(pos_, name.size() + 1, "<" + name) == 0;
    pos_ = save;
    return ok;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing content after document element");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if (text_[i] == '\n') ++line;
    throw data_error("XML parse error at line " + std::to_string(line) + ": " + msg);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string read_name() {
    std::size_t b = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == b) fail("expected tag name");
    return text_.substr(b, pos_ - b);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

long parse_count_attr(const std::string& attrs, const std::string& key,
                      const XmlScanner& scanner) {
  std::size_t at = attrs.find(key);
  while (at != std::string::npos) {
    std::size_t j = at + key.size();
    while (j < attrs.size() && std::isspace(static_cast<unsigned char>(attrs[j]))) ++j;
    if (j < attrs.size() && attrs[j] == '=') {
      ++j;
      while (j < attrs.size() && std::isspace(static_cast<unsigned char>(attrs[j]))) ++j;
      // accept "..", '..' and the doubled-quote style of the grammar
      while (j < attrs.size() && (attrs[j] == '"' || attrs[j] == '\'')) ++j;
      std::size_t b = j;
      while (j < attrs.size() && std::isdigit(static_cast<unsigned char>(attrs[j]))) ++j;
      if (j == b) scanner.fail("attribute " + key + " has no numeric value");
      return std::stol(attrs.substr(b, j - b));
    }
    at = attrs.find(key, at + 1);
  }
  scanner.fail("missing attribute " + key);
}

// Splits CSV/TXT content into trimmed tokens. A trailing separator per
// line is tolerated; an empty token anywhere else is an error. Lines
// that are entirely blank are skipped. Token indices are per line.
std::vector<std::vector<std::string>> split_lines(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string line = eol == std::string::npos ? content.substr(pos)
                                                : content.substr(pos, eol - pos);
    pos = eol == std::string::npos ? content.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    std::vector<std::string> pieces;
    std::size_t b = 0;
    while (true) {
      std::size_t sep = line.find(';', b);
      pieces.push_back(trim(sep == std::string::npos ? line.substr(b)
                                                     : line.substr(b, sep - b)));
      if (sep == std::string::npos) break;
      b = sep + 1;
    }
    if (pieces.size() > 1 && pieces.back().empty()) pieces.pop_back();  // trailing ';'
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].empty())
        throw data_error("parse error at line " + std::to_string(line_no) +
                         ", token " + std::to_string(i + 1) + ": empty token");
    }
    if (!pieces.empty()) rows.push_back(std::move(pieces));
  }
  return rows;
}

std::vector<std::string> read_sequence_tokens(const std::string& path, FileFormat f) {
  std::string content = read_file(path);
  std::vector<std::string> tokens;
  if (f == FileFormat::xml) {
    XmlScanner sc(content);
    sc.skip_prolog();
    sc.open_tag("sequence");
    while (!sc.try_close_tag("sequence")) {
      sc.open_tag("element");
      tokens.push_back(trim(sc.element_text("element")));
      if (tokens.back().empty())
        sc.fail("element " + std::to_string(tokens.size()) + " is empty");
    }
    sc.expect_end();
  } else {
    for (auto& row : split_lines(content))
      for (auto& tok : row) tokens.push_back(std::move(tok));
  }
  if (tokens.empty()) throw data_error("empty payload in " + path);
  return tokens;
}

}  // namespace

FileFormat format_from_extension(const std::string& path) {
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos)
    throw usage_error("cannot infer format: no extension on " + path);
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == "xml") return FileFormat::xml;
  if (ext == "csv") return FileFormat::csv;
  if (ext == "txt") return FileFormat::txt;
  throw usage_error("cannot infer format from extension ." + ext +
                    " (use --format xml|csv|txt)");
}

const char* format_name(FileFormat f) {
  switch (f) {
    case FileFormat::xml: return "xml";
    case FileFormat::csv: return "csv";
    default: return "txt";
  }
}

FileFormat parse_format(const std::string& name) {
  if (name == "xml") return FileFormat::xml;
  if (name == "csv") return FileFormat::csv;
  if (name == "txt") return FileFormat::txt;
  throw usage_error("unknown format '" + name + "' (expected xml, csv or txt)");
}

double parse_real(const std::string& token, const std::string& where) {
  const char* b = token.data();
  const char* e = b + token.size();
  double value = 0;
  auto res = std::from_chars(b, e, value, std::chars_format::general);
  if (res.ec != std::errc() || res.ptr != e)
    throw data_error("parse error at " + where + ": '" + token + "' is not a number");
  if (!std::isfinite(value))
    throw data_error("parse error at " + where + ": '" + token + "' is not finite");
  return value;
}

NumericSequence read_numeric_sequence(const std::string& path, FileFormat f) {
  auto tokens = read_sequence_tokens(path, f);
  std::vector<double> values;
  values.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    values.push_back(parse_real(tokens[i], "element " + std::to_string(i + 1)));
  return NumericSequence(std::move(values));
}

StringSequence read_string_sequence(const std::string& path, FileFormat f) {
  return StringSequence(read_sequence_tokens(path, f));
}

DataTable read_table(const std::string& path, FileFormat f) {
  std::string content = read_file(path);
  if (f == FileFormat::xml) {
    XmlScanner sc(content);
    sc.skip_prolog();
    std::string attrs = sc.open_tag("tabular");
    long rows = parse_count_attr(attrs, "rows", sc);
    long cols = parse_count_attr(attrs, "columns", sc);
    if (rows < 1 || cols < 1) sc.fail("rows and columns must be at least 1");
    std::vector<double> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols);
    long r = 0;
    while (!sc.try_close_tag("tabular")) {
      sc.open_tag("row");
      ++r;
      long c = 0;
      while (!sc.try_close_tag("row")) {
        sc.open_tag("element");
        std::string tok = trim(sc.element_text("element"));
        ++c;
        cells.push_back(parse_real(tok, "row " + std::to_string(r) + ", element " +
                                            std::to_string(c)));
      }
      if (c != cols)
        throw data_error("dimension error: row " + std::to_string(r) + " has " +
                         std::to_string(c) + " elements, header declares " +
                         std::to_string(cols));
    }
    sc.expect_end();
    if (r != rows)
      throw data_error("dimension error: body has " + std::to_string(r) +
                       " rows, header declares " + std::to_string(rows));
    return DataTable(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                     std::move(cells));
  }

  auto lines = split_lines(content);
  if (lines.empty()) throw data_error("empty payload in " + path);
  std::size_t cols = lines[0].size();
  std::vector<double> cells;
  cells.reserve(lines.size() * cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols)
      throw data_error("dimension error: line " + std::to_string(r + 1) + " has " +
                       std::to_string(lines[r].size()) + " values, expected " +
                       std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      cells.push_back(parse_real(lines[r][c], "line " + std::to_string(r + 1) +
                                                  ", token " + std::to_string(c + 1)));
  }
  return DataTable(lines.size(), cols, std::move(cells));
}

void write_sequence(const NumericSequence& s, const std::string& path, FileFormat f) {
  std::ostringstream out;
  if (f == FileFormat::xml) {
    out << "<sequence>\n";
    for (double v : s.values()) out << "\t<element>" << format_double(v) << "</element>\n";
    out << "</sequence>\n";
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ';';
      out << format_double(s[i]);
    }
  }
  write_file(path, out.str());
}

void write_sequence(const StringSequence& s, const std::string& path, FileFormat f) {
  std::ostringstream out;
  if (f == FileFormat::xml) {
    out << "<sequence>\n";
    for (const auto& t : s.tokens())
      out << "\t<element>" << xml_escape(t) << "</element>\n";
    out << "</sequence>\n";
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ';';
      out << s[i];
    }
  }
  write_file(path, out.str());
}

void write_table(const DataTable& t, const std::string& path, FileFormat f) {
  std::ostringstream out;
  if (f == FileFormat::xml) {
    out << "<tabular rows=\"" << t.rows() << "\" columns=\"" << t.columns() << "\">\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      out << "\t<row>";
      for (std::size_t c = 0; c < t.columns(); ++c)
        out << "<element>" << format_double(t.at(r, c)) << "</element>";
      out << "</row>\n";
    }
    out << "</tabular>\n";
  } else {
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.columns(); ++c) {
        if (c) out << ';';
        out << format_double(t.at(r, c));
      }
      out << '\n';
    }
  }
  write_file(path, out.str());
}

}  // namespace npst
