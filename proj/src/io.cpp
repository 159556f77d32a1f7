#include "qcycle/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "qcycle/error.hpp"

namespace qcs {

namespace {

using nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < input.size()) {
    char c = input[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < input.size() && input[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < input.size() && !std::isspace(static_cast<unsigned char>(input[j])) &&
             input[j] != '#') {
        ++j;
      }
      out.push_back({std::string(input.substr(i, j - i)), line});
      i = j;
    }
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool is_qcs_key(std::string_view k) { return k == "dot" || k == "colon"; }
bool is_solution_key(std::string_view k) { return k == "lambda" || k == "rho"; }

const std::size_t kMaxOrder = 4096;

void check_order(std::size_t n, const std::string& where) {
  if (n == 0 || n > kMaxOrder) {
    throw ParseError(where + "n must be between 1 and " + std::to_string(kMaxOrder));
  }
}

/// Tracks the key set of one document and assembles the result.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(std::size_t n) : n_(n) {}

  void add(const std::string& key, Rows rows, const std::string& where) {
    const bool qcs_key = is_qcs_key(key);
    if (!qcs_key && !is_solution_key(key)) throw ParseError(where + "unknown key '" + key + "'");
    const auto kind = qcs_key ? DocumentKind::q_cycle_set : DocumentKind::solution;
    if (kind_ && *kind_ != kind) {
      throw ParseError(where + "document mixes q-cycle-set keys (dot, colon) with solution keys "
                               "(lambda, rho)");
    }
    kind_ = kind;
    if (tables_.count(key)) throw ParseError(where + "duplicate key '" + key + "'");
    tables_[key] = std::move(rows);
  }

  TableDocument finish(const std::string& where) {
    if (!kind_) throw ParseError(where + "document has no tables");
    TableDocument doc;
    doc.kind = *kind_;
    doc.n = n_;
    const bool q = doc.kind == DocumentKind::q_cycle_set;
    const char* a = q ? "dot" : "lambda";
    const char* b = q ? "colon" : "rho";
    for (const char* key : {a, b}) {
      if (!tables_.count(key)) throw ParseError(where + "missing key '" + key + "'");
    }
    doc.first = std::move(tables_[a]);
    doc.second = std::move(tables_[b]);
    return doc;
  }

 private:
  std::size_t n_;
  std::optional<DocumentKind> kind_;
  std::map<std::string, Rows> tables_;
};

std::vector<TableDocument> parse_text(std::string_view input) {
  const auto tokens = tokenize(input);
  std::vector<TableDocument> docs;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const auto& head = tokens[i];
    if (head.text != "n") fail_at(head.line, "expected 'n', found '" + head.text + "'");
    if (i + 1 >= tokens.size()) fail_at(head.line, "missing value after 'n'");
    auto n = to_number(tokens[i + 1].text);
    if (!n) fail_at(tokens[i + 1].line, "'" + tokens[i + 1].text + "' is not a size");
    check_order(*n, "line " + std::to_string(head.line) + ": ");
    i += 2;
    DocumentBuilder builder(*n);
    while (i < tokens.size() && tokens[i].text != "n") {
      const auto& key = tokens[i];
      if (to_number(key.text)) fail_at(key.line, "unexpected number '" + key.text + "'");
      ++i;
      Rows rows(*n, std::vector<Point>(*n));
      for (std::size_t k = 0; k < *n * *n; ++k, ++i) {
        if (i >= tokens.size() || !to_number(tokens[i].text)) {
          const std::size_t line = i < tokens.size() ? tokens[i].line : tokens.back().line;
          fail_at(line, "table '" + key.text + "' has " + std::to_string(k) + " entries, expected " +
                            std::to_string(*n * *n));
        }
        const auto v = *to_number(tokens[i].text);
        if (v < 1 || v > *n) {
          fail_at(tokens[i].line, "entry " + tokens[i].text + " is outside 1.." + std::to_string(*n));
        }
        rows[k / *n][k % *n] = static_cast<Point>(v - 1);
      }
      builder.add(key.text, std::move(rows), "line " + std::to_string(key.line) + ": ");
    }
    docs.push_back(builder.finish("line " + std::to_string(head.line) + ": "));
  }
  if (docs.empty()) throw ParseError("input contains no document");
  return docs;
}

Rows json_rows(const ordered_json& value, std::size_t n, const std::string& where) {
  if (!value.is_array() || value.size() != n) {
    throw ParseError(where + "expected " + std::to_string(n) + " rows");
  }
  Rows rows;
  for (const auto& row : value) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(where + "every row must have " + std::to_string(n) + " entries");
    }
    std::vector<Point> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 1 ||
          v.get<long long>() > static_cast<long long>(n)) {
        throw ParseError(where + "entry " + v.dump() + " is outside 1.." + std::to_string(n));
      }
      r.push_back(static_cast<Point>(v.get<long long>() - 1));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

TableDocument json_document(const ordered_json& obj, std::size_t index) {
  const std::string where = "document " + std::to_string(index + 1) + ": ";
  if (!obj.is_object()) throw ParseError(where + "expected an object");
  if (!obj.contains("n") || !obj["n"].is_number_unsigned()) {
    throw ParseError(where + "missing or invalid 'n'");
  }
  const auto n = obj["n"].get<std::size_t>();
  check_order(n, where);
  DocumentBuilder builder(n);
  for (const auto& [key, value] : obj.items()) {
    if (key == "n") continue;
    builder.add(key, json_rows(value, n, where + "'" + key + "': "), where);
  }
  return builder.finish(where);
}

std::vector<TableDocument> parse_json(std::string_view input) {
  ordered_json root;
  try {
    root = ordered_json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<TableDocument> docs;
  if (root.is_array()) {
    for (std::size_t i = 0; i < root.size(); ++i) docs.push_back(json_document(root[i], i));
  } else {
    docs.push_back(json_document(root, 0));
  }
  if (docs.empty()) throw ParseError("input contains no document");
  return docs;
}

ordered_json rows_json(std::size_t n, auto&& entry) {
  ordered_json rows = ordered_json::array();
  for (Point x = 0; x < n; ++x) {
    ordered_json row = ordered_json::array();
    for (Point y = 0; y < n; ++y) row.push_back(entry(x, y) + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table(std::ostringstream& os, const char* name, std::size_t n, auto&& entry) {
  os << name << '\n';
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) os << (y ? " " : "") << entry(x, y) + 1;
    os << '\n';
  }
}

}  // namespace

std::vector<TableDocument> parse_documents(std::string_view input) {
  const auto start = input.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && (input[start] == '{' || input[start] == '[')) {
    return parse_json(input);
  }
  return parse_text(input);
}

TableDocument parse_document(std::string_view input) {
  auto docs = parse_documents(input);
  if (docs.size() != 1) {
    throw ParseError("expected one document, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

QCycleSet to_qcycle_set(const TableDocument& doc) {
  if (doc.kind != DocumentKind::q_cycle_set) {
    throw PreconditionError("expected a q-cycle set document, found a solution");
  }
  return QCycleSet::from_rows(doc.first, doc.second);
}

Solution to_solution_value(const TableDocument& doc) {
  if (doc.kind != DocumentKind::solution) {
    throw PreconditionError("expected a solution document, found a q-cycle set");
  }
  return Solution::from_rows(doc.first, doc.second);
}

QCycleSet parse_qcycle_set(std::string_view input) { return to_qcycle_set(parse_document(input)); }
Solution parse_solution(std::string_view input) { return to_solution_value(parse_document(input)); }

ordered_json to_json(const QCycleSet& X) {
  ordered_json out;
  out["n"] = X.size();
  out["dot"] = rows_json(X.size(), [&](Point x, Point y) { return X.dot(x, y); });
  out["colon"] = rows_json(X.size(), [&](Point x, Point y) { return X.colon(x, y); });
  return out;
}

ordered_json to_json(const Solution& s) {
  ordered_json out;
  out["n"] = s.size();
  out["lambda"] = rows_json(s.size(), [&](Point x, Point y) { return s.lambda(x)(y); });
  out["rho"] = rows_json(s.size(), [&](Point x, Point y) { return s.rho(x)(y); });
  return out;
}

std::string serialize(const QCycleSet& X, Format format) {
  if (format == Format::json) return to_json(X).dump() + "\n";
  std::ostringstream os;
  os << "n " << X.size() << '\n';
  write_table(os, "dot", X.size(), [&](Point x, Point y) { return X.dot(x, y); });
  write_table(os, "colon", X.size(), [&](Point x, Point y) { return X.colon(x, y); });
  return os.str();
}

std::string serialize(const Solution& s, Format format) {
  if (format == Format::json) return to_json(s).dump() + "\n";
  std::ostringstream os;
  os << "n " << s.size() << '\n';
  write_table(os, "lambda", s.size(), [&](Point x, Point y) { return s.lambda(x)(y); });
  write_table(os, "rho", s.size(), [&](Point x, Point y) { return s.rho(x)(y); });
  return os.str();
}

std::string serialize(const std::vector<QCycleSet>& sets, Format format) {
  if (format == Format::json) {
    ordered_json all = ordered_json::array();
    for (const auto& X : sets) all.push_back(to_json(X));
    return all.dump() + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += '\n';
    out += serialize(sets[i]);
  }
  return out;
}

DynamicalPair parse_pair(std::string_view input) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= input.size()) {
      auto end = input.find('\n', pos);
      if (end == std::string_view::npos) end = input.size();
      ++line_no;
      auto line = input.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      std::vector<std::string> fields;
      for (const auto& t : tokenize(line)) fields.push_back(t.text);
      if (!fields.empty()) lines.emplace_back(line_no, std::move(fields));
      pos = end + 1;
    }
  }
  if (lines.empty()) throw ParseError("empty dynamical pair document");
  const auto& [header_line, header] = lines.front();
  if (header.size() != 2 || !to_number(header[0]) || !to_number(header[1])) {
    fail_at(header_line, "expected header 'n m'");
  }
  const std::size_t n = *to_number(header[0]);
  const std::size_t m = *to_number(header[1]);
  check_order(n, "line " + std::to_string(header_line) + ": ");
  check_order(m, "line " + std::to_string(header_line) + ": ");
  const std::size_t per_table = n * n * m;
  if (lines.size() != 1 + 2 * per_table) {
    throw ParseError("expected " + std::to_string(2 * per_table) + " table lines after the header, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Point> tables[2] = {std::vector<Point>(per_table * m), std::vector<Point>(per_table * m)};
  for (int which = 0; which < 2; ++which) {
    std::vector<bool> seen(per_table, false);
    for (std::size_t k = 0; k < per_table; ++k) {
      const auto& [line_no, f] = lines[1 + which * per_table + k];
      if (f.size() != 4 + m || f[3] != ":") {
        fail_at(line_no, "expected 'x y s : ' followed by " + std::to_string(m) + " images");
      }
      std::size_t idx[3];
      for (int c = 0; c < 3; ++c) {
        const std::size_t bound = c < 2 ? n : m;
        auto v = to_number(f[c]);
        if (!v || *v < 1 || *v > bound) {
          fail_at(line_no, "'" + f[c] + "' is outside 1.." + std::to_string(bound));
        }
        idx[c] = *v - 1;
      }
      const std::size_t slot = (idx[0] * n + idx[1]) * m + idx[2];
      if (seen[slot]) fail_at(line_no, "repeated entry for this (x, y, s)");
      seen[slot] = true;
      for (std::size_t t = 0; t < m; ++t) {
        auto v = to_number(f[4 + t]);
        if (!v || *v < 1 || *v > m) {
          fail_at(line_no, "image '" + f[4 + t] + "' is outside 1.." + std::to_string(m));
        }
        tables[which][slot * m + t] = static_cast<Point>(*v - 1);
      }
    }
  }
  return DynamicalPair(n, m, std::move(tables[0]), std::move(tables[1]));
}

std::string serialize(const DynamicalPair& P) {
  std::ostringstream os;
  const std::size_t n = P.base_size(), m = P.fiber_size();
  os << n << ' ' << m << '\n';
  for (int which = 0; which < 2; ++which) {
    os << (which ? "# alpha'\n" : "# alpha\n");
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point s = 0; s < m; ++s) {
          os << x + 1 << ' ' << y + 1 << ' ' << s + 1 << " :";
          auto slice = which ? P.alpha_prime_slice(x, y, s) : P.alpha_slice(x, y, s);
          for (Point v : slice) os << ' ' << v + 1;
          os << '\n';
        }
      }
    }
  }
  return os.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace qcs
