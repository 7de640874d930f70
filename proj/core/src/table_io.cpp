#include "glsg/table_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace glsg {

// Parsing cap: validation is cubic in the order, so keep file input at
// desk scale.
constexpr long long kMaxIoOrder = 1000;

CayleyTable read_table_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("table text: missing order");
  if (n < 1 || n > kMaxIoOrder) throw ParseError("table text: bad order " + std::to_string(n));
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      if (!(in >> grid[i][j])) {
        throw ParseError("table text: missing entry at row " + std::to_string(i + 1) +
                         " col " + std::to_string(j + 1));
      }
    }
  }
  return validate_table(grid);
}

void write_table_text(std::ostream& out, const CayleyTable& t) {
  const int n = t.order();
  out << n << '\n';
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      out << t.product(i, j);
    }
    out << '\n';
  }
}

CayleyTable read_table_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table")) {
    throw ParseError("table json: expected {\"n\": int, \"table\": [[int]]}");
  }
  if (!doc["n"].is_number_integer() || !doc["table"].is_array()) {
    throw ParseError("table json: expected {\"n\": int, \"table\": [[int]]}");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxIoOrder) throw ParseError("table json: bad order " + std::to_string(n));
  std::vector<std::vector<int>> grid;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) throw ParseError("table json: rows must be arrays");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw ParseError("table json: entries must be integers");
      r.push_back(cell.get<int>());
    }
    grid.push_back(std::move(r));
  }
  if (static_cast<long long>(grid.size()) != n) {
    throw ParseError("table json: n=" + std::to_string(n) + " but table has " +
                     std::to_string(grid.size()) + " rows");
  }
  return validate_table(grid);
}

void write_table_json(std::ostream& out, const CayleyTable& t) {
  nlohmann::json doc;
  doc["n"] = t.order();
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= t.order(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 1; j <= t.order(); ++j) row.push_back(t.product(i, j));
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  out << doc.dump() << '\n';
}

CayleyTable read_table_auto(std::istream& in) {
  char c = 0;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  if (!in) throw ParseError("table: empty input");
  in.putback(c);
  return c == '{' ? read_table_json(in) : read_table_text(in);
}

std::string table_to_text(const CayleyTable& t) {
  std::ostringstream out;
  write_table_text(out, t);
  return out.str();
}

}  // namespace glsg
