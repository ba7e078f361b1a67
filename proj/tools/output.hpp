#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace primelab::cli {

enum class Format { table, csv, json };

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

// A fixed decimal rendering of a double, used where a column has a defined
// precision (zero ordinates). JSON keeps it as a number.
struct Fixed {
  double value;
  int decimals;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Columns rendered with fixed precision: (column index, decimals).
  std::vector<std::pair<std::size_t, int>> fixed;
  // Single value commands print the bare value in table format.
  bool scalar = false;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render(const Table& table, Format format);

}  // namespace primelab::cli
