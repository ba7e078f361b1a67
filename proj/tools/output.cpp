#include "output.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "primelab/report.hpp"

namespace primelab::cli {

namespace {

int decimals_for(const Table& t, std::size_t column) {
  for (auto [c, d] : t.fixed)
    if (c == column) return d;
  return -1;
}

std::string text(const Cell& cell, int decimals) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return decimals >= 0 ? format_fixed(v, decimals) : format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, cell);
}

}  // namespace

std::string render(const Table& t, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << csv_field(t.columns[c]) << (c + 1 < t.columns.size() ? "," : "\n");
      for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
          out << csv_field(text(row[c], decimals_for(t, c))) << (c + 1 < row.size() ? "," : "\n");
      break;
    }
    case Format::json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = json_cell(row[c]);
        doc.push_back(std::move(obj));
      }
      if (t.scalar && doc.size() == 1) doc = doc[0];
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::table: {
      if (t.scalar && t.rows.size() == 1) {
        const auto& row = t.rows[0];
        out << text(row.back(), decimals_for(t, row.size() - 1)) << '\n';
        break;
      }
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
      for (const auto& row : t.rows) {
        cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          cells.back().push_back(text(row[c], decimals_for(t, c)));
          width[c] = std::max(width[c], cells.back().back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& v) {
        for (std::size_t c = 0; c < v.size(); ++c) {
          out << std::string(width[c] - v[c].size(), ' ') << v[c];
          out << (c + 1 < v.size() ? "  " : "\n");
        }
      };
      line(t.columns);
      for (const auto& r : cells) line(r);
      break;
    }
  }
  return out.str();
}

}  // namespace primelab::cli
