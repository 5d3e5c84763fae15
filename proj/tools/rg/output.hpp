#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace rg {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  std::vector<std::string> trailer;  // CSV: '# ' lines after the rows
};

// %.17g, so every double survives a text round trip.
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

// Writes to path, or stdout when path is empty.
void emit(const Table& table, const std::string& format, const std::string& path);

}  // namespace rg
