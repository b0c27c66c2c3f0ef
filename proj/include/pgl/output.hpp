#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pgl::output {

/// A table or summary value; monostate is emitted as JSON null / an empty CSV field.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Everything a command emits. `meta` carries the invocation parameters,
/// `summary` scalar results and `tables` row data. Key order is preserved.
struct Document {
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<std::pair<std::string, Cell>> summary;
    std::vector<Table> tables;
};

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

/// {"meta": {...}, "data": {"summary": {...}, "<table>": [ {...}, ... ]}}
std::string to_json(const Document& doc);

/// CSV text for one table: '#'-prefixed meta and summary lines, a header
/// row, then the records. Fields are quoted per RFC 4180 when needed.
std::string to_csv(const Document& doc, const Table& table);

}  // namespace pgl::output
