#include "pgl/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace pgl::output {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_to_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return format_double(v);
                }
                return v;
            } else {
                return v;
            }
        },
        cell);
}

std::string cell_to_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {};
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_json(const Document& doc) {
    ordered_json root;
    ordered_json meta = ordered_json::object();
    for (const auto& [key, cell] : doc.meta) {
        meta[key] = cell_to_json(cell);
    }
    ordered_json data = ordered_json::object();
    ordered_json summary = ordered_json::object();
    for (const auto& [key, cell] : doc.summary) {
        summary[key] = cell_to_json(cell);
    }
    data["summary"] = summary;
    for (const auto& table : doc.tables) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
                obj[table.columns[i]] = cell_to_json(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        data[table.name] = std::move(rows);
    }
    root["meta"] = std::move(meta);
    root["data"] = std::move(data);
    return root.dump(2) + "\n";
}

std::string to_csv(const Document& doc, const Table& table) {
    std::ostringstream os;
    for (const auto& [key, cell] : doc.meta) {
        os << "# meta." << key << "=" << cell_to_text(cell) << "\n";
    }
    for (const auto& [key, cell] : doc.summary) {
        os << "# summary." << key << "=" << cell_to_text(cell) << "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_field(table.columns[i]);
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_field(cell_to_text(row[i]));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pgl::output
