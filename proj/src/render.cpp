#include "qhahn/render.hpp"

#include <algorithm>

#include <json.hpp>

namespace qhahn {

std::string render_text(const TableDoc& doc) {
    std::string out;
    for (const auto& [k, v] : doc.header) out += k + " = " + v + "\n";
    if (doc.columns.empty()) return out;
    if (!doc.header.empty()) out += "\n";
    std::vector<size_t> width(doc.columns.size());
    for (size_t c = 0; c < doc.columns.size(); ++c) width[c] = doc.columns[c].size();
    for (const auto& row : doc.rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto emit = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < cells.size(); ++c) {
            out += cells[c];
            if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out += "\n";
    };
    emit(doc.columns);
    for (const auto& row : doc.rows) emit(row);
    return out;
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + "\"";
}

std::string render_csv(const TableDoc& doc) {
    std::string out;
    for (const auto& [k, v] : doc.header) out += "# " + k + "," + csv_escape(v) + "\n";
    std::string line;
    for (size_t c = 0; c < doc.columns.size(); ++c)
        line += (c ? "," : "") + csv_escape(doc.columns[c]);
    out += line + "\n";
    for (const auto& row : doc.rows) {
        line.clear();
        for (size_t c = 0; c < row.size(); ++c) line += (c ? "," : "") + csv_escape(row[c]);
        out += line + "\n";
    }
    return out;
}

std::string render_json(const TableDoc& doc) {
    nlohmann::json j;
    nlohmann::json hdr = nlohmann::json::object();
    for (const auto& [k, v] : doc.header) hdr[k] = v;
    j["header"] = hdr;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : doc.rows) {
        nlohmann::json r = nlohmann::json::object();
        for (size_t c = 0; c < row.size() && c < doc.columns.size(); ++c)
            r[doc.columns[c]] = row[c];
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace qhahn
