#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qhahn {

// Field-agnostic printable document: exact strings only, with optional
// parallel decimal columns. The CLI renders one of these as text, CSV or
// JSON, so the exact fields are byte-identical across formats.
struct TableDoc {
    std::vector<std::pair<std::string, std::string>> header;  // key, exact value
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_text(const TableDoc& doc);
std::string render_csv(const TableDoc& doc);
std::string render_json(const TableDoc& doc);

}  // namespace qhahn
