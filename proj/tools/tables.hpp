#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace hodgeorbit::cli {

using Json = nlohmann::ordered_json;

// One row: a key naming the case (type, parabolic, B) and its values.
struct TableRecord {
    std::string table_id;
    std::string key;
    std::vector<Json> values;
};

struct Table {
    std::string id;
    std::vector<std::string> columns;  // names of the values, key excluded
    std::vector<TableRecord> rows;
};

const std::vector<std::string>& table_ids();
// Throws std::invalid_argument for an unknown id.
Table build_table(const std::string& id);

std::string to_tsv(const Table& t);
Json to_json(const Table& t);

}  // namespace hodgeorbit::cli
