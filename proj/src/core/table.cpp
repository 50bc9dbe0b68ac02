#include "lfm/core/table.hpp"

#include <algorithm>
#include <fstream>

#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"

namespace lfm {

Table::Table(std::vector<Tuple> rows) : rows_(std::move(rows)) {
  index_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!index_.emplace(rows_[i].id, i).second) {
      throw Error(Errc::duplicate_id, "duplicate id '" + rows_[i].id + "'");
    }
  }
}

std::optional<std::size_t> Table::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Tuple& Table::at(const std::string& id) const {
  auto row = find(id);
  if (!row) throw Error(Errc::dangling_id, "unknown tuple id '" + id + "'");
  return rows_[*row];
}

std::optional<std::size_t> TablePair::attribute_index(const std::string& name) const {
  auto it = std::find(schema.begin(), schema.end(), name);
  if (it == schema.end()) return std::nullopt;
  return static_cast<std::size_t>(it - schema.begin());
}

namespace {

struct RawTable {
  std::string label;
  std::vector<std::string> columns;  // without id
  std::size_t id_pos = 0;
  std::vector<csv::Record> records;  // data rows only
};

RawTable parse_raw(std::istream& in, const std::string& id_column, const std::string& label) {
  RawTable raw;
  raw.label = label;
  auto records = csv::read(in);
  if (records.empty()) throw Error(Errc::parse_error, label + ": missing header row");
  const auto& header = records.front().fields;
  auto id_it = std::find(header.begin(), header.end(), id_column);
  if (id_it == header.end()) {
    throw Error(Errc::missing_id_column, label + ": id column '" + id_column + "' not in header");
  }
  raw.id_pos = static_cast<std::size_t>(id_it - header.begin());
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == raw.id_pos) continue;
    if (std::find(raw.columns.begin(), raw.columns.end(), header[i]) != raw.columns.end()) {
      throw Error(Errc::parse_error, label + ": duplicate column '" + header[i] + "'");
    }
    raw.columns.push_back(header[i]);
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].fields.size() != header.size()) {
      throw Error(Errc::parse_error,
                  label + ": line " + std::to_string(records[r].line) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(records[r].fields.size()));
    }
    raw.records.push_back(std::move(records[r]));
  }
  if (raw.records.empty()) throw Error(Errc::parse_error, label + ": table has no rows");
  return raw;
}

Table align(const RawTable& raw, const std::vector<std::string>& schema) {
  std::vector<std::ptrdiff_t> source(schema.size(), -1);
  for (std::size_t s = 0; s < schema.size(); ++s) {
    for (std::size_t c = 0, col = 0; c < raw.columns.size() + 1; ++c) {
      if (c == raw.id_pos) continue;
      if (raw.columns[col] == schema[s]) source[s] = static_cast<std::ptrdiff_t>(c);
      ++col;
    }
  }
  std::vector<Tuple> rows;
  rows.reserve(raw.records.size());
  for (const auto& rec : raw.records) {
    Tuple t;
    t.id = rec.fields[raw.id_pos];
    t.values.reserve(schema.size());
    for (auto src : source) {
      t.values.push_back(src < 0 ? std::string{} : rec.fields[static_cast<std::size_t>(src)]);
    }
    rows.push_back(std::move(t));
  }
  try {
    return Table(std::move(rows));
  } catch (const Error& e) {
    throw Error(e.code(), raw.label + ": " + e.what());
  }
}

}  // namespace

TablePair ingest_table_pair(std::istream& left, std::istream& right,
                            const std::string& id_column) {
  RawTable l = parse_raw(left, id_column, "left");
  RawTable r = parse_raw(right, id_column, "right");
  TablePair out;
  out.id_column = id_column;
  out.schema = l.columns;
  for (const auto& c : r.columns) {
    if (std::find(out.schema.begin(), out.schema.end(), c) == out.schema.end()) {
      out.schema.push_back(c);
    }
  }
  out.left = align(l, out.schema);
  out.right = align(r, out.schema);
  return out;
}

TablePair ingest_table_pair(const std::string& left_path, const std::string& right_path,
                            const std::string& id_column) {
  auto open = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::file_not_found, "file not found: " + path);
    return in;
  };
  auto l = open(left_path);
  auto r = open(right_path);
  try {
    return ingest_table_pair(l, r, id_column);
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("left", 0) == 0) msg = left_path + msg.substr(4);
    else if (msg.rfind("right", 0) == 0) msg = right_path + msg.substr(5);
    throw Error(e.code(), msg);
  }
}

void write_table(std::ostream& out, const TablePair& tables, Side side) {
  std::vector<std::string> header{tables.id_column};
  header.insert(header.end(), tables.schema.begin(), tables.schema.end());
  csv::write_row(out, header);
  for (const auto& t : tables.side(side).rows()) {
    std::vector<std::string> row{t.id};
    row.insert(row.end(), t.values.begin(), t.values.end());
    csv::write_row(out, row);
  }
}

std::string concat_attributes(const Tuple& tuple, const std::vector<std::size_t>& attr_indices) {
  std::string out;
  for (std::size_t i = 0; i < attr_indices.size(); ++i) {
    if (i) out.push_back(' ');
    out += tuple.values[attr_indices[i]];
  }
  return out;
}

}  // namespace lfm
