#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace lfm {

// A record. Values are stored in the owning TablePair's schema order; a
// missing attribute is the empty string.
struct Tuple {
  std::string id;
  std::vector<std::string> values;

  bool operator==(const Tuple&) const = default;
};

class Table {
 public:
  Table() = default;
  explicit Table(std::vector<Tuple> rows);

  const std::vector<Tuple>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::optional<std::size_t> find(const std::string& id) const;
  const Tuple& at(const std::string& id) const;  // throws Error{dangling_id}
  const Tuple& operator[](std::size_t row) const { return rows_[row]; }

  bool operator==(const Table& other) const { return rows_ == other.rows_; }

 private:
  std::vector<Tuple> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Side { left, right };

struct TablePair {
  std::string id_column;
  std::vector<std::string> schema;  // aligned attribute names, id column excluded
  Table left;                       // reference side
  Table right;

  const Table& side(Side s) const { return s == Side::left ? left : right; }
  std::optional<std::size_t> attribute_index(const std::string& name) const;

  bool operator==(const TablePair&) const = default;
};

// Reads both delimited files, aligns their schemas by column-name union
// (left columns first, then right-only columns) and fills absent columns
// with empty text.
TablePair ingest_table_pair(const std::string& left_path, const std::string& right_path,
                            const std::string& id_column);
TablePair ingest_table_pair(std::istream& left, std::istream& right,
                            const std::string& id_column);

// Header is id column followed by the full schema.
void write_table(std::ostream& out, const TablePair& tables, Side side);

// Attribute values of a tuple for `attrs`, joined with single spaces.
std::string concat_attributes(const Tuple& tuple, const std::vector<std::size_t>& attr_indices);

}  // namespace lfm
