#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lfm::csv {

// A parsed record together with the physical line it started on (1-based).
struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// Comma-separated, double-quote escaped ("" inside quotes), CRLF tolerant.
// Quoted fields may span lines. Throws Error{parse_error} on an unterminated
// quote or stray characters after a closing quote.
std::vector<Record> read(std::istream& in);
std::vector<Record> read_file(const std::string& path);

void write_row(std::ostream& out, const std::vector<std::string>& fields);
std::string quote_if_needed(const std::string& field);

}  // namespace lfm::csv
