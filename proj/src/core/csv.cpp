#include "lfm/core/csv.hpp"

#include <filesystem>
#include <fstream>

#include "lfm/core/error.hpp"

namespace lfm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::file_not_found: return "file-not-found";
    case Errc::parse_error: return "parse-error";
    case Errc::duplicate_id: return "duplicate-id";
    case Errc::missing_id_column: return "missing-id-column";
    case Errc::dangling_id: return "dangling-id";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::validation_failed: return "validation-failed";
    case Errc::unknown_lf: return "unknown-lf";
    case Errc::unknown_pair: return "unknown-pair";
    case Errc::no_usable_lfs: return "no-usable-lfs";
    case Errc::model_not_fit: return "model-not-fit";
    case Errc::no_predicted_matches: return "no-predicted-matches";
    case Errc::missing_ids: return "missing-ids";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

namespace csv {

std::vector<Record> read(std::istream& in) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool after_quote = false;  // just closed a quoted field
  bool row_has_content = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    after_quote = false;
  };
  auto end_record = [&] {
    if (row_has_content || !current.fields.empty()) {
      end_field();
      records.push_back(std::move(current));
    }
    current = Record{};
    row_has_content = false;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case ',':
        row_has_content = true;
        end_field();
        break;
      case '\r':
        if (in.peek() == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        current.line = line;
        break;
      case '"':
        if (!field.empty() || after_quote) {
          throw Error(Errc::parse_error,
                      "line " + std::to_string(line) + ": unexpected quote inside unquoted field");
        }
        in_quotes = true;
        row_has_content = true;
        break;
      default:
        if (after_quote) {
          throw Error(Errc::parse_error,
                      "line " + std::to_string(line) + ": characters after closing quote");
        }
        field.push_back(c);
        row_has_content = true;
    }
  }
  if (in_quotes) {
    throw Error(Errc::parse_error,
                "line " + std::to_string(current.line) + ": unterminated quoted field");
  }
  end_record();
  return records;
}

std::vector<Record> read_file(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(Errc::file_not_found, "file not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read(in);
}

std::string quote_if_needed(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << quote_if_needed(fields[i]);
  }
  out << '\n';
}

}  // namespace csv
}  // namespace lfm
