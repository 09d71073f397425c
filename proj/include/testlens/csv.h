#ifndef TESTLENS_CSV_H_
#define TESTLENS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace testlens {

using CsvRow = std::vector<std::string>;

// RFC 4180 reader: comma separated, double-quoted fields may hold commas,
// quotes ("") and newlines. Accepts LF or CRLF line ends. Blank lines are
// skipped. Throws InvalidInput on an unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);
std::string csv_line(const CsvRow& row);

}  // namespace testlens

#endif  // TESTLENS_CSV_H_
