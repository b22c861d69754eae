#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifr/trifn.hpp"

namespace ifr {

struct DatasetRecord {
    std::string id;
    Trifn number;

    bool operator==(const DatasetRecord&) const = default;
};

// Parse failure; what() carries the location ("line 3: ..." for the line
// format, "record 2 ..." for the json format).  line() is 1-based and 0
// when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Reads a dataset in either supported form, chosen by the first non-space
// character: '[' selects a json array of {"id", "a", "w", "u"} objects ("a"
// holding 3 or 4 abscissae), anything else the line format
//
//   id; a1,a2,a3[,a4]; w; u
//
// with blank lines and '#' comment lines skipped.  Three abscissae describe
// a triangular number (a2 repeated).  Ids must be unique, non-empty, and
// free of ';', '#', and control characters.  Values must be finite.
std::vector<DatasetRecord> parse_dataset(std::istream& in);
std::vector<DatasetRecord> parse_dataset_text(const std::string& text);

// Inverse of the parsers, with shortest round-trip number rendering, so
// parse(serialize(records)) == records.  The line form always writes four
// abscissae.
std::string serialize_dataset(const std::vector<DatasetRecord>& records);
std::string serialize_dataset_json(const std::vector<DatasetRecord>& records);

}  // namespace ifr
