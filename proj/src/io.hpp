#ifndef NPST_IO_HPP_
#define NPST_IO_HPP_

#include <string>

#include "sequence.hpp"
#include "table.hpp"

namespace npst {

enum class FileFormat { xml, csv, txt };

// Maps ".xml"/".csv"/".txt" (case-insensitive); anything else is a usage error.
FileFormat format_from_extension(const std::string& path);
const char* format_name(FileFormat f);
FileFormat parse_format(const std::string& name);

// Sequence grammars:
//   XML      <sequence><element>V</element>...</sequence>, order significant,
//            whitespace between elements ignored.
//   CSV/TXT  values separated by ';'; newlines count as separators; one
//            trailing ';' per line tolerated; whitespace around tokens trimmed.
NumericSequence read_numeric_sequence(const std::string& path, FileFormat f);
StringSequence read_string_sequence(const std::string& path, FileFormat f);

// Table grammars:
//   XML      <tabular rows="R" columns="C"><row><element>V</element>...</row>...</tabular>;
//            header counts must match the body.
//   CSV/TXT  one row per line, ';'-separated, trailing ';' tolerated,
//            ragged rows rejected.
DataTable read_table(const std::string& path, FileFormat f);

void write_sequence(const NumericSequence& s, const std::string& path, FileFormat f);
void write_sequence(const StringSequence& s, const std::string& path, FileFormat f);
void write_table(const DataTable& t, const std::string& path, FileFormat f);

// Strict locale-independent real parser ('.' decimal point, optional
// exponent); used by every reader. Throws data_error with `where` context.
double parse_real(const std::string& token, const std::string& where);

}  // namespace npst

#endif  // NPST_IO_HPP_
