#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gfib/padic.hpp"

namespace gfib {

/// One output row. Big values travel as decimal strings; infinite valuations
/// are rendered as "inf" in every format.
struct OutputRecord {
  int k = 0;
  std::optional<int> j;
  std::int64_t n = 0;
  std::optional<std::string> value;
  std::optional<Valuation> v2;
  std::optional<Valuation> predicted;
  std::optional<std::string> rule;
  std::optional<bool> agree;

  bool operator==(const OutputRecord&) const = default;
};

enum class Format { csv, json, tsv };

namespace records {

/// Throws DomainError for an unknown name.
Format parse_format(std::string_view name);

/// Column header line for csv/tsv (k,j,n,value,v2,predicted,rule,agree);
/// empty for JSON Lines.
std::string header(Format f);

/// One line, without the trailing newline.
std::string format_record(const OutputRecord& rec, Format f);

/// Inverse of format_record. Throws DomainError on malformed input.
OutputRecord parse_record(std::string_view line, Format f);

}  // namespace records
}  // namespace gfib
