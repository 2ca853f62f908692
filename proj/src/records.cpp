#include "gfib/records.hpp"

#include <charconv>
#include <vector>

#include <json.hpp>

namespace gfib::records {

namespace {

constexpr int kColumns = 8;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV record");
  return fields;
}

std::vector<std::string> split_tsv(std::string_view line) {
  std::vector<std::string> fields(1);
  for (char c : line) {
    if (c == '\t') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_int(const std::string& s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw DomainError("bad integer field: '" + s + "'");
  return v;
}

std::string val_text(const std::optional<Valuation>& v) { return v ? v->to_string() : std::string(); }

std::optional<Valuation> parse_val(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "inf") return Valuation::infinite();
  return Valuation::finite(parse_int<std::uint64_t>(s));
}

nlohmann::json val_json(const std::optional<Valuation>& v) {
  if (!v) return nullptr;
  if (v->is_infinite()) return "inf";
  return v->value();
}

std::optional<Valuation> val_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw DomainError("bad valuation string");
    return Valuation::infinite();
  }
  return Valuation::finite(j.get<std::uint64_t>());
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

std::string header(Format f) {
  switch (f) {
    case Format::csv:
      return "k,j,n,value,v2,predicted,rule,agree";
    case Format::tsv:
      return "k\tj\tn\tvalue\tv2\tpredicted\trule\tagree";
    case Format::json:
      break;
  }
  return {};
}

std::string format_record(const OutputRecord& rec, Format f) {
  if (f == Format::json) {
    nlohmann::ordered_json o;
    o["k"] = rec.k;
    o["j"] = rec.j ? nlohmann::ordered_json(*rec.j) : nlohmann::ordered_json(nullptr);
    o["n"] = rec.n;
    if (rec.value) o["value"] = *rec.value;
    o["v2"] = val_json(rec.v2);
    o["predicted"] = val_json(rec.predicted);
    o["rule"] = rec.rule ? nlohmann::ordered_json(*rec.rule) : nlohmann::ordered_json(nullptr);
    o["agree"] = rec.agree ? nlohmann::ordered_json(*rec.agree) : nlohmann::ordered_json(nullptr);
    return o.dump();
  }
  const std::string cols[kColumns] = {
      std::to_string(rec.k),
      rec.j ? std::to_string(*rec.j) : std::string(),
      std::to_string(rec.n),
      rec.value.value_or(""),
      val_text(rec.v2),
      val_text(rec.predicted),
      rec.rule.value_or(""),
      rec.agree ? (*rec.agree ? "true" : "false") : "",
  };
  std::string line;
  for (int i = 0; i < kColumns; ++i) {
    if (i > 0) line += (f == Format::csv ? ',' : '\t');
    line += (f == Format::csv) ? csv_quote(cols[i]) : cols[i];
  }
  return line;
}

OutputRecord parse_record(std::string_view line, Format f) {
  OutputRecord rec;
  if (f == Format::json) {
    nlohmann::json o;
    try {
      o = nlohmann::json::parse(line);
      rec.k = o.at("k").get<int>();
      if (!o.at("j").is_null()) rec.j = o.at("j").get<int>();
      rec.n = o.at("n").get<std::int64_t>();
      if (o.contains("value")) rec.value = o.at("value").get<std::string>();
      rec.v2 = val_from_json(o.at("v2"));
      rec.predicted = val_from_json(o.at("predicted"));
      if (!o.at("rule").is_null()) rec.rule = o.at("rule").get<std::string>();
      if (!o.at("agree").is_null()) rec.agree = o.at("agree").get<bool>();
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed JSON record: ") + e.what());
    }
    return rec;
  }
  const auto fields = (f == Format::csv) ? split_csv(line) : split_tsv(line);
  if (fields.size() != kColumns) throw DomainError("expected 8 fields, got " + std::to_string(fields.size()));
  rec.k = parse_int<int>(fields[0]);
  if (!fields[1].empty()) rec.j = parse_int<int>(fields[1]);
  rec.n = parse_int<std::int64_t>(fields[2]);
  if (!fields[3].empty()) rec.value = fields[3];
  rec.v2 = parse_val(fields[4]);
  rec.predicted = parse_val(fields[5]);
  if (!fields[6].empty()) rec.rule = fields[6];
  if (fields[7] == "true") {
    rec.agree = true;
  } else if (fields[7] == "false") {
    rec.agree = false;
  } else if (!fields[7].empty()) {
    throw DomainError("bad agree field: '" + fields[7] + "'");
  }
  return rec;
}

}  // namespace gfib::records
