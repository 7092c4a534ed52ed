#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mml/error.hpp"
#include "mml/values.hpp"

namespace mml {

std::vector<std::vector<std::string>> read_csv_records(std::istream& in,
                                                       char delimiter) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_record = [&] {
    if (field_started || !record.empty()) {
      record.push_back(std::move(field));
      records.push_back(std::move(record));
    }
    record.clear();
    field.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      field_started = true;
    } else if (c == delimiter) {
      record.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw CsvError(records.empty() ? 0 : records.size(), "unterminated quote");
  }
  end_record();
  return records;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw SchemaError("column '" + name + "' not found in header");
}

struct ResolvedColumn {
  std::size_t index;
  std::optional<std::size_t> aom_index;
  std::optional<double> aom_const;
  bool infer = false;
};

}  // namespace

DataSet dataset_from_csv(std::istream& in, const Schema& schema, char delimiter) {
  if (schema.columns.empty()) throw SchemaError("schema declares no columns");

  std::size_t n_cts = 0;
  std::size_t n_disc = 0;
  std::vector<std::string> names;
  for (const auto& c : schema.columns) {
    (c.kind == ColumnKind::Continuous ? n_cts : n_disc) += 1;
    names.push_back(c.name);
  }
  if (n_cts > 0 && n_disc > 0) {
    throw SchemaError("mixed continuous and discrete columns are not supported");
  }
  if (n_disc > 1) {
    throw SchemaError("only one discrete column is supported");
  }
  for (const auto& c : schema.columns) {
    if (c.kind == ColumnKind::Continuous &&
        c.aom.kind == AomSource::Kind::Unspecified) {
      throw SchemaError("continuous column '" + c.name +
                        "' has no AoM column and no default AoM");
    }
    if (c.kind == ColumnKind::Continuous && c.aom.kind == AomSource::Kind::Constant &&
        (!std::isfinite(c.aom.value) || !(c.aom.value > 0.0))) {
      throw SchemaError("constant AoM for column '" + c.name +
                        "' must be finite and positive");
    }
    if (c.kind == ColumnKind::Discrete && c.space.lo > c.space.hi) {
      throw SchemaError("discrete column '" + c.name + "' has empty bounds");
    }
  }

  const DataKind kind = n_disc == 1 ? DataKind::Discrete
                        : n_cts == 1 ? DataKind::Continuous
                                     : DataKind::Vector;

  auto records = read_csv_records(in, delimiter);
  if (records.empty()) return DataSet::empty_of(kind, names);
  const auto& header = records.front();

  std::vector<ResolvedColumn> cols;
  for (const auto& c : schema.columns) {
    ResolvedColumn rc{find_column(header, c.name), std::nullopt, std::nullopt};
    if (c.kind == ColumnKind::Continuous) {
      switch (c.aom.kind) {
        case AomSource::Kind::Column:
          rc.aom_index = find_column(header, c.aom.column);
          break;
        case AomSource::Kind::Constant:
          rc.aom_const = c.aom.value;
          break;
        case AomSource::Kind::Infer:
          rc.infer = true;
          break;
        case AomSource::Kind::Unspecified:
          break;
      }
    }
    cols.push_back(rc);
  }

  const std::size_t rows = records.size() - 1;
  auto cell = [&](std::size_t row, std::size_t col) -> const std::string& {
    const auto& rec = records[row];
    if (col >= rec.size()) {
      throw CsvError(row, "expected at least " + std::to_string(col + 1) +
                              " fields, found " + std::to_string(rec.size()));
    }
    return rec[col];
  };

  if (kind == DataKind::Discrete) {
    const auto& spec = schema.columns.front();
    std::vector<DiscreteDatum> items;
    items.reserve(rows);
    for (std::size_t r = 1; r <= rows; ++r) {
      const auto& text = cell(r, cols[0].index);
      auto v = parse_integer(text);
      if (!v) {
        throw CsvError(r, "cannot parse '" + text + "' as an integer in column '" +
                              spec.name + "'");
      }
      if (!spec.space.contains(*v)) {
        throw DomainError("row " + std::to_string(r) + ": value " + text +
                          " is outside [" + std::to_string(spec.space.lo) + ", " +
                          std::to_string(spec.space.hi) + "]");
      }
      items.emplace_back(*v, spec.space);
    }
    return DataSet(std::move(items), names);
  }

  // Continuous: parse every value column and its AoM.
  std::vector<std::vector<double>> values(cols.size(), std::vector<double>(rows));
  std::vector<std::vector<double>> aoms(cols.size(), std::vector<double>(rows));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t r = 1; r <= rows; ++r) {
      const auto& text = cell(r, cols[j].index);
      auto v = parse_real(text);
      if (!v) {
        throw CsvError(r, "cannot parse '" + text + "' as a number in column '" +
                              schema.columns[j].name + "'");
      }
      values[j][r - 1] = *v;
      if (cols[j].aom_index) {
        const auto& atext = cell(r, *cols[j].aom_index);
        auto a = parse_real(atext);
        if (!a || !(*a > 0.0)) {
          throw CsvError(r, "invalid AoM '" + atext + "' for column '" +
                                schema.columns[j].name + "'");
        }
        aoms[j][r - 1] = *a;
      }
    }
    if (cols[j].aom_const) {
      std::fill(aoms[j].begin(), aoms[j].end(), *cols[j].aom_const);
    } else if (cols[j].infer) {
      std::fill(aoms[j].begin(), aoms[j].end(), infer_aom(values[j]));
    }
  }

  if (kind == DataKind::Continuous) {
    std::vector<CtsDatum> items;
    items.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) items.emplace_back(values[0][r], aoms[0][r]);
    return DataSet(std::move(items), names);
  }
  std::vector<VecDatum> items;
  items.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> comp(cols.size());
    std::vector<double> acc(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      comp[j] = values[j][r];
      acc[j] = aoms[j][r];
    }
    items.emplace_back(std::move(comp), std::move(acc));
  }
  return DataSet(std::move(items), names);
}

}  // namespace mml
