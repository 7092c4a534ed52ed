#ifndef MML_VALUES_HPP
#define MML_VALUES_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mml {

/// A continuous measurement: nominal value `x` and accuracy of measurement
/// `aom`, denoting the interval x +/- aom/2.
class CtsDatum {
 public:
  /// Throws InvalidDatum unless x is finite and aom is finite and positive.
  CtsDatum(double x, double aom);

  double x() const { return x_; }
  double aom() const { return aom_; }

  friend bool operator==(const CtsDatum&, const CtsDatum&) = default;

 private:
  double x_;
  double aom_;
};

CtsDatum make_cts_datum(double x, double aom);

/// A D-dimensional continuous measurement with one AoM per component.
class VecDatum {
 public:
  VecDatum(std::vector<double> components, std::vector<double> aoms);

  std::size_t dimension() const { return components_.size(); }
  std::span<const double> components() const { return components_; }
  std::span<const double> aoms() const { return aoms_; }
  double operator[](std::size_t i) const { return components_[i]; }

  /// Product of the per-component AoMs (area for D=2, volume for D=3, ...).
  double aom_volume() const;

  friend bool operator==(const VecDatum&, const VecDatum&) = default;

 private:
  std::vector<double> components_;
  std::vector<double> aoms_;
};

/// Integers lo..hi inclusive.
struct DiscreteSpace {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// Throws BoundsError when lo > hi.
  static DiscreteSpace bounded(std::int64_t lo, std::int64_t hi);

  std::int64_t size() const { return hi - lo + 1; }
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }

  friend bool operator==(const DiscreteSpace&, const DiscreteSpace&) = default;
};

class DiscreteDatum {
 public:
  /// Throws DomainError when value is outside `space`.
  DiscreteDatum(std::int64_t value, DiscreteSpace space);

  std::int64_t value() const { return value_; }
  const DiscreteSpace& space() const { return space_; }

  friend bool operator==(const DiscreteDatum&, const DiscreteDatum&) = default;

 private:
  std::int64_t value_;
  DiscreteSpace space_;
};

using Datum = std::variant<CtsDatum, VecDatum, DiscreteDatum>;

enum class DataKind { Continuous, Vector, Discrete };

const char* to_string(DataKind kind);

/// An immutable, homogeneous, ordered collection of data.
class DataSet {
 public:
  explicit DataSet(std::vector<CtsDatum> items,
                   std::vector<std::string> columns = {"x"});
  explicit DataSet(std::vector<VecDatum> items,
                   std::vector<std::string> columns = {});
  explicit DataSet(std::vector<DiscreteDatum> items,
                   std::vector<std::string> columns = {"x"});

  /// An empty data set of the given kind.
  static DataSet empty_of(DataKind kind, std::vector<std::string> columns = {});

  DataKind kind() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& columns() const { return columns_; }

  /// Typed views; each throws Error when the data set holds another kind.
  const std::vector<CtsDatum>& cts() const;
  const std::vector<VecDatum>& vec() const;
  const std::vector<DiscreteDatum>& discrete() const;

  Datum at(std::size_t i) const;

 private:
  std::variant<std::vector<CtsDatum>, std::vector<VecDatum>,
               std::vector<DiscreteDatum>>
      items_;
  std::vector<std::string> columns_;
};

// ---------------------------------------------------------------------------
// CSV ingestion

enum class ColumnKind { Continuous, Discrete };

/// Where a continuous column's accuracy of measurement comes from.
struct AomSource {
  enum class Kind { Unspecified, Column, Constant, Infer };

  Kind kind = Kind::Unspecified;
  std::string column;
  double value = 0.0;

  static AomSource from_column(std::string name) {
    return {Kind::Column, std::move(name), 0.0};
  }
  static AomSource constant(double v) { return {Kind::Constant, {}, v}; }
  static AomSource inferred() { return {Kind::Infer, {}, 0.0}; }
};

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::Continuous;
  AomSource aom;             // continuous columns only
  DiscreteSpace space;       // discrete columns only
};

/// Columns to read. One continuous column yields CtsDatum items, several
/// yield VecDatum items, one discrete column yields DiscreteDatum items.
struct Schema {
  std::vector<ColumnSpec> columns;
};

/// Parses header-first delimited text (RFC 4180 quoting) into a DataSet.
/// An entirely empty stream yields an empty DataSet.
DataSet dataset_from_csv(std::istream& in, const Schema& schema,
                         char delimiter = ',');

/// Splits CSV text into records of raw fields.
std::vector<std::vector<std::string>> read_csv_records(std::istream& in,
                                                       char delimiter = ',');

/// Measurement granularity: the smallest positive gap between distinct
/// sorted values, floored at 1e-6 of the value range. With fewer than two
/// distinct values, 1e-6 * max(1, |x|).
double infer_aom(std::span<const double> values);

// ---------------------------------------------------------------------------

class Function;

/// Applies `f` to every item with AoM propagation. The function kind must
/// match the data kind (Cts2Cts, CtsD2CtsD, DiscreteBijection).
DataSet map_dataset(const DataSet& ds, const Function& f);

}  // namespace mml

#endif  // MML_VALUES_HPP
