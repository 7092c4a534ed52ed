#include "mml/values.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mml/error.hpp"
#include "mml/functions.hpp"

namespace mml {

CtsDatum::CtsDatum(double x, double aom) : x_(x), aom_(aom) {
  if (!std::isfinite(x)) {
    throw InvalidDatum("continuous datum value must be finite, got " +
                       std::to_string(x));
  }
  if (!std::isfinite(aom) || !(aom > 0.0)) {
    throw InvalidDatum("accuracy of measurement must be finite and positive, got " +
                       std::to_string(aom));
  }
}

CtsDatum make_cts_datum(double x, double aom) { return CtsDatum(x, aom); }

VecDatum::VecDatum(std::vector<double> components, std::vector<double> aoms)
    : components_(std::move(components)), aoms_(std::move(aoms)) {
  if (components_.empty()) {
    throw InvalidDatum("vector datum needs at least one component");
  }
  if (components_.size() != aoms_.size()) {
    throw InvalidDatum("vector datum has " + std::to_string(components_.size()) +
                       " components but " + std::to_string(aoms_.size()) +
                       " AoMs");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!std::isfinite(components_[i])) {
      throw InvalidDatum("component " + std::to_string(i) + " is not finite");
    }
    if (!std::isfinite(aoms_[i]) || !(aoms_[i] > 0.0)) {
      throw InvalidDatum("AoM of component " + std::to_string(i) +
                         " must be finite and positive");
    }
  }
}

double VecDatum::aom_volume() const {
  double v = 1.0;
  for (double a : aoms_) v *= a;
  return v;
}

DiscreteSpace DiscreteSpace::bounded(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw BoundsError("empty discrete space [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return {lo, hi};
}

DiscreteDatum::DiscreteDatum(std::int64_t value, DiscreteSpace space)
    : value_(value), space_(space) {
  if (space.lo > space.hi) {
    throw BoundsError("empty discrete space");
  }
  if (!space.contains(value)) {
    throw DomainError(std::to_string(value) + " is outside [" +
                      std::to_string(space.lo) + ", " +
                      std::to_string(space.hi) + "]");
  }
}

const char* to_string(DataKind kind) {
  switch (kind) {
    case DataKind::Continuous: return "continuous";
    case DataKind::Vector: return "vector";
    case DataKind::Discrete: return "discrete";
  }
  return "?";
}

DataSet::DataSet(std::vector<CtsDatum> items, std::vector<std::string> columns)
    : items_(std::move(items)), columns_(std::move(columns)) {}

DataSet::DataSet(std::vector<VecDatum> items, std::vector<std::string> columns)
    : items_(std::move(items)), columns_(std::move(columns)) {
  const auto& v = std::get<std::vector<VecDatum>>(items_);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].dimension() != v[0].dimension()) {
      throw InvalidDatum("element " + std::to_string(i) + " has dimension " +
                         std::to_string(v[i].dimension()) + ", expected " +
                         std::to_string(v[0].dimension()));
    }
  }
  if (columns_.empty() && !v.empty()) {
    for (std::size_t j = 0; j < v[0].dimension(); ++j) {
      columns_.push_back("x" + std::to_string(j + 1));
    }
  }
}

DataSet::DataSet(std::vector<DiscreteDatum> items,
                 std::vector<std::string> columns)
    : items_(std::move(items)), columns_(std::move(columns)) {}

DataSet DataSet::empty_of(DataKind kind, std::vector<std::string> columns) {
  switch (kind) {
    case DataKind::Continuous:
      return DataSet(std::vector<CtsDatum>{}, std::move(columns));
    case DataKind::Vector:
      return DataSet(std::vector<VecDatum>{}, std::move(columns));
    case DataKind::Discrete:
      return DataSet(std::vector<DiscreteDatum>{}, std::move(columns));
  }
  throw Error("unknown data kind");
}

DataKind DataSet::kind() const {
  switch (items_.index()) {
    case 0: return DataKind::Continuous;
    case 1: return DataKind::Vector;
    default: return DataKind::Discrete;
  }
}

std::size_t DataSet::size() const {
  return std::visit([](const auto& v) { return v.size(); }, items_);
}

namespace {

template <typename T>
const std::vector<T>& typed(const auto& items, DataKind want, DataKind have) {
  if (const auto* p = std::get_if<std::vector<T>>(&items)) return *p;
  throw Error(std::string("data set holds ") + to_string(have) +
              " data, not " + to_string(want));
}

}  // namespace

const std::vector<CtsDatum>& DataSet::cts() const {
  return typed<CtsDatum>(items_, DataKind::Continuous, kind());
}

const std::vector<VecDatum>& DataSet::vec() const {
  return typed<VecDatum>(items_, DataKind::Vector, kind());
}

const std::vector<DiscreteDatum>& DataSet::discrete() const {
  return typed<DiscreteDatum>(items_, DataKind::Discrete, kind());
}

Datum DataSet::at(std::size_t i) const {
  return std::visit([i](const auto& v) -> Datum { return v.at(i); }, items_);
}

double infer_aom(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double gap = INFINITY;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    double d = sorted[i] - sorted[i - 1];
    if (d > 0.0) gap = std::min(gap, d);
  }
  if (!std::isfinite(gap)) {
    double scale = sorted.empty() ? 1.0 : std::max(1.0, std::fabs(sorted[0]));
    return 1e-6 * scale;
  }
  double range = sorted.back() - sorted.front();
  return std::max(gap, 1e-6 * range);
}

namespace {

template <typename In, typename F>
auto map_items(const std::vector<In>& items, F&& apply) {
  using Out = decltype(apply(items.front()));
  std::vector<Out> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out.push_back(apply(items[i]));
    } catch (const DomainError& e) {
      throw DomainError(e.what(), i);
    } catch (const DegenerateTransform& e) {
      throw DegenerateTransform(e.what(), i);
    }
  }
  return out;
}

}  // namespace

DataSet map_dataset(const DataSet& ds, const Function& f) {
  switch (ds.kind()) {
    case DataKind::Continuous:
      if (const auto* g = dynamic_cast<const Cts2Cts*>(&f)) {
        return DataSet(map_items(ds.cts(), [g](const CtsDatum& d) {
                         return g->apply(d);
                       }),
                       ds.columns());
      }
      break;
    case DataKind::Vector:
      if (const auto* g = dynamic_cast<const CtsD2CtsD*>(&f)) {
        return DataSet(map_items(ds.vec(), [g](const VecDatum& d) {
                         return g->apply(d);
                       }),
                       ds.columns());
      }
      break;
    case DataKind::Discrete:
      if (const auto* g = dynamic_cast<const DiscreteBijection*>(&f)) {
        return DataSet(map_items(ds.discrete(), [g](const DiscreteDatum& d) {
                         return g->apply(d);
                       }),
                       ds.columns());
      }
      break;
  }
  throw TransformError("function " + f.name() + " cannot be mapped over " +
                       to_string(ds.kind()) + " data");
}

}  // namespace mml
