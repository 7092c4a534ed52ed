#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mml/checks.hpp"
#include "mml/cli.hpp"
#include "mml/error.hpp"
#include "mml/estimation.hpp"

namespace mml::cli {

namespace {

struct Options {
  std::string model;
  std::string input = "-";
  std::string params;
  std::string format = "text";
  std::string suite;
  std::vector<std::string> cols;
  std::vector<std::string> aom_cols;
  std::optional<double> aom_const;
  bool bits = false;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
  double aom = kDefaultSyntheticAom;
};

class Report {
 public:
  Report(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  bool kv() const { return opt_.format == "kv"; }
  const char* units() const { return opt_.bits ? "bits" : "nits"; }
  double scaled(double nits) const { return opt_.bits ? nits_to_bits(nits) : nits; }

  void field(std::string_view key, std::string_view value) {
    if (kv()) {
      fmt::print(out_, "{}={}\n", key, value);
    } else {
      fmt::print(out_, "{}: {}\n", key, value);
    }
  }
  void length(std::string_view key, double nits) {
    if (kv()) {
      fmt::print(out_, "{}={}\n", key, scaled(nits));
    } else {
      fmt::print(out_, "{}: {} {}\n", key, scaled(nits), units());
    }
  }
  void finish() {
    if (kv()) fmt::print(out_, "units={}\n", units());
  }

 private:
  std::ostream& out_;
  const Options& opt_;
};

std::string slurp(const Options& opt, std::istream& in) {
  std::ostringstream buf;
  if (opt.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) throw CsvError(0, "cannot open '" + opt.input + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

bool starts_with_aom(const std::string& s) { return s.rfind("aom_", 0) == 0; }

/// Builds the schema from the header and the column flags, then reads the
/// data. Continuous columns take their AoM from --aom-col, --aom-const, a
/// header column named aom_<name>, or inference, in that order.
DataSet load_data(const Options& opt, const UPModel& upm, std::istream& in) {
  const std::string text = slurp(opt, in);
  std::istringstream header_stream(text);
  const auto records = read_csv_records(header_stream);

  std::size_t wanted = 1;
  if (upm.kind() == ModelKind::RD) wanted = static_cast<const RDUPModel&>(upm).dimension();

  std::vector<std::string> names = opt.cols;
  if (names.empty() && !records.empty()) {
    for (const auto& h : records.front()) {
      const bool named_aom = std::find(opt.aom_cols.begin(), opt.aom_cols.end(), h) !=
                             opt.aom_cols.end();
      if (!starts_with_aom(h) && !named_aom && names.size() < wanted) names.push_back(h);
    }
  }
  if (records.empty()) {
    const DataKind kind = upm.kind() == ModelKind::Discretes ? DataKind::Discrete
                          : upm.kind() == ModelKind::RD      ? DataKind::Vector
                                                             : DataKind::Continuous;
    return DataSet::empty_of(kind, names);
  }
  if (names.size() != wanted) {
    throw SchemaError(upm.name() + " needs " + std::to_string(wanted) +
                      " data column(s), found " + std::to_string(names.size()));
  }
  if (!opt.aom_cols.empty() && opt.aom_cols.size() != names.size()) {
    throw SchemaError("--aom-col must be given once per data column");
  }

  Schema schema;
  const auto& header = records.front();
  for (std::size_t j = 0; j < names.size(); ++j) {
    ColumnSpec col;
    col.name = names[j];
    if (upm.kind() == ModelKind::Discretes) {
      col.kind = ColumnKind::Discrete;
      col.space = static_cast<const DiscreteUPModel&>(upm).space();
    } else if (!opt.aom_cols.empty()) {
      col.aom = AomSource::from_column(opt.aom_cols[j]);
    } else if (opt.aom_const) {
      col.aom = AomSource::constant(*opt.aom_const);
    } else if (std::find(header.begin(), header.end(), "aom_" + names[j]) != header.end()) {
      col.aom = AomSource::from_column("aom_" + names[j]);
    } else {
      col.aom = AomSource::inferred();
    }
    schema.columns.push_back(std::move(col));
  }

  std::istringstream data_stream(text);
  DataSet ds = dataset_from_csv(data_stream, schema);
  if (upm.kind() == ModelKind::RD && ds.kind() == DataKind::Continuous) {
    std::vector<VecDatum> lifted;
    lifted.reserve(ds.size());
    for (const auto& d : ds.cts()) lifted.emplace_back(std::vector{d.x()}, std::vector{d.aom()});
    return DataSet(std::move(lifted), ds.columns());
  }
  return ds;
}

ModelPtr parameterised(const Options& opt, const UPModelPtr& upm) {
  if (opt.params.empty() && upm->kind() != ModelKind::Discretes) {
    throw ParameterError(upm->name() + " needs explicit parameters (--params)");
  }
  StatParams sp;
  try {
    sp = parse_params(opt.params, *upm);
  } catch (const ParseError& e) {
    throw ParameterError(std::string("--params ") + e.what());
  }
  return upm->parameterise(sp);
}

int cmd_fit(const Options& opt, std::istream& in, std::ostream& out) {
  const auto upm = parse_model_spec(opt.model);
  const DataSet ds = load_data(opt, *upm, in);
  const FitResult fr = estimate(*upm->estimator(), ds);
  Report r(out, opt);
  r.field("model", fr.model->name());
  r.field("problem-defining", upm->problem_params());
  r.field("params", fr.model->params().to_string());
  r.field("n", std::to_string(ds.size()));
  r.length("msg1", fr.msg1);
  r.length("msg2", fr.msg2);
  r.length("msg", fr.msg());
  r.finish();
  return kOk;
}

int cmd_eval(const Options& opt, std::istream& in, std::ostream& out) {
  const auto upm = parse_model_spec(opt.model);
  const ModelPtr m = parameterised(opt, upm);
  const DataSet ds = load_data(opt, *upm, in);
  Report r(out, opt);
  r.field("model", m->name());
  r.field("params", m->params().to_string());
  double total = 0.0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    double v = 0.0;
    try {
      v = m->nl_pr(ds.at(i));
    } catch (const DomainError& e) {
      throw DomainError(e.what(), i);
    }
    r.length(r.kv() ? fmt::format("nlpr.{}", i) : fmt::format("nlpr[{}]", i), v);
    total += v;
  }
  r.field("n", std::to_string(ds.size()));
  r.length("total", total);
  r.finish();
  return kOk;
}

int cmd_sample(const Options& opt, std::ostream& out) {
  const auto upm = parse_model_spec(opt.model);
  const ModelPtr m = parameterised(opt, upm);
  if (!(opt.aom > 0.0) || !std::isfinite(opt.aom)) {
    throw ParameterError("--aom must be positive and finite");
  }
  Rng rng(opt.seed);
  std::string text;
  switch (m->kind()) {
    case ModelKind::Continuous: {
      const auto& cm = as_continuous(*m);
      text += "x,aom_x\n";
      for (std::int64_t i = 0; i < opt.count; ++i) {
        const CtsDatum d = cm.random(rng, opt.aom);
        text += fmt::format("{},{}\n", d.x(), d.aom());
      }
      break;
    }
    case ModelKind::RD: {
      const auto& rm = as_rd(*m);
      const std::size_t dim = rm.dimension();
      std::vector<std::string> head;
      for (std::size_t j = 1; j <= dim; ++j) head.push_back(fmt::format("x{}", j));
      for (std::size_t j = 1; j <= dim; ++j) head.push_back(fmt::format("aom_x{}", j));
      text += fmt::format("{}\n", fmt::join(head, ","));
      for (std::int64_t i = 0; i < opt.count; ++i) {
        const VecDatum d = rm.random(rng, opt.aom);
        text += fmt::format("{},{}\n", fmt::join(d.components(), ","),
                            fmt::join(d.aoms(), ","));
      }
      break;
    }
    case ModelKind::Discretes: {
      const auto& dm = as_discrete(*m);
      text += "x\n";
      for (std::int64_t i = 0; i < opt.count; ++i) text += fmt::format("{}\n", dm.sample(rng));
      break;
    }
  }
  out << text;
  return kOk;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto& names = checks::suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end()) {
    fmt::print(err, "error: unknown suite '{}'; expected one of {}\n", opt.suite,
               fmt::join(names, ", "));
    return kUsage;
  }
  const auto outcomes = checks::run_suite(opt.suite);
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed ? 1 : 0;
    if (opt.format == "kv") {
      fmt::print(out, "{}={} worst={} tolerance={}\n", o.name, o.passed ? "pass" : "fail",
                 o.worst, o.tolerance);
    } else {
      fmt::print(out, "{} {} (worst {:.3g}, tolerance {:.3g})\n",
                 o.passed ? "PASS" : "FAIL", o.name, o.worst, o.tolerance);
    }
  }
  fmt::print(out, "{}: {}/{} passed\n", opt.suite, passed, outcomes.size());
  return passed == outcomes.size() ? kOk : kCheckFailed;
}

void add_data_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "CSV file, '-' for stdin")->capture_default_str();
  cmd->add_option("--col", opt.cols, "Data column, repeat for R^D models");
  cmd->add_option("--aom-col", opt.aom_cols, "AoM column, one per --col");
  cmd->add_option("--aom-const", opt.aom_const, "Constant AoM for every continuous column");
}

void add_report_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--bits", opt.bits, "Report message lengths in bits");
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Minimum message length fitting, evaluation and sampling"};
  app.require_subcommand(1);

  auto* fit = app.add_subcommand("fit", "Fit a model to CSV data");
  fit->add_option("model", opt.model, "Model spec, e.g. normal.transform(log)")->required();
  add_data_flags(fit, opt);
  add_report_flags(fit, opt);

  auto* eval = app.add_subcommand("eval", "Per-datum negative log probability");
  eval->add_option("model", opt.model, "Model spec")->required();
  eval->add_option("--params", opt.params, "Statistical parameters, e.g. 0,1");
  add_data_flags(eval, opt);
  add_report_flags(eval, opt);

  auto* sample = app.add_subcommand("sample", "Draw a CSV of random data");
  sample->add_option("model", opt.model, "Model spec")->required();
  sample->add_option("--params", opt.params, "Statistical parameters, e.g. 0,1");
  sample->add_option("-n,--count", opt.count, "Number of draws")
      ->check(CLI::NonNegativeNumber)
      ->required();
  sample->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  sample->add_option("--aom", opt.aom, "AoM attached to continuous draws")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("suite", opt.suite, "commute-sp, commute-est, info, jacobian, "
                                        "normalize or aom")
      ->required();
  check->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (fit->parsed()) return cmd_fit(opt, in, out);
    if (eval->parsed()) return cmd_eval(opt, in, out);
    if (sample->parsed()) return cmd_sample(opt, out);
    return cmd_check(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!opt.model.empty()) {
      err << "  " << opt.model << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
    return kUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TransformError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundsError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

}  // namespace mml::cli
