// Copyright 2026 The blockcoh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: classify, gen, bound, dilate, measure, verify.

#include "blockcoh/blockcoh.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using blockcoh::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCptp = 2;

struct Options {
  std::string input;
  std::string partition;
  std::string cls;
  std::string measure = "all";
  std::string suite;
  std::string output;
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::optional<double> tol;
};

double default_tolerance() {
  if (const char* env = std::getenv("BLOCKCOH_TOL")) {
    try {
      std::size_t used = 0;
      double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("BLOCKCOH_TOL is not a positive number");
  }
  return blockcoh::tol::kZero;
}

double tolerance(const Options& o) { return o.tol ? *o.tol : default_tolerance(); }

void emit(const Options& o, const Json& doc) {
  const std::string text = blockcoh::io::dump(doc);
  if (o.output.empty())
    std::cout << text;
  else
    blockcoh::io::write_atomic(o.output, text);
}

void fail(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << std::endl;
}

int cmd_classify(const Options& o) {
  blockcoh::KrausSet ks = blockcoh::io::kraus_from_json(blockcoh::io::read_json_file(o.input));
  if (!o.partition.empty()) ks = ks.with_partition(blockcoh::parse_partition(o.partition));
  auto report = blockcoh::classify(ks, tolerance(o));
  emit(o, blockcoh::io::classifier_to_json(report));
  return report.cptp ? kExitOk : kExitNotCptp;
}

int cmd_gen(const Options& o) {
  auto ks = blockcoh::gen_random(blockcoh::parse_channel_class(o.cls), blockcoh::parse_partition(o.partition), o.seed);
  emit(o, blockcoh::io::kraus_to_json(ks));
  return kExitOk;
}

int cmd_bound(const Options& o) {
  auto p = blockcoh::parse_partition(o.partition);
  blockcoh::BoundClass c;
  if (o.cls == "bio")
    c = blockcoh::BoundClass::bio;
  else if (o.cls == "sbio")
    c = blockcoh::BoundClass::sbio;
  else
    throw std::invalid_argument("bound --class must be bio or sbio");
  emit(o, blockcoh::io::bound_to_json(blockcoh::kraus_bound(c, p)));
  return kExitOk;
}

int cmd_dilate(const Options& o) {
  auto povm = blockcoh::io::povm_from_json(blockcoh::io::read_json_file(o.input));
  emit(o, blockcoh::io::dilation_to_json(blockcoh::dilate(povm), blockcoh::induced_partition(povm)));
  return kExitOk;
}

int cmd_measure(const Options& o) {
  auto rho = blockcoh::io::state_from_json(blockcoh::io::read_json_file(o.input));
  auto p = o.partition.empty() ? blockcoh::BlockPartition::rank_one(static_cast<std::size_t>(rho.dim()))
                               : blockcoh::parse_partition(o.partition);
  if (o.measure == "all") {
    Json out = Json::array();
    for (auto m : {blockcoh::MeasureKind::rel_entropy, blockcoh::MeasureKind::l1})
      out.push_back(blockcoh::io::measure_to_json(blockcoh::measure_report(m, p, rho)));
    emit(o, out);
  } else {
    emit(o, blockcoh::io::measure_to_json(blockcoh::measure_report(blockcoh::parse_measure(o.measure), p, rho)));
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  blockcoh::verify::SuiteConfig cfg;
  if (!o.partition.empty()) cfg.partition = blockcoh::parse_partition(o.partition);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.tolerance = tolerance(o);
  auto rep = blockcoh::verify::run_suite(o.suite, cfg);

  Json props = Json::array();
  for (const auto& p : rep.properties)
    props.push_back(Json{{"name", p.name},
                         {"pass", p.pass},
                         {"worst_deviation", p.worst_deviation},
                         {"threshold", p.threshold},
                         {"instances", p.instances},
                         {"informational", p.informational}});
  emit(o, Json{{"suite", rep.suite},
               {"partition", blockcoh::io::partition_to_json(cfg.partition)},
               {"seed", cfg.seed},
               {"trials", cfg.trials},
               {"tolerance", cfg.tolerance},
               {"properties", std::move(props)},
               {"pass", rep.pass()}});
  return rep.pass() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blockcoh: block-incoherent operations toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Relative zero tolerance (default 1e-10, or $BLOCKCOH_TOL)");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write output here instead of stdout"); };

  auto* classify = app.add_subcommand("classify", "Classify a Kraus-set file");
  classify->add_option("kraus_file", o.input, "Kraus-set JSON")->required();
  classify->add_option("--partition", o.partition, "Override the file's partition, e.g. 2,3");
  add_tol(classify);
  add_out(classify);

  auto* gen = app.add_subcommand("gen", "Generate a random channel of a class");
  gen->add_option("--class", o.cls, "bio | sbio | pbio | unitary")->required();
  gen->add_option("--partition", o.partition, "Block partition, e.g. 2,3")->required();
  gen->add_option("--seed", o.seed, "RNG seed (default 42)");
  add_out(gen);

  auto* bound = app.add_subcommand("bound", "Kraus-count upper bound for a partition");
  bound->add_option("--class", o.cls, "bio | sbio")->required();
  bound->add_option("--partition", o.partition, "Block partition, e.g. 2,3")->required();
  add_out(bound);

  auto* dilate = app.add_subcommand("dilate", "Naimark dilation of a POVM file");
  dilate->add_option("povm_file", o.input, "POVM JSON")->required();
  add_out(dilate);

  auto* measure = app.add_subcommand("measure", "Block-coherence measures of a state file");
  measure->add_option("--state", o.input, "State JSON")->required();
  measure->add_option("--partition", o.partition, "Block partition (default rank-one)");
  measure->add_option("--measure", o.measure, "rel-entropy | l1 | all (default all)");
  add_out(measure);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", o.suite, "appendix-a | appendix-b | lemmas | inclusion | naimark | measures")->required();
  verify->add_option("--partition", o.partition, "Block partition (default 2,3)");
  verify->add_option("--seed", o.seed, "RNG seed (default 42)");
  verify->add_option("--trials", o.trials, "Instances per property (default 200)");
  add_tol(verify);
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("usage", e.what());
    return kExitError;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*gen) return cmd_gen(o);
    if (*bound) return cmd_bound(o);
    if (*dilate) return cmd_dilate(o);
    if (*measure) return cmd_measure(o);
    if (*verify) return cmd_verify(o);
  } catch (const blockcoh::io::FormatError& e) {
    fail("parse", e.what());
  } catch (const std::invalid_argument& e) {
    fail("invalid_argument", e.what());
  } catch (const std::domain_error& e) {
    fail("domain", e.what());
  } catch (const std::exception& e) {
    fail("runtime", e.what());
  }
  return kExitError;
}
