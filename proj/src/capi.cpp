// Copyright 2026 The cansim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cansim/cansim.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "cansim/checkers.hpp"
#include "cansim/fuzz.hpp"
#include "cansim/io.hpp"
#include "cansim/oracle.hpp"
#include "cansim/system.hpp"

struct cansim_scenario {
  cansim::Scenario value;
};

struct cansim_trace {
  cansim::Trace value;
};

struct cansim_report {
  cansim::Report value;
  bool strict = false;
  std::string text;
  std::string json;
};

struct cansim_fuzz_summary {
  cansim::FuzzSummary value;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

cansim_status fail(cansim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the core's exception hierarchy onto status codes.
template <class Fn>
cansim_status translate(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const cansim::ParseError& e) {
    return fail(CANSIM_ERR_PARSE, e.what());
  } catch (const cansim::ScenarioError& e) {
    return fail(CANSIM_ERR_SCENARIO, e.what());
  } catch (const cansim::IoError& e) {
    return fail(CANSIM_ERR_IO, e.what());
  } catch (const cansim::HorizonError& e) {
    return fail(CANSIM_ERR_HORIZON, e.what());
  } catch (const cansim::ContractError& e) {
    return fail(CANSIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const cansim::Error& e) {
    return fail(CANSIM_ERR_RUNTIME, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CANSIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CANSIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CANSIM_ERR_INTERNAL, "unknown error");
  }
}

cansim_status nullArgument(const char* what) {
  return fail(CANSIM_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string renderLog(const std::vector<cansim::Delivery>& log) {
  if (log.empty()) return "  (none)\n";
  std::string out;
  for (const auto& d : log) {
    out += "  t=" + std::to_string(d.tick) + " " + cansim::toString(d.message) +
           "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* cansim_version(void) { return "0.1.0"; }

const char* cansim_last_error(void) { return g_last_error.c_str(); }

void cansim_string_free(char* s) { std::free(s); }

cansim_status cansim_scenario_parse(const char* json, cansim_scenario** out) {
  if (!json) return nullArgument("json");
  if (!out) return nullArgument("out");
  return translate([&] {
    *out = new cansim_scenario{cansim::parseScenario(json)};
    return CANSIM_OK;
  });
}

cansim_status cansim_scenario_load(const char* path, cansim_scenario** out) {
  if (!path) return nullArgument("path");
  if (!out) return nullArgument("out");
  return translate([&] {
    *out = new cansim_scenario{cansim::loadScenario(path)};
    return CANSIM_OK;
  });
}

cansim_status cansim_scenario_save(const cansim_scenario* s, const char* path) {
  if (!s) return nullArgument("scenario");
  if (!path) return nullArgument("path");
  return translate([&] {
    cansim::saveScenario(path, s->value);
    return CANSIM_OK;
  });
}

void cansim_scenario_free(cansim_scenario* s) { delete s; }

cansim_status cansim_scenario_validate(const cansim_scenario* s) {
  if (!s) return nullArgument("scenario");
  return translate([&] {
    const auto violations = cansim::validateScenario(s->value);
    if (violations.empty()) return CANSIM_OK;
    std::string text = "invalid scenario:";
    for (const auto& v : violations) text += "\n  " + cansim::toString(v);
    return fail(CANSIM_ERR_SCENARIO, text);
  });
}

cansim_status cansim_scenario_set_fidelity(cansim_scenario* s, int enabled) {
  if (!s) return nullArgument("scenario");
  s->value.options.fidelityMode = enabled != 0;
  if (enabled) {
    s->value.options.bootstrapRequestTick.reset();
  } else if (!s->value.options.bootstrapRequestTick) {
    s->value.options.bootstrapRequestTick = 0;
  }
  return CANSIM_OK;
}

cansim_status cansim_run(const cansim_scenario* s, cansim_trace** out) {
  if (!s) return nullArgument("scenario");
  if (!out) return nullArgument("out");
  *out = nullptr;
  return translate([&] {
    auto trace = std::make_unique<cansim_trace>(
        cansim_trace{cansim::runScenario(s->value)});
    cansim_status status = CANSIM_OK;
    if (const auto& f = trace->value.failure) {
      std::string text = f->component + " failed at tick " +
                         std::to_string(f->tick);
      if (f->node) text += " on node " + std::to_string(f->node->index);
      status = fail(CANSIM_ERR_RUNTIME, text + ": " + f->message);
    }
    *out = trace.release();
    return status;
  });
}

cansim_status cansim_trace_load(const char* path, cansim_trace** out) {
  if (!path) return nullArgument("path");
  if (!out) return nullArgument("out");
  return translate([&] {
    *out = new cansim_trace{cansim::loadTrace(path)};
    return CANSIM_OK;
  });
}

cansim_status cansim_trace_save(const cansim_trace* t, const char* path) {
  if (!t) return nullArgument("trace");
  if (!path) return nullArgument("path");
  return translate([&] {
    cansim::saveTrace(path, t->value);
    return CANSIM_OK;
  });
}

cansim_status cansim_trace_serialize(const cansim_trace* t, char** out) {
  if (!t) return nullArgument("trace");
  if (!out) return nullArgument("out");
  return translate([&] {
    *out = duplicate(cansim::traceToJsonl(t->value));
    return CANSIM_OK;
  });
}

void cansim_trace_free(cansim_trace* t) { delete t; }

size_t cansim_trace_horizon(const cansim_trace* t) {
  return t ? t->value.horizon() : 0;
}

size_t cansim_trace_node_count(const cansim_trace* t) {
  return t ? t->value.nodeCount() : 0;
}

size_t cansim_trace_delivery_count(const cansim_trace* t) {
  if (!t || t->value.nodeCount() == 0) return 0;
  return cansim::deliveries(t->value).size();
}

int cansim_trace_failed(const cansim_trace* t) {
  return t && t->value.failure ? 1 : 0;
}

void cansim_check_options_init(cansim_check_options* options) {
  if (!options) return;
  options->predicates = CANSIM_CHECK_ALL;
  options->latency = -1;
  options->strict = 0;
}

unsigned cansim_predicate_from_name(const char* name) {
  if (!name) return 0;
  auto p = cansim::predicateFromName(name);
  return p ? static_cast<unsigned>(*p) : 0u;
}

cansim_status cansim_check(const cansim_trace* t,
                           const cansim_check_options* options,
                           cansim_report** out) {
  if (!t) return nullArgument("trace");
  if (!out) return nullArgument("out");
  cansim_check_options opts;
  cansim_check_options_init(&opts);
  if (options) opts = *options;
  if (opts.predicates & ~CANSIM_CHECK_ALL) {
    return fail(CANSIM_ERR_INVALID_ARGUMENT, "unknown predicate bits");
  }
  return translate([&] {
    cansim::CheckConfig config;
    config.predicates = opts.predicates ? opts.predicates : cansim::kPredAll;
    if (opts.latency >= 0) {
      config.latency = static_cast<std::size_t>(opts.latency);
      // An explicit latency that cannot be honoured is an error, not a skip.
      if ((config.predicates & cansim::kPredTransmission) &&
          *config.latency >= t->value.horizon()) {
        throw cansim::HorizonError(
            "latency " + std::to_string(*config.latency) +
            " does not fit in a horizon of " +
            std::to_string(t->value.horizon()) + " ticks");
      }
    }
    auto report = std::make_unique<cansim_report>();
    report->value = cansim::checkAll(t->value, config);
    report->strict = opts.strict != 0;
    report->text = cansim::renderText(report->value);
    report->json = cansim::reportToJson(report->value);
    *out = report.release();
    return CANSIM_OK;
  });
}

size_t cansim_report_violation_count(const cansim_report* r) {
  return r ? r->value.violationCount() : 0;
}

size_t cansim_report_warning_count(const cansim_report* r) {
  return r ? r->value.warnings.size() : 0;
}

int cansim_report_passed(const cansim_report* r) {
  return r && r->value.passed(r->strict) ? 1 : 0;
}

const char* cansim_report_text(const cansim_report* r) {
  return r ? r->text.c_str() : "";
}

const char* cansim_report_json(const cansim_report* r) {
  return r ? r->json.c_str() : "";
}

void cansim_report_free(cansim_report* r) { delete r; }

void cansim_fuzz_options_init(cansim_fuzz_options* options) {
  if (!options) return;
  options->seed = 0;
  options->nodes = 3;
  options->horizon = 64;
  options->count = 100;
  options->threads = 0;
  options->failure_dir = nullptr;
}

cansim_status cansim_fuzz(const cansim_fuzz_options* options,
                          cansim_fuzz_summary** out) {
  if (!options) return nullArgument("options");
  if (!out) return nullArgument("out");
  return translate([&] {
    cansim::FuzzConfig config;
    config.seed = options->seed;
    config.minNodes = options->nodes;
    config.maxNodes = options->nodes;
    config.horizon = options->horizon;
    config.count = options->count;
    config.threads = options->threads;
    auto summary = std::make_unique<cansim_fuzz_summary>();
    summary->value = cansim::runFuzz(config);
    summary->text = summary->value.render();
    if (options->failure_dir) {
      for (const std::string& path :
           cansim::writeFailures(summary->value, options->failure_dir)) {
        summary->text += "wrote " + path + "\n";
      }
    }
    *out = summary.release();
    return CANSIM_OK;
  });
}

size_t cansim_fuzz_total(const cansim_fuzz_summary* f) {
  return f ? f->value.total : 0;
}

size_t cansim_fuzz_passed(const cansim_fuzz_summary* f) {
  return f ? f->value.passed : 0;
}

const char* cansim_fuzz_text(const cansim_fuzz_summary* f) {
  return f ? f->text.c_str() : "";
}

void cansim_fuzz_free(cansim_fuzz_summary* f) { delete f; }

cansim_status cansim_oracle_diff(const cansim_scenario* s, int* equivalent,
                                 char** detail) {
  if (!s) return nullArgument("scenario");
  if (!equivalent) return nullArgument("equivalent");
  return translate([&] {
    const cansim::Verdict v = cansim::compareWithSimulator(s->value);
    *equivalent = v.equivalent ? 1 : 0;
    if (detail) {
      std::string text = v.equivalent ? "equivalent\n"
                                      : "MISMATCH: " + v.firstDivergence + "\n";
      text += "simulator deliveries:\n" + renderLog(v.simulator);
      text += "oracle deliveries:\n" + renderLog(v.oracle);
      *detail = duplicate(text);
    }
    return CANSIM_OK;
  });
}

}  // extern "C"
