// Copyright 2026 the pathhom authors
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

// Command-line front end.  Talks to the engine exclusively through the
// public C API so that the binary exercises the same surface as any other
// embedding.  All reports are emitted in a fixed key order; timing fields
// are opt-in so that default output is byte-for-byte reproducible.

#include "pathhom/pathhom.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_of(ph_status st) {
  switch (st) {
    case PH_ERR_PARSE:
    case PH_ERR_IO:
    case PH_ERR_ARGUMENT:
      return 2;
    case PH_ERR_VALIDATION:
      return 3;
    case PH_ERR_GUARD:
      return 4;
    case PH_ERR_MISMATCH:
      return 5;
    default:
      return 1;
  }
}

// Captures the thread-local error text at the throw site so that worker
// threads can hand failures back to the main thread intact.
void check(ph_status st) {
  if (st != PH_OK) throw CliError{exit_code_of(st), ph_last_error()};
}

struct GraphDeleter {
  void operator()(ph_graph* g) const { ph_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ph_graph, GraphDeleter>;

struct ResultDeleter {
  void operator()(ph_result* r) const { ph_result_free(r); }
};
using ResultPtr = std::unique_ptr<ph_result, ResultDeleter>;

struct CurveDeleter {
  void operator()(ph_curve* c) const { ph_curve_free(c); }
};
using CurvePtr = std::unique_ptr<ph_curve, CurveDeleter>;

// The pointer comes by reference: callers pass the producing call and the
// output variable in one expression, and argument evaluation order must not
// matter, so the value is only read here, after the call has filled it.
std::string take_string(ph_status st, char*& s) {
  check(st);
  std::string out(s ? s : "");
  ph_string_free(s);
  s = nullptr;
  return out;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Rounded to microseconds so the number serializes compactly.
double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw CliError{2, "write to '" + path + "' failed"};
}

void emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

void emit_raw(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

// Loads an edge list, attaching layers from a file or by longest-path
// inference.  `layers`/`infer` are mutually exclusive (checked upstream).
GraphPtr load_graph(const std::string& edges, const std::string& layers, bool infer) {
  ph_graph* raw = nullptr;
  check(ph_graph_read(edges.c_str(), layers.empty() ? nullptr : layers.c_str(), &raw));
  GraphPtr g(raw);
  if (layers.empty() && infer) check(ph_graph_infer_layers(g.get()));
  return g;
}

// Index-sharded work loop; results must be written by index so that output
// order never depends on scheduling.
void run_parallel(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : failures)
    if (e) std::rethrow_exception(e);
}

struct CommonOpts {
  std::vector<std::string> inputs;
  std::string layers;
  bool infer = false;
  std::string output;
  bool timings = false;
};

void add_layer_options(CLI::App* cmd, CommonOpts& o) {
  auto* lay = cmd->add_option("--layers", o.layers, "Layer file (one layer per line)");
  auto* inf = cmd->add_flag("--infer", o.infer, "Infer layers from longest-path levels");
  lay->excludes(inf);
}

void require_single_input_for_layers(const CommonOpts& o) {
  if (!o.layers.empty() && o.inputs.size() != 1)
    throw CliError{2, "--layers applies to a single input file"};
}

Json layers_config(const CommonOpts& o, bool inferred_by_default) {
  if (!o.layers.empty()) return o.layers;
  if (o.infer || inferred_by_default) return "inferred";
  return "none";
}

// ---- betti -------------------------------------------------------------

struct BettiOpts : CommonOpts {
  std::string dim = "full";
  bool track = false;
  long long guard = -1;
};

int run_betti(const BettiOpts& o) {
  require_single_input_for_layers(o);
  enum class Mode { Full, Max, Fixed } mode = Mode::Full;
  int fixed_dim = 0;
  if (o.dim == "full") {
    mode = Mode::Full;
  } else if (o.dim == "max") {
    mode = Mode::Max;
  } else {
    try {
      std::size_t used = 0;
      fixed_dim = std::stoi(o.dim, &used);
      if (used != o.dim.size() || fixed_dim < 0) throw std::invalid_argument("dim");
    } catch (const std::exception&) {
      throw CliError{2, "--dim expects 'full', 'max', or a nonnegative integer"};
    }
    mode = Mode::Fixed;
  }
  if (o.track && mode == Mode::Fixed)
    throw CliError{2, "--track requires --dim full or --dim max"};

  Json report;
  report["command"] = "betti";
  report["config"] = Json{{"dim", o.dim},
                          {"track", o.track},
                          {"guard", o.guard},
                          {"layers", layers_config(o, mode == Mode::Full)}};
  Json results = Json::array();
  for (const auto& input : o.inputs) {
    GraphPtr g = mode == Mode::Full ? load_graph(input, o.layers, true)
                                    : load_graph(input, o.layers, o.infer);
    ph_result* raw = nullptr;
    auto t0 = Clock::now();
    switch (mode) {
      case Mode::Full:
        check(ph_betti_full_depth(g.get(), o.track ? 1 : 0, &raw));
        break;
      case Mode::Max:
        check(ph_betti_maximal(g.get(), o.track ? 1 : 0, &raw));
        break;
      case Mode::Fixed:
        check(ph_betti_general(g.get(), fixed_dim, o.guard, &raw));
        break;
    }
    double elapsed = ms_since(t0);
    ResultPtr res(raw);
    Json row;
    row["input"] = input;
    row["betti"] = ph_result_betti(res.get());
    row["dimension"] = ph_result_dimension(res.get());
    row["algorithm"] = ph_result_algorithm(res.get());
    if (o.timings) row["elapsed_ms"] = round_ms(elapsed);
    if (o.track) {
      char* basis = nullptr;
      row["basis"] = Json::parse(take_string(ph_result_basis_json(res.get(), &basis), basis));
    }
    results.push_back(std::move(row));
  }
  report["results"] = std::move(results);
  emit(report, o.output);
  return 0;
}

// ---- compare -----------------------------------------------------------

struct CompareOpts : CommonOpts {
  long long guard = -1;
  unsigned jobs = 1;
  bool corrupt = false;  // hidden self-test hook: skews one side on purpose
};

int run_compare(const CompareOpts& o) {
  require_single_input_for_layers(o);
  struct Row {
    long long rec = 0, gen = 0;
    int dim = 0;
    double rec_ms = 0, gen_ms = 0;
  };
  std::vector<Row> rows(o.inputs.size());
  run_parallel(o.inputs.size(), o.jobs, [&](std::size_t i) {
    GraphPtr g = load_graph(o.inputs[i], o.layers, true);
    Row& r = rows[i];
    r.dim = ph_graph_depth(g.get());
    ph_result* raw = nullptr;
    auto t0 = Clock::now();
    check(ph_betti_full_depth(g.get(), 0, &raw));
    r.rec_ms = ms_since(t0);
    ResultPtr rec(raw);
    r.rec = ph_result_betti(rec.get());
    raw = nullptr;
    t0 = Clock::now();
    check(ph_betti_general(g.get(), r.dim, o.guard, &raw));
    r.gen_ms = ms_since(t0);
    ResultPtr gen(raw);
    r.gen = ph_result_betti(gen.get());
  });
  if (o.corrupt && !rows.empty()) rows[0].rec += 1;

  Json report;
  report["command"] = "compare";
  report["config"] = Json{{"guard", o.guard},
                          {"jobs", o.jobs},
                          {"layers", layers_config(o, true)}};
  Json results = Json::array();
  std::string first_bad;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    for (int side = 0; side < 2; ++side) {
      Json row;
      row["input"] = o.inputs[i];
      row["betti"] = side == 0 ? r.rec : r.gen;
      row["dimension"] = r.dim;
      row["algorithm"] = side == 0 ? "recursive" : "general";
      if (o.timings) row["elapsed_ms"] = round_ms(side == 0 ? r.rec_ms : r.gen_ms);
      results.push_back(std::move(row));
    }
    if (r.rec != r.gen && first_bad.empty()) first_bad = o.inputs[i];
  }
  report["results"] = std::move(results);
  report["agree"] = first_bad.empty();
  emit(report, o.output);
  if (!first_bad.empty()) {
    std::fprintf(stderr, "pathhom: betti mismatch between algorithms on '%s'\n",
                 first_bad.c_str());
    return 5;
  }
  return 0;
}

// ---- sample ------------------------------------------------------------

struct SampleOpts {
  std::string sizes;
  std::string rho = "1";
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string weights = "none";
  std::string out_dir = ".";
  std::string prefix = "sample";
  std::string output;
  unsigned jobs = 1;
};

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("sizes");
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw CliError{2, "--sizes expects a comma list of integers, e.g. 4,10,10"};
    }
  }
  if (sizes.empty()) throw CliError{2, "--sizes expects a comma list of integers"};
  return sizes;
}

int run_sample(const SampleOpts& o) {
  if (o.weights != "none" && o.weights != "uniform")
    throw CliError{2, "--weights expects 'none' or 'uniform'"};
  std::vector<int> sizes = parse_sizes(o.sizes);
  std::filesystem::create_directories(o.out_dir);

  struct Row {
    std::string path;
    std::size_t vertices = 0, edges = 0;
  };
  std::vector<Row> rows(o.count);
  std::string layers_text;
  std::mutex layers_mutex;
  run_parallel(o.count, o.jobs, [&](std::size_t i) {
    ph_graph* raw = nullptr;
    check(ph_sample_layered(sizes.data(), sizes.size(), o.rho.c_str(), o.seed, i,
                            o.weights == "uniform" ? 1 : 0, &raw));
    GraphPtr g(raw);
    char* text = nullptr;
    std::string edges = take_string(ph_graph_edge_list(g.get(), &text), text);
    char buf[32];
    std::snprintf(buf, sizeof buf, "_%04llu.edges", static_cast<unsigned long long>(i));
    Row& r = rows[i];
    r.path = (std::filesystem::path(o.out_dir) / (o.prefix + buf)).string();
    r.vertices = ph_graph_vertex_count(g.get());
    r.edges = ph_graph_edge_count(g.get());
    write_text_file(r.path, edges);
    if (i == 0) {
      char* lt = nullptr;
      std::string layers = take_string(ph_graph_layers_text(g.get(), &lt), lt);
      std::lock_guard<std::mutex> lock(layers_mutex);
      layers_text = std::move(layers);
    }
  });
  std::string layers_path =
      (std::filesystem::path(o.out_dir) / (o.prefix + ".layers")).string();
  write_text_file(layers_path, layers_text);

  Json report;
  report["command"] = "sample";
  report["config"] = Json{{"sizes", o.sizes}, {"rho", o.rho},
                          {"seed", o.seed},   {"count", o.count},
                          {"weights", o.weights}};
  report["layers"] = layers_path;
  Json results = Json::array();
  for (const auto& r : rows)
    results.push_back(Json{{"input", r.path}, {"vertices", r.vertices}, {"edges", r.edges}});
  report["results"] = std::move(results);
  emit(report, o.output);
  return 0;
}

// ---- persist -----------------------------------------------------------

struct PersistOpts : CommonOpts {
  bool baseline = false;
  std::string format = "csv";
};

int run_persist(const PersistOpts& o) {
  if (o.format != "csv" && o.format != "json")
    throw CliError{2, "--format expects 'csv' or 'json'"};
  GraphPtr g = load_graph(o.inputs.front(), o.layers, true);
  ph_curve* raw = nullptr;
  check(ph_persistence(g.get(), o.baseline ? 1 : 0, &raw));
  CurvePtr curve(raw);
  char* text = nullptr;
  std::string body = o.format == "csv"
                         ? take_string(ph_curve_csv(curve.get(), &text), text)
                         : take_string(ph_curve_json(curve.get(), &text), text);
  emit_raw(body, o.output);
  return 0;
}

// ---- preprocess --------------------------------------------------------

struct PreprocessOpts : CommonOpts {
  std::string op;
  std::string out_prefix;
};

void write_graph_files(const ph_graph* g, const std::string& prefix, Json& files) {
  char* text = nullptr;
  std::string edges = take_string(ph_graph_edge_list(g, &text), text);
  write_text_file(prefix + ".edges", edges);
  files.push_back(prefix + ".edges");
  if (ph_graph_depth(g) >= 0) {
    char* lt = nullptr;
    std::string layers = take_string(ph_graph_layers_text(g, &lt), lt);
    write_text_file(prefix + ".layers", layers);
    files.push_back(prefix + ".layers");
  }
}

int run_preprocess(const PreprocessOpts& o) {
  Json report;
  report["command"] = "preprocess";
  report["config"] = Json{{"op", o.op}, {"layers", layers_config(o, false)}};
  Json files = Json::array();

  if (o.op == "longest") {
    GraphPtr g = load_graph(o.inputs.front(), o.layers, o.infer);
    ph_graph* raw = nullptr;
    check(ph_graph_longest_subgraph(g.get(), &raw));
    GraphPtr sub(raw);
    write_graph_files(sub.get(), o.out_prefix, files);
  } else if (o.op == "trim" || o.op == "trim-connected") {
    GraphPtr g = load_graph(o.inputs.front(), o.layers, true);
    ph_graph* raw = nullptr;
    int trivial = 0;
    check(ph_graph_trim(g.get(), o.op == "trim-connected" ? 1 : 0, &raw, &trivial));
    GraphPtr trimmed(raw);
    write_graph_files(trimmed.get(), o.out_prefix, files);
    report["trivial_full_depth"] = trivial != 0;
  } else if (o.op == "components") {
    GraphPtr g = load_graph(o.inputs.front(), o.layers, o.infer);
    ph_graph** list = nullptr;
    std::size_t count = 0;
    check(ph_graph_components(g.get(), &list, &count));
    for (std::size_t i = 0; i < count; ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "_c%03zu", i);
      write_graph_files(list[i], o.out_prefix + buf, files);
    }
    ph_graph_list_free(list, count);
  } else if (o.op == "infer-layers") {
    GraphPtr g = load_graph(o.inputs.front(), "", true);
    write_graph_files(g.get(), o.out_prefix, files);
  } else {
    throw CliError{2,
                   "--op expects longest, trim, trim-connected, components, or infer-layers"};
  }
  report["files"] = std::move(files);
  emit(report, o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path homology of layered digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ph_version()));

  BettiOpts betti;
  auto* cmd_betti = app.add_subcommand("betti", "Betti numbers of one or more graphs");
  cmd_betti->add_option("inputs", betti.inputs, "Edge list files")->required();
  add_layer_options(cmd_betti, betti);
  cmd_betti->add_option("--dim", betti.dim,
                        "full (top layer), max (longest-path dimension), or an integer");
  cmd_betti->add_flag("--track", betti.track, "Report representative cycles");
  cmd_betti->add_option("--guard", betti.guard, "Path enumeration limit (-1 for default)");
  cmd_betti->add_option("-o,--output", betti.output, "Report file (default stdout)");
  cmd_betti->add_flag("--timings", betti.timings, "Include elapsed_ms fields");

  CompareOpts compare;
  auto* cmd_compare =
      app.add_subcommand("compare", "Cross-check the recursive and general algorithms");
  cmd_compare->add_option("inputs", compare.inputs, "Edge list files")->required();
  add_layer_options(cmd_compare, compare);
  cmd_compare->add_option("--guard", compare.guard, "Path enumeration limit (-1 for default)");
  cmd_compare->add_option("--jobs", compare.jobs, "Worker threads");
  cmd_compare->add_option("-o,--output", compare.output, "Report file (default stdout)");
  cmd_compare->add_flag("--timings", compare.timings, "Include elapsed_ms fields");
  cmd_compare->add_flag("--self-test-corrupt", compare.corrupt)->group("");

  SampleOpts sample;
  auto* cmd_sample = app.add_subcommand("sample", "Generate random layered graphs");
  cmd_sample->add_option("--sizes", sample.sizes, "Layer sizes, e.g. 4,10,10,10")->required();
  cmd_sample->add_option("--rho", sample.rho, "Edge density in (0,1], exact, e.g. 0.35 or 1/3");
  cmd_sample->add_option("--seed", sample.seed, "Generator seed");
  cmd_sample->add_option("--count", sample.count, "Number of graphs");
  cmd_sample->add_option("--weights", sample.weights, "none or uniform");
  cmd_sample->add_option("--out-dir", sample.out_dir, "Output directory");
  cmd_sample->add_option("--prefix", sample.prefix, "Output file prefix");
  cmd_sample->add_option("--jobs", sample.jobs, "Worker threads");
  cmd_sample->add_option("-o,--output", sample.output, "Report file (default stdout)");

  PersistOpts persist;
  auto* cmd_persist =
      app.add_subcommand("persist", "Full-depth persistence over the weight filtration");
  cmd_persist->add_option("input", persist.inputs, "Edge list file")
      ->required()
      ->expected(1);
  add_layer_options(cmd_persist, persist);
  cmd_persist->add_flag("--baseline", persist.baseline,
                        "Prepend the unfiltered value below the minimum weight");
  cmd_persist->add_option("--format", persist.format, "csv or json");
  cmd_persist->add_option("-o,--output", persist.output, "Output file (default stdout)");

  PreprocessOpts pre;
  auto* cmd_pre = app.add_subcommand("preprocess", "Graph surgery helpers");
  cmd_pre->add_option("input", pre.inputs, "Edge list file")->required()->expected(1);
  add_layer_options(cmd_pre, pre);
  cmd_pre
      ->add_option("--op", pre.op,
                   "longest, trim, trim-connected, components, or infer-layers")
      ->required();
  cmd_pre->add_option("--out-prefix", pre.out_prefix, "Prefix for written files")->required();
  cmd_pre->add_option("-o,--output", pre.output, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cmd_betti->parsed()) return run_betti(betti);
    if (cmd_compare->parsed()) return run_compare(compare);
    if (cmd_sample->parsed()) return run_sample(sample);
    if (cmd_persist->parsed()) return run_persist(persist);
    if (cmd_pre->parsed()) return run_preprocess(pre);
  } catch (const CliError& e) {
    std::fprintf(stderr, "pathhom: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pathhom: %s\n", e.what());
    return 1;
  }
  return 0;
}
