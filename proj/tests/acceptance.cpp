// Acceptance harness: one self-contained check per release criterion, each
// printed as a single [PASS]/[FAIL] line with its runtime.  The process exit
// code is the number of failed criteria, so the suite can run under ctest.
//
// The checks deliberately pit independent routes against each other: the
// layered recursion against the general-purpose engine, library subgraph
// extraction against brute-force walk enumeration, persistence curves
// against fresh recomputation, and the command-line tool against itself
// across reruns and thread counts.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "error.hpp"
#include "general.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "recursive.hpp"
#include "persistence.hpp"
#include "sample.hpp"
#include "testutil.hpp"

#ifndef PATHHOM_CLI_PATH
#error "PATHHOM_CLI_PATH must point at the command-line binary"
#endif

namespace {

using namespace pathhom;
using testutil::Rng;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// First failure wins; later requires are ignored so the reported reason is
// the root cause, not a cascade.
struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      why = msg;
    }
  }
};

int failures = 0;

void report(int index, const Check& c, double elapsed, const std::string& detail) {
  if (c.ok) {
    std::printf("[PASS] criterion %d (%.1fs): %s\n", index, elapsed, detail.c_str());
  } else {
    std::printf("[FAIL] criterion %d (%.1fs): %s\n", index, elapsed, c.why.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string at(const char* label, std::size_t i) {
  return std::string(label) + " #" + std::to_string(i);
}

// ---- shared corpus -----------------------------------------------------

// 215 seeded stratified digraphs: 140 with random layer sizes (at most 4)
// and depth (at most 3), plus 25 samples of the complete [3,3,3,3] graph at
// each of three densities.
std::vector<StratifiedDigraph> build_corpus() {
  std::vector<StratifiedDigraph> out;
  for (std::uint64_t i = 0; i < 140; ++i) {
    Rng rng(1000 + i);
    out.push_back(testutil::random_layered(rng));
  }
  for (int tenths : {3, 6, 9})
    for (std::uint64_t k = 0; k < 25; ++k) {
      SampleSpec spec;
      spec.sizes = {3, 3, 3, 3};
      spec.rho = Rational(tenths, 10);
      spec.seed = 777;
      spec.index = static_cast<std::uint64_t>(tenths) * 100 + k;
      out.push_back(sample_layered(spec));
    }
  return out;
}

// Rank of the coefficient matrix of a chain list over the union of their
// paths, by fraction-free elimination (independent of the library's own
// linear algebra).
std::size_t chain_rank(const std::vector<Chain>& chains) {
  std::set<Path> paths;
  for (const auto& c : chains)
    for (const auto& [p, q] : c.terms()) paths.insert(p);
  std::map<Path, std::size_t> row_of;
  for (const auto& p : paths) row_of.emplace(p, row_of.size());
  RationalMatrix m(paths.size(), chains.size());
  for (std::size_t j = 0; j < chains.size(); ++j)
    for (const auto& [p, q] : chains[j].terms()) m.at(row_of.at(p), j) = q;
  return testutil::reference_rank(m);
}

// ---- criterion 1: recursion agrees with the general engine -------------

void criterion_1(const std::vector<StratifiedDigraph>& corpus) {
  auto t0 = Clock::now();
  Check c;
  for (std::size_t i = 0; i < corpus.size() && c.ok; ++i) {
    const auto& g = corpus[i];
    long long rec = full_depth(g, false).betti;
    long long gen = betti_general(g.graph(), g.depth()).betti;
    c.require(rec == gen, at("corpus", i) + ": recursion " + std::to_string(rec) +
                              " vs general " + std::to_string(gen));
  }
  double dt = seconds_since(t0);
  c.require(dt < 120.0, "exceeded the 120s budget");
  report(1, c, dt, std::to_string(corpus.size()) + " graphs, both engines agree");
}

// ---- criterion 2: complete layered graphs ------------------------------

void criterion_2() {
  auto t0 = Clock::now();
  Check c;
  for (int m = 2; m <= 5 && c.ok; ++m)
    for (int n = 2; n <= 5 && c.ok; ++n) {
      long long want = static_cast<long long>(m - 1) * (n - 1);
      StratifiedDigraph g = complete_layered({m, n});
      long long rec = full_depth(g, false).betti;
      long long gen = betti_general(g.graph(), 1).betti;
      std::string id = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      c.require(rec == want, id + ": recursion gave " + std::to_string(rec));
      c.require(gen == want, id + ": general engine gave " + std::to_string(gen));
    }
  {
    StratifiedDigraph g = complete_layered({2, 2, 2});
    long long rec = full_depth(g, false).betti;
    long long gen = betti_general(g.graph(), 2).betti;
    c.require(rec == 1, "[2,2,2]: recursion gave " + std::to_string(rec));
    c.require(gen == 1, "[2,2,2]: general engine gave " + std::to_string(gen));
  }
  auto t1 = Clock::now();
  long long g1 = full_depth(complete_layered({10, 10}), false).betti;
  long long g2 = full_depth(complete_layered({10, 10, 10}), false).betti;
  double large = seconds_since(t1);
  c.require(g1 == 81, "[10,10]: recursion gave " + std::to_string(g1));
  c.require(g2 == 729, "[10,10,10]: recursion gave " + std::to_string(g2));
  c.require(large < 10.0, "[10,10] and [10,10,10] exceeded the 10s budget");
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "K_{m,n} grid plus [2,2,2] cross-checked; 81 and 729 in %.1fs", large);
  report(2, c, seconds_since(t0), detail);
}

// ---- criterion 3: tracked bases are sound ------------------------------

void criterion_3(const std::vector<StratifiedDigraph>& corpus) {
  auto t0 = Clock::now();
  Check c;
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < corpus.size() && c.ok; ++i) {
    const auto& g = corpus[i];
    HomologyResult tracked = full_depth(g, true);
    long long untracked = full_depth(g, false).betti;
    c.require(tracked.basis.has_value(), at("corpus", i) + ": no basis returned");
    if (!c.ok) break;
    const auto& basis = *tracked.basis;
    c.require(static_cast<long long>(basis.size()) == tracked.betti,
              at("corpus", i) + ": basis size differs from betti");
    c.require(tracked.betti == untracked,
              at("corpus", i) + ": tracked and untracked betti differ");
    for (const auto& chain : basis) {
      c.require(chain.degree() == g.depth(), at("corpus", i) + ": wrong degree");
      c.require(boundary(chain).is_zero(), at("corpus", i) + ": nonzero boundary");
      c.require(allowed_part(chain, g.graph()) == chain,
                at("corpus", i) + ": disallowed term in a representative");
    }
    c.require(chain_rank(basis) == basis.size(),
              at("corpus", i) + ": representatives are linearly dependent");
    cycles += basis.size();
  }
  report(3, c, seconds_since(t0),
         std::to_string(cycles) + " representative cycles verified");
}

// ---- criterion 4: longest-path subgraph against brute force ------------

void criterion_4() {
  auto t0 = Clock::now();
  Check c;
  std::size_t with_edges = 0;
  for (std::uint64_t i = 0; i < 200 && c.ok; ++i) {
    Rng rng(4000 + i);
    Digraph g = testutil::random_dag(rng);
    int longest = testutil::walk_longest(g);
    if (longest == 0) {
      bool threw = false;
      try {
        extract_longest_subgraph(g);
      } catch (const Error& e) {
        threw = e.code() == Code::DepthZero;
      }
      c.require(threw, at("dag", i) + ": edgeless case did not report depth zero");
      continue;
    }
    ++with_edges;
    StratifiedDigraph sub = extract_longest_subgraph(g);
    testutil::LongestSupport want = testutil::longest_support(g);
    std::set<VertexId> verts(sub.graph().vertices().begin(), sub.graph().vertices().end());
    std::set<EdgeKey> edges(sub.graph().edges().begin(), sub.graph().edges().end());
    c.require(verts == want.vertices, at("dag", i) + ": vertex sets differ");
    c.require(edges == want.edges, at("dag", i) + ": edge sets differ");
    c.require(sub.depth() == longest, at("dag", i) + ": depth differs");
    if (!c.ok) break;
    // A vertex occupies the same position in every longest walk through it,
    // and that position must be its layer.
    auto maximal_walks = testutil::walk_paths(g, longest);
    for (const auto& walk : maximal_walks)
      for (std::size_t s = 0; s < walk.size(); ++s)
        c.require(sub.layer_of(walk[s]) == static_cast<int>(s),
                  at("dag", i) + ": layer disagrees with walk position");
    // Every walk inside the subgraph extends to a longest walk: it shows up
    // as a contiguous slice of one.
    std::set<Path> slices;
    for (const auto& walk : maximal_walks)
      for (std::size_t a = 0; a < walk.size(); ++a)
        for (std::size_t b = a; b < walk.size(); ++b)
          slices.insert(Path(walk.begin() + static_cast<std::ptrdiff_t>(a),
                             walk.begin() + static_cast<std::ptrdiff_t>(b + 1)));
    for (int l = 0; l <= longest && c.ok; ++l)
      for (const auto& walk : testutil::walk_paths(sub.graph(), l))
        c.require(slices.count(walk) > 0,
                  at("dag", i) + ": a subgraph walk extends to no longest walk");
  }
  double dt = seconds_since(t0);
  c.require(dt < 60.0, "exceeded the 60s budget");
  report(4, c, dt, "200 random DAGs, " + std::to_string(with_edges) + " nontrivial");
}

// ---- criterion 5: trimming keeps the answer ----------------------------

void criterion_5(const std::vector<StratifiedDigraph>& corpus) {
  auto t0 = Clock::now();
  Check c;
  for (std::size_t i = 0; i < corpus.size() && c.ok; ++i) {
    const auto& g = corpus[i];
    long long base = full_depth(g, false).betti;
    TrimResult trims[2] = {trim_removable(g), trim_connected_count(g)};
    for (const TrimResult& t : trims) {
      long long after = t.trivial_full_depth ? 0 : full_depth(t.graph, false).betti;
      c.require(after == base, at("corpus", i) + ": trimming changed the betti number from " +
                                   std::to_string(base) + " to " + std::to_string(after));
    }
  }
  report(5, c, seconds_since(t0), "both trims preserve all " +
                                      std::to_string(corpus.size()) + " betti numbers");
}

// ---- criterion 6: additivity over disjoint unions ----------------------

void criterion_6(const std::vector<StratifiedDigraph>& corpus) {
  auto t0 = Clock::now();
  Check c;
  Rng rng(6000);
  for (int u = 0; u < 60 && c.ok; ++u) {
    int pieces = rng.range(2, 3);
    std::vector<const StratifiedDigraph*> parts;
    for (int k = 0; k < pieces; ++k)
      parts.push_back(&corpus[rng.below(corpus.size())]);
    int depth = 0;
    for (const auto* p : parts) depth = std::max(depth, p->depth());
    // Disjoint union with every piece aligned at layer 0, names prefixed to
    // keep the pieces apart.
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::vector<std::string>> layer_names(static_cast<std::size_t>(depth) + 1);
    long long want = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const StratifiedDigraph& part = *parts[k];
      std::string prefix = "g" + std::to_string(k) + ":";
      for (VertexId v : part.graph().vertices()) names.push_back(prefix + part.graph().name(v));
      for (const auto& [a, b] : part.graph().edges())
        edges.emplace_back(prefix + part.graph().name(a), prefix + part.graph().name(b));
      for (std::size_t l = 0; l < part.layers().size(); ++l)
        for (VertexId v : part.layers()[l])
          layer_names[l].push_back(prefix + part.graph().name(v));
      if (part.depth() == depth) want += full_depth(part, false).betti;
    }
    StratifiedDigraph whole = testutil::layered(Digraph::build(names, edges), layer_names);
    long long got = full_depth(whole, false).betti;
    c.require(got == want, at("union", static_cast<std::size_t>(u)) + ": union gave " +
                               std::to_string(got) + ", parts sum to " + std::to_string(want));
  }
  report(6, c, seconds_since(t0), "60 disjoint unions, shallow pieces contribute zero");
}

// ---- criterion 7: persistence against fresh recomputation --------------

void criterion_7() {
  auto t0 = Clock::now();
  Check c;
  for (std::uint64_t seed = 0; seed < 10 && c.ok; ++seed) {
    SampleSpec spec;
    spec.sizes = {2, 3, 3, 2};
    spec.rho = Rational(1);
    spec.seed = 7000 + seed;
    spec.uniform_weights = true;
    StratifiedDigraph g = sample_layered(spec);
    PersistenceCurve curve = persistence_curve(g, true);
    std::string id = at("curve", seed);
    c.require(curve.baseline.has_value(), id + ": no baseline");
    c.require(!curve.points.empty(), id + ": empty curve");
    if (!c.ok) break;
    long long prev = curve.baseline->betti;
    for (const auto& pt : curve.points) {
      c.require(pt.betti <= prev, id + ": curve increased");
      prev = pt.betti;
    }
    c.require(curve.baseline->betti == betti_general(g.graph(), g.depth()).betti,
              id + ": baseline differs from a fresh computation");
    Rng rng(9100 + seed);
    for (int pick = 0; pick < 3; ++pick) {
      std::size_t j = rng.below(curve.points.size());
      StratifiedDigraph sub = subgraph_above(g, curve.points[j].threshold);
      long long fresh = betti_general(sub.graph(), g.depth()).betti;
      c.require(curve.points[j].betti == fresh,
                id + ": point " + std::to_string(j) + " disagrees with the general engine");
    }
  }
  double dt = seconds_since(t0);
  c.require(dt < 60.0, "exceeded the 60s budget");
  report(7, c, dt, "10 weighted [2,3,3,2] curves, spot checks agree");
}

// ---- criterion 8: the recursion is faster ------------------------------

void criterion_8() {
  auto t0 = Clock::now();
  Check c;
  std::vector<StratifiedDigraph> graphs;
  for (std::uint64_t i = 0; i < 50; ++i) {
    SampleSpec spec;
    spec.sizes = {5, 8, 8, 8};
    spec.rho = Rational(1, 2);
    spec.seed = 2026;
    spec.index = i;
    graphs.push_back(sample_layered(spec));
  }
  std::vector<long long> rec(graphs.size()), gen(graphs.size());
  auto t1 = Clock::now();
  for (std::size_t i = 0; i < graphs.size(); ++i)
    rec[i] = full_depth(graphs[i], false).betti;
  double rec_s = seconds_since(t1);
  auto t2 = Clock::now();
  for (std::size_t i = 0; i < graphs.size(); ++i)
    gen[i] = betti_general(graphs[i].graph(), graphs[i].depth()).betti;
  double gen_s = seconds_since(t2);
  c.require(rec == gen, "the engines disagree on some sample");
  double ratio = gen_s / std::max(rec_s, 1e-9);
  char buf[160];
  std::snprintf(buf, sizeof buf, "recursion %.2fs vs general %.2fs, ratio %.1fx", rec_s,
                gen_s, ratio);
  c.require(ratio >= 5.0, std::string("speedup below 5x: ") + buf);
  report(8, c, seconds_since(t0), buf);
}

// ---- criterion 9: algebraic properties in bulk -------------------------

void criterion_9() {
  auto t0 = Clock::now();
  Check c;
  Rng rng(9000);

  // Boundary of a boundary vanishes.
  for (int i = 0; i < 1000 && c.ok; ++i) {
    Chain chain = testutil::random_chain(rng, rng.range(1, 5), 8, rng.range(1, 6));
    c.require(boundary(boundary(chain)).is_zero(), "a double boundary survived");
  }

  // Boundary of a join follows the product rule.
  for (int i = 0; i < 1000 && c.ok; ++i) {
    int p = rng.range(-1, 3), q = rng.range(-1, 3);
    Chain a = p < 0 ? unit_chain(rng.rational(5))
                    : testutil::random_chain(rng, p, 6, rng.range(1, 4));
    Chain b = q < 0 ? unit_chain(rng.rational(5))
                    : testutil::random_chain(rng, q, 6, rng.range(1, 4));
    Rational sign = (p % 2 == 0) ? -1 : 1;
    Chain want = join(boundary(a), b) + sign * join(a, boundary(b));
    c.require(boundary(join(a, b)) == want, "the product rule failed");
  }

  // Consecutive transported boundary matrices multiply to zero.
  int products = 0;
  for (std::uint64_t i = 0; products < 1000 && c.ok; ++i) {
    Rng lr(9200 + i);
    Digraph g =
        i % 2 == 0 ? testutil::random_layered(lr).graph() : testutil::random_dag(lr, 7);
    GeneralTrace trace = general_trace(g, 2);
    for (std::size_t q = 0; q + 1 < trace.b.size(); ++q) {
      RationalMatrix prod = trace.b[q] * trace.b[q + 1];
      RationalMatrix zero(prod.rows(), prod.cols());
      c.require(prod == zero, "consecutive boundary matrices do not compose to zero");
      ++products;
    }
  }
  c.require(products >= 1000, "not enough matrix products checked");

  // Rank plus kernel dimension covers every column.
  for (int i = 0; i < 1000 && c.ok; ++i) {
    RationalMatrix m = testutil::random_matrix(rng, rng.below(7), rng.below(7));
    c.require(rank(m) + null_space_basis(m).cols() == m.cols(),
              "rank and kernel dimension do not add up");
  }

  // Allowed and disallowed parts split every chain.
  for (std::uint64_t i = 0; i < 1000 && c.ok; ++i) {
    Rng lr(9300 + i);
    Digraph g = testutil::random_dag(lr, 8);
    Chain chain = testutil::random_chain(
        lr, lr.range(1, 3), static_cast<int>(g.vertex_count()), lr.range(1, 5));
    Chain good = allowed_part(chain, g), bad = disallowed_part(chain, g);
    c.require(good + bad == chain, "the split does not add back up");
    for (const auto& [p, qq] : good.terms())
      c.require(path_allowed(g, p), "an allowed part holds a disallowed path");
    for (const auto& [p, qq] : bad.terms())
      c.require(!path_allowed(g, p), "a disallowed part holds an allowed path");
  }

  report(9, c, seconds_since(t0), "5000 property instances");
}

// ---- criterion 10: byte-identical reruns of the tool -------------------

struct Cli {
  std::filesystem::path dir;
  std::string exe = PATHHOM_CLI_PATH;

  int run(const std::string& args) const {
    std::string cmd = "'" + exe + "' " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

void criterion_10() {
  auto t0 = Clock::now();
  Check c;
  Cli cli;
  cli.dir = std::filesystem::temp_directory_path() /
            ("pathhom_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(cli.dir);

  std::string sample_args = "sample --sizes 3,3,3 --rho 1 --seed 5 --count 6 "
                            "--weights uniform --out-dir '" +
                            cli.dir.string() + "' --prefix s";
  std::vector<std::string> sample_files = {"s.layers"};
  for (int i = 0; i < 6; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "s_%04d.edges", i);
    sample_files.push_back(buf);
  }
  std::string inputs;
  for (int i = 1; i <= 6; ++i) inputs += " '" + cli.path(sample_files[static_cast<std::size_t>(i)]) + "'";

  // Sampling: rerun with a different thread count, expect identical bytes.
  c.require(cli.run(sample_args + " --jobs 1 -o '" + cli.path("rep1.json") + "'") == 0,
            "sample run failed");
  std::map<std::string, std::string> first;
  if (c.ok)
    for (const auto& f : sample_files) first[f] = read_file(cli.path(f));
  c.require(cli.run(sample_args + " --jobs 4 -o '" + cli.path("rep2.json") + "'") == 0,
            "parallel sample run failed");
  if (c.ok) {
    for (const auto& f : sample_files)
      c.require(read_file(cli.path(f)) == first.at(f), "sample file changed across reruns: " + f);
    c.require(read_file(cli.path("rep1.json")) == read_file(cli.path("rep2.json")),
              "sample reports differ across thread counts");
  }

  // Betti runs: two invocations, identical reports.
  std::string betti_args = "betti --dim full --track" + inputs;
  c.require(cli.run(betti_args + " -o '" + cli.path("b1.json") + "'") == 0, "betti run failed");
  c.require(cli.run(betti_args + " -o '" + cli.path("b2.json") + "'") == 0, "betti rerun failed");
  if (c.ok)
    c.require(read_file(cli.path("b1.json")) == read_file(cli.path("b2.json")),
              "betti reports differ across reruns");

  // Engine comparison: rerun at the same and at another thread count.
  std::string compare_args = "compare" + inputs;
  c.require(cli.run(compare_args + " --jobs 4 -o '" + cli.path("c1.json") + "'") == 0,
            "compare run failed");
  c.require(cli.run(compare_args + " --jobs 4 -o '" + cli.path("c2.json") + "'") == 0,
            "compare rerun failed");
  c.require(cli.run(compare_args + " --jobs 1 -o '" + cli.path("c0.json") + "'") == 0,
            "serial compare run failed");
  if (c.ok) {
    c.require(read_file(cli.path("c1.json")) == read_file(cli.path("c2.json")),
              "compare reports differ across reruns");
    Json four = Json::parse(read_file(cli.path("c1.json")));
    Json one = Json::parse(read_file(cli.path("c0.json")));
    four["config"].erase("jobs");
    one["config"].erase("jobs");
    c.require(four == one, "thread count changed the comparison results");
  }

  // The hidden self-test switch must trip the mismatch exit code.
  c.require(cli.run(compare_args + " --self-test-corrupt") == 5,
            "a forced mismatch did not exit with code 5");

  // Persistence: identical curve files across reruns.
  std::string persist_args = "persist '" + cli.path(sample_files[1]) + "' --layers '" +
                             cli.path("s.layers") + "' --baseline --format csv";
  c.require(cli.run(persist_args + " -o '" + cli.path("p1.csv") + "'") == 0, "persist run failed");
  c.require(cli.run(persist_args + " -o '" + cli.path("p2.csv") + "'") == 0, "persist rerun failed");
  if (c.ok)
    c.require(read_file(cli.path("p1.csv")) == read_file(cli.path("p2.csv")),
              "persistence curves differ across reruns");

  std::error_code ignore;
  std::filesystem::remove_all(cli.dir, ignore);
  report(10, c, seconds_since(t0), "sample, betti, compare, persist all byte-stable");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  std::vector<StratifiedDigraph> corpus = build_corpus();
  criterion_1(corpus);
  criterion_2();
  criterion_3(corpus);
  criterion_4();
  criterion_5(corpus);
  criterion_6(corpus);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s: %d of 10 criteria passed (%.1fs total)\n",
              failures == 0 ? "OK" : "FAILED", 10 - failures, seconds_since(t0));
  return failures;
}
