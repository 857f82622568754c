#include "sdepth/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "sdepth/criteria.hpp"
#include "sdepth/solver.hpp"
#include "sdepth/text_format.hpp"

namespace sdepth {

namespace {

void check_scale(int n, int k, bool long_running) {
  if (n < 1 || n > 7 || k < 1 || k > n)
    throw std::invalid_argument("census scale: need 1 <= k <= n <= 7");
  if (n == 7 && (k == 3 || k == 4) && !long_running)
    throw std::invalid_argument(
        "census scale: n=7 with k=3,4 runs for hours; pass the long-running flag");
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Antichain UniformEnumeration::expand(std::uint64_t eset) const {
  std::vector<Mask> members;
  while (eset) {
    members.push_back(edges[std::countr_zero(eset)]);
    eset &= eset - 1;
  }
  return make_antichain(n, std::move(members));
}

std::vector<std::uint64_t> enumerate_masks_exhaustive(int n, int k, int jobs) {
  const UniformTables& t = uniform_tables(n, k);
  const std::size_t bits = t.edges.size();
  const std::uint64_t total = std::uint64_t{1} << bits;
  const int shards = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> found(shards);
  parallel_for(shards, jobs, [&](std::size_t shard) {
    const std::uint64_t lo = 1 + (total - 1) * shard / shards;
    const std::uint64_t hi = (total - 1) * (shard + 1) / shards;
    for (std::uint64_t m = lo; m <= hi; ++m)
      if (edgeset_is_canonical(t, m)) found[shard].push_back(m);
  });
  std::vector<std::uint64_t> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<std::uint64_t> enumerate_masks_augmented(int n, int k, int jobs) {
  const UniformTables& t = uniform_tables(n, k);
  const std::size_t bits = t.edges.size();
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> level{1};  // single lowest edge is canonical
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<std::unordered_set<std::uint64_t>> children(
        std::max(1, jobs));
    std::atomic<std::size_t> counter{0};
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      const std::size_t slot = counter.fetch_add(1) % children.size();
      auto& sink = children[slot];
      const std::uint64_t parent = level[i];
      for (std::size_t e = 0; e < bits; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (parent & bit) continue;
        sink.insert(edgeset_canonical(t, parent | bit));
      }
    });
    std::unordered_set<std::uint64_t> merged;
    for (auto& c : children) merged.insert(c.begin(), c.end());
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
  }
  std::sort(out.begin(), out.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int ca = std::popcount(a), cb = std::popcount(b);
              return ca != cb ? ca < cb : a < b;
            });
  return out;
}

UniformEnumeration enumerate_uniform(int n, int k, int jobs) {
  if (n < 1 || n > 7 || k < 1 || k > n)
    throw std::invalid_argument("enumerate_uniform: need 1 <= k <= n <= 7");
  const UniformTables& t = uniform_tables(n, k);
  UniformEnumeration e;
  e.n = n;
  e.k = k;
  e.edges = t.edges;
  e.classes = t.edges.size() <= 22 ? enumerate_masks_exhaustive(n, k, jobs)
                                   : enumerate_masks_augmented(n, k, jobs);
  return e;
}

const char* category_name(Category c) {
  switch (c) {
    case Category::bad_degree: return "bad_degree";
    case Category::fail_scc: return "fail_scc";
    case Category::splits: return "splits";
    case Category::sdepth_ok: return "sdepth_ok";
    case Category::counterexample: return "counterexample";
  }
  return "?";
}

ClassificationRecord classify(const Antichain& facets, int k, SplitMode mode,
                              SdepthCache* cache) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationRecord rec;
  rec.canon = canonical_form(facets);
  rec.n = facets.n;
  rec.k = k;
  SdepthCache local;
  SdepthCache& c = cache ? *cache : local;

  const ReductionReport deg = bad_degree(facets);
  if (deg.bad_degree) {
    rec.category = Category::bad_degree;
    rec.detail = deg.uncovered_vertex
                     ? "uncovered=" + std::to_string(*deg.uncovered_vertex)
                     : "common=" + std::to_string(*deg.common_vertex);
  } else if (const SccResult scc = strong_cc(facets); !scc.pass) {
    rec.category = Category::fail_scc;
    rec.detail = format_set(scc.witness, facets.n);
  } else if (const auto x = splits(facets, mode, &c)) {
    rec.category = Category::splits;
    rec.split_vertex = x;
  } else {
    auto decided = decide_sdepth_at_least(complement_upset(facets), k + 1);
    if (decided.witness) {
      rec.category = Category::sdepth_ok;
      rec.witness = std::move(decided.witness);
    } else {
      rec.category = Category::counterexample;
    }
  }
  rec.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rec;
}

namespace {

std::string record_json(const ClassificationRecord& rec) {
  std::string s = "{\"canon\":\"" + format_antichain(rec.canon) + "\"";
  s += ",\"category\":\"" + std::string(category_name(rec.category)) + "\"";
  if (rec.split_vertex) s += ",\"witness\":\"x=" + std::to_string(*rec.split_vertex) + "\"";
  else if (rec.witness) s += ",\"witness\":\"" + format_partition(*rec.witness, rec.n) + "\"";
  else if (!rec.detail.empty()) s += ",\"witness\":\"" + rec.detail + "\"";
  return s + "}";
}

}  // namespace

CensusReport run_census(int n, int k, const CensusOptions& opts,
                        SdepthCache* cache) {
  check_scale(n, k, opts.long_running);
  SdepthCache local;
  SdepthCache& c = cache ? *cache : local;

  const UniformEnumeration e = enumerate_uniform(n, k, opts.jobs);
  CensusReport report;
  report.n = n;
  report.k = k;
  report.mode = opts.mode;
  report.include_empty = opts.include_empty;

  std::ofstream jsonl;
  std::mutex io_mu;
  const bool streaming = !opts.jsonl_path.empty() && !opts.sort_records;
  if (!opts.jsonl_path.empty()) {
    jsonl.open(opts.jsonl_path);
    if (!jsonl) throw std::runtime_error("cannot open " + opts.jsonl_path);
  }
  std::vector<std::string> lines(opts.sort_records ? e.classes.size() : 0);

  if (opts.include_empty) {
    // the empty edge set: every vertex uncovered
    ++report.total;
    ++report.bad_degree;
    if (jsonl.is_open())
      jsonl << "{\"canon\":\"\",\"category\":\"bad_degree\",\"witness\":\"uncovered=1\"}\n";
  }

  std::atomic<long long> counts[5] = {};
  parallel_for(e.classes.size(), opts.jobs, [&](std::size_t i) {
    const ClassificationRecord rec = classify(e.expand(e.classes[i]), k, opts.mode, &c);
    counts[static_cast<int>(rec.category)].fetch_add(1);
    if (jsonl.is_open()) {
      const std::string line = record_json(rec);
      if (streaming) {
        std::lock_guard<std::mutex> lock(io_mu);
        jsonl << line << "\n";
      } else {
        lines[i] = line;
      }
    }
  });
  if (opts.sort_records && jsonl.is_open())
    for (const auto& line : lines) jsonl << line << "\n";

  report.total += static_cast<long long>(e.classes.size());
  report.bad_degree += counts[static_cast<int>(Category::bad_degree)].load();
  report.fail_scc = counts[static_cast<int>(Category::fail_scc)].load();
  report.splits = counts[static_cast<int>(Category::splits)].load();
  report.sdepth_ok = counts[static_cast<int>(Category::sdepth_ok)].load();
  report.counterexamples = counts[static_cast<int>(Category::counterexample)].load();
  return report;
}

GapReport gap_census(int n, int k, const CensusOptions& opts, SdepthCache* cache) {
  check_scale(n, k, opts.long_running);
  SdepthCache local;
  SdepthCache& c = cache ? *cache : local;

  const UniformEnumeration e = enumerate_uniform(n, k, opts.jobs);
  std::vector<std::pair<int, int>> results(e.classes.size());
  parallel_for(e.classes.size(), opts.jobs, [&](std::size_t i) {
    const Antichain a = e.expand(e.classes[i]);
    results[i] = {c.down_set_sdepth(a), c.ideal_sdepth(a)};
  });

  GapReport gap;
  gap.n = n;
  gap.k = k;
  for (const auto& qr : results) {
    ++gap.cells[qr];
    ++gap.total;
  }
  return gap;
}

std::string gap_to_csv(const GapReport& gap) {
  std::string csv = "sdepth_quotient,sdepth_ideal,count\n";
  for (const auto& [cell, count] : gap.cells)
    csv += std::to_string(cell.first) + "," + std::to_string(cell.second) + "," +
           std::to_string(count) + "\n";
  return csv;
}

}  // namespace sdepth
