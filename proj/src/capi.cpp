#include "stanleydepth.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "sdepth/canonical.hpp"
#include "sdepth/core.hpp"
#include "sdepth/criteria.hpp"
#include "sdepth/enumeration.hpp"
#include "sdepth/multigraded.hpp"
#include "sdepth/oracle.hpp"
#include "sdepth/reductions.hpp"
#include "sdepth/solver.hpp"
#include "sdepth/tables.hpp"
#include "sdepth/text_format.hpp"

using nlohmann::json;

struct sd_antichain {
  sdepth::Antichain value;
};
struct sd_family {
  sdepth::SetFamily value;
};
struct sd_partition {
  sdepth::IntervalPartition value;
  int ground = 0;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sdepth::ParseError& e) {
    g_last_error = e.what();
    return SD_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    const std::string what = e.what();
    return what.find("scale") != std::string::npos ||
                   what.find("guard") != std::string::npos
               ? SD_ERR_SCALE
               : SD_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SD_ERR_INTERNAL;
  }
}

json trace_json(const std::vector<sdepth::FVector>& trace) {
  json arr = json::array();
  for (const auto& f : trace) arr.push_back(f.counts);
  return arr;
}

}  // namespace

extern "C" {

const char* sd_status_name(sd_status status) {
  switch (status) {
    case SD_OK: return "ok";
    case SD_IMPOSSIBLE: return "impossible";
    case SD_MISMATCH: return "mismatch";
    case SD_ERR_PARSE: return "parse error";
    case SD_ERR_INVALID: return "invalid argument";
    case SD_ERR_SCALE: return "scale guard";
    case SD_ERR_IO: return "io error";
    case SD_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* sd_last_error(void) { return g_last_error.c_str(); }

void sd_string_free(char* s) { std::free(s); }

sd_status sd_antichain_parse(const char* text, int ground_n, sd_antichain** out) {
  return guarded([&]() -> sd_status {
    auto a = sdepth::parse_antichain(text ? text : "", ground_n);
    *out = new sd_antichain{std::move(a)};
    return SD_OK;
  });
}

void sd_antichain_free(sd_antichain* a) { delete a; }

int sd_antichain_ground(const sd_antichain* a) { return a->value.n; }

int sd_antichain_count(const sd_antichain* a) {
  return static_cast<int>(a->value.members.size());
}

sd_status sd_antichain_format(const sd_antichain* a, char** out) {
  return guarded([&]() -> sd_status {
    *out = dup_string(sdepth::format_antichain(a->value));
    return SD_OK;
  });
}

sd_status sd_down_closure(const sd_antichain* a, sd_family** out) {
  return guarded([&]() -> sd_status {
    *out = new sd_family{sdepth::down_closure(a->value)};
    return SD_OK;
  });
}

sd_status sd_complement_upset(const sd_antichain* a, sd_family** out) {
  return guarded([&]() -> sd_status {
    *out = new sd_family{sdepth::complement_upset(a->value)};
    return SD_OK;
  });
}

void sd_family_free(sd_family* f) { delete f; }

long long sd_family_count(const sd_family* f) {
  return static_cast<long long>(f->value.size());
}

sd_status sd_sdepth(const sd_family* f, int* value, unsigned long long* nodes,
                    int* flagged_empty, sd_partition** witness) {
  return guarded([&]() -> sd_status {
    auto ans = sdepth::sdepth(f->value);
    if (value) *value = ans.value;
    if (nodes) *nodes = ans.node_count;
    if (flagged_empty) *flagged_empty = ans.empty_family ? 1 : 0;
    if (witness)
      *witness = new sd_partition{std::move(ans.witness), f->value.ground()};
    return SD_OK;
  });
}

sd_status sd_decide_at_least(const sd_family* f, int k, sd_partition** witness) {
  return guarded([&]() -> sd_status {
    auto r = sdepth::decide_sdepth_at_least(f->value, k);
    if (!r.witness) return SD_IMPOSSIBLE;
    if (witness)
      *witness = new sd_partition{std::move(*r.witness), f->value.ground()};
    return SD_OK;
  });
}

sd_status sd_sdepth_naive(const sd_family* f, int* value) {
  return guarded([&]() -> sd_status {
    *value = sdepth::naive_sdepth(f->value);
    return SD_OK;
  });
}

void sd_partition_free(sd_partition* p) { delete p; }

int sd_partition_size(const sd_partition* p) {
  return static_cast<int>(p->value.intervals.size());
}

int sd_partition_min_top(const sd_partition* p) {
  return p->value.min_top_size().value_or(p->ground);
}

sd_status sd_partition_format(const sd_partition* p, char** out) {
  return guarded([&]() -> sd_status {
    *out = dup_string(sdepth::format_partition(p->value, p->ground));
    return SD_OK;
  });
}

sd_status sd_scc_report(const sd_antichain* a, char** out) {
  return guarded([&]() -> sd_status {
    const auto& facets = a->value;
    if (facets.empty()) {
      g_last_error = "strong criterion needs a nonempty antichain";
      return SD_ERR_INVALID;
    }
    const int k = facets.min_facet_size();
    const auto f = sdepth::f_vector(sdepth::down_closure(facets), k);
    const auto plain = sdepth::combinatorial_criterion(f, k);
    const auto scc = sdepth::strong_cc(facets);
    json doc;
    doc["n"] = facets.n;
    doc["k"] = k;
    doc["f_vector"] = f.counts;
    doc["criterion"] = {{"pass", plain.pass}, {"trace", trace_json(plain.trace)}};
    if (!plain.pass) doc["criterion"]["fail_index"] = plain.fail_index;
    doc["scc"]["pass"] = scc.pass;
    if (!scc.pass) {
      doc["scc"]["witness"] = sdepth::format_set(scc.witness, facets.n);
      const auto lk = sdepth::link(facets, scc.witness);
      const auto lf = sdepth::f_vector(sdepth::down_closure(lk), k - sdepth::set_size(scc.witness));
      const auto lres = sdepth::combinatorial_criterion(lf, k - sdepth::set_size(scc.witness));
      doc["scc"]["witness_link"] = sdepth::format_antichain(lk);
      doc["scc"]["witness_trace"] = trace_json(lres.trace);
    }
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_reduce_report(const sd_antichain* a, char** out) {
  return guarded([&]() -> sd_status {
    if (a->value.empty()) {
      g_last_error = "reduce needs a nonempty antichain";
      return SD_ERR_INVALID;
    }
    const auto trace = sdepth::reduce_to_fixpoint(a->value);
    json doc;
    doc["input"] = sdepth::format_antichain(a->value);
    doc["steps"] = json::array();
    for (const auto& step : trace.steps)
      doc["steps"].push_back({{"rule", step.rule},
                              {"detail", step.detail},
                              {"result", sdepth::format_antichain(step.result)},
                              {"n", step.result.n}});
    doc["final"] = sdepth::format_antichain(trace.result);
    doc["final_n"] = trace.result.n;
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_splits_report(const sd_antichain* a, const char* mode, char** out) {
  return guarded([&]() -> sd_status {
    const auto m = sdepth::split_mode_from(mode ? mode : "exact");
    if (!m) {
      g_last_error = "split mode must be 'exact' or 'criterion'";
      return SD_ERR_INVALID;
    }
    if (a->value.empty()) {
      g_last_error = "splits needs a nonempty antichain";
      return SD_ERR_INVALID;
    }
    sdepth::SdepthCache cache;
    json doc;
    doc["n"] = a->value.n;
    doc["mode"] = sdepth::split_mode_name(*m);
    doc["vertices"] = json::array();
    std::optional<int> first;
    for (int x = 1; x <= a->value.n; ++x) {
      const bool s = sdepth::splits_over(a->value, x, *m, &cache);
      if (s && !first) first = x;
      doc["vertices"].push_back({{"x", x}, {"splits", s}});
    }
    if (first) doc["splits_over"] = *first;
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_grid_report(const char* gens, const char* g, const char* j,
                         const char* side, int construct_n3, char** out) {
  return guarded([&]() -> sd_status {
    const auto gens_i = sdepth::parse_multidegrees(gens ? gens : "");
    if (gens_i.empty()) {
      g_last_error = "no generators given";
      return SD_ERR_INVALID;
    }
    for (const auto& t : gens_i)
      if (t.size() != gens_i[0].size()) {
        g_last_error = "generator tuples of mixed lengths";
        return SD_ERR_INVALID;
      }
    const auto gens_j = sdepth::parse_multidegrees(j ? j : "");
    sdepth::Multidegree bound;
    if (g && *g) {
      const auto parsed = sdepth::parse_multidegrees(g);
      if (parsed.size() != 1 || parsed[0].size() != gens_i[0].size()) {
        g_last_error = "bound must be a single tuple matching the generators";
        return SD_ERR_INVALID;
      }
      bound = parsed[0];
    } else {
      bound = sdepth::default_bound(gens_i, gens_j);
    }
    const std::string side_s = side ? side : "ideal";
    json doc;
    doc["g"] = bound;
    doc["n"] = bound.size();
    doc["side"] = side_s;

    if (construct_n3) {
      const auto c = sdepth::n3_construct(gens_i, bound);
      json part = json::array();
      for (const auto& iv : c.partition.intervals)
        part.push_back({{"lower", iv.lower}, {"upper", iv.upper}});
      json maxima = json::array();
      for (const auto& m : c.quotient_maximals) maxima.push_back(m);
      doc["construction"] = {{"intervals", part},
                             {"sdepth", c.partition.sdepth},
                             {"alpha_m", c.alpha_m},
                             {"quotient_maximals", maxima},
                             {"trace", c.trace}};
      *out = dup_string(doc.dump());
      return SD_OK;
    }

    sdepth::GridPoset poset;
    if (side_s == "ideal") {
      poset = sdepth::build_quotient_poset(gens_i, gens_j, bound);
    } else if (side_s == "quotient") {
      poset = sdepth::build_quotient_poset(
          {sdepth::Multidegree(bound.size(), 0)}, gens_i, bound);
    } else {
      g_last_error = "side must be 'ideal' or 'quotient'";
      return SD_ERR_INVALID;
    }
    const auto ans = sdepth::grid_sdepth(poset);
    doc["points"] = poset.points.size();
    doc["sdepth"] = ans.value;
    doc["empty_poset"] = ans.empty_poset;
    json part = json::array();
    for (const auto& iv : ans.witness.intervals)
      part.push_back({{"lower", iv.lower}, {"upper", iv.upper}});
    doc["witness"] = part;
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_census_report(int n, int k, int jobs, int long_running,
                           int include_empty, const char* mode,
                           const char* jsonl_path, int sort_records,
                           char** out) {
  return guarded([&]() -> sd_status {
    const auto m = sdepth::split_mode_from(mode ? mode : "exact");
    if (!m) {
      g_last_error = "split mode must be 'exact' or 'criterion'";
      return SD_ERR_INVALID;
    }
    sdepth::CensusOptions opts;
    opts.jobs = jobs;
    opts.long_running = long_running != 0;
    opts.include_empty = include_empty != 0;
    opts.mode = *m;
    opts.jsonl_path = jsonl_path ? jsonl_path : "";
    opts.sort_records = sort_records != 0;
    const auto report = sdepth::run_census(n, k, opts);
    json doc = {{"n", report.n},
                {"k", report.k},
                {"mode", sdepth::split_mode_name(report.mode)},
                {"include_empty", report.include_empty},
                {"total", report.total},
                {"bad_degree", report.bad_degree},
                {"fail_scc", report.fail_scc},
                {"splits", report.splits},
                {"sdepth_ok", report.sdepth_ok},
                {"counterexamples", report.counterexamples}};
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_gap_report(int n, int k, int jobs, int long_running,
                        const char* csv_path, char** out) {
  return guarded([&]() -> sd_status {
    sdepth::CensusOptions opts;
    opts.jobs = jobs;
    opts.long_running = long_running != 0;
    const auto gap = sdepth::gap_census(n, k, opts);
    if (csv_path && *csv_path) {
      std::FILE* f = std::fopen(csv_path, "w");
      if (!f) {
        g_last_error = std::string("cannot open ") + csv_path;
        return SD_ERR_IO;
      }
      const std::string csv = sdepth::gap_to_csv(gap);
      std::fwrite(csv.data(), 1, csv.size(), f);
      std::fclose(f);
    }
    json cells = json::array();
    for (const auto& [qr, count] : gap.cells)
      cells.push_back({{"quotient", qr.first}, {"ideal", qr.second}, {"count", count}});
    json doc = {{"n", gap.n}, {"k", gap.k}, {"total", gap.total}, {"cells", cells}};
    *out = dup_string(doc.dump());
    return SD_OK;
  });
}

sd_status sd_verify_tables(int jobs, int long_running, const char* tables_json,
                           char** out) {
  return guarded([&]() -> sd_status {
    sdepth::VerifyOptions opts;
    opts.jobs = jobs;
    opts.long_running = long_running != 0;
    if (tables_json) opts.tables_json = tables_json;
    const auto report = sdepth::verify_tables(opts);
    json checks = json::array();
    for (const auto& c : report.checks) {
      json jc = {{"name", c.name}, {"ok", c.ok}};
      if (!c.mode.empty()) jc["mode"] = c.mode;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    json doc = {{"ok", report.ok}, {"checks", checks}};
    *out = dup_string(doc.dump());
    return report.ok ? SD_OK : SD_MISMATCH;
  });
}

}  // extern "C"
