// Command-line front end. Talks to the library exclusively through the
// C interface in stanleydepth.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stanleydepth.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;

struct InputArgs {
  std::string inline_text;
  std::string path;
  int ground_n = 0;
};

int fail(sd_status status) {
  std::cerr << "error (" << sd_status_name(status) << "): " << sd_last_error()
            << "\n";
  return kExitUsage;
}

// inline text, file, or stdin
std::string read_input(const InputArgs& in) {
  if (!in.inline_text.empty()) return in.inline_text;
  if (!in.path.empty()) {
    std::ifstream f(in.path);
    if (!f) throw std::runtime_error("cannot open " + in.path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

sd_status parse_input(const InputArgs& in, sd_antichain** out) {
  const std::string text = read_input(in);
  return sd_antichain_parse(text.c_str(), in.ground_n, out);
}

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("antichain", in.inline_text,
                  "antichain, e.g. \"1,2,3 1,2,4\" or \"123 124\"");
  cmd->add_option("--in", in.path, "read the antichain from a file");
  cmd->add_option("--n", in.ground_n, "ground set size (default: largest vertex)");
}

std::string trace_line(const json& trace) {
  std::string s;
  for (const auto& vec : trace) {
    s += " (";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(vec[i].get<long long>());
    }
    s += ')';
  }
  return s;
}

int run_sdepth(const InputArgs& in, const std::string& side, int at_least,
               bool witness, bool oracle) {
  sd_antichain* a = nullptr;
  sd_status st = parse_input(in, &a);
  if (st != SD_OK) return fail(st);
  sd_family* fam = nullptr;
  st = side == "ideal" ? sd_complement_upset(a, &fam) : sd_down_closure(a, &fam);
  if (st != SD_OK) {
    sd_antichain_free(a);
    return fail(st);
  }
  std::cout << "n = " << sd_antichain_ground(a) << ", facets = "
            << sd_antichain_count(a) << ", side = " << side
            << ", |poset| = " << sd_family_count(fam) << "\n";

  int code = kExitOk;
  if (oracle) {
    int value = 0;
    st = sd_sdepth_naive(fam, &value);
    if (st != SD_OK)
      code = fail(st);
    else
      std::cout << "sdepth = " << value << "  (exhaustive reference)\n";
  } else if (at_least >= 0) {
    sd_partition* p = nullptr;
    st = sd_decide_at_least(fam, at_least, &p);
    if (st == SD_OK) {
      std::cout << "achievable: a partition with every top of size >= "
                << at_least << " exists\n";
      if (witness && p) {
        char* text = nullptr;
        sd_partition_format(p, &text);
        std::cout << "witness: " << text << "\n";
        sd_string_free(text);
      }
      sd_partition_free(p);
    } else if (st == SD_IMPOSSIBLE) {
      std::cout << "impossible: no partition reaches " << at_least << "\n";
    } else {
      code = fail(st);
    }
  } else {
    int value = 0, flagged = 0;
    unsigned long long nodes = 0;
    sd_partition* p = nullptr;
    st = sd_sdepth(fam, &value, &nodes, &flagged, witness ? &p : nullptr);
    if (st != SD_OK) {
      code = fail(st);
    } else {
      std::cout << "sdepth = " << value;
      if (flagged) std::cout << "  (empty poset: ground-set size by convention)";
      std::cout << "  (search nodes: " << nodes << ")\n";
      if (witness && p) {
        char* text = nullptr;
        sd_partition_format(p, &text);
        std::cout << "witness: " << text << "\n";
        sd_string_free(text);
      }
      if (p) sd_partition_free(p);
    }
  }
  sd_family_free(fam);
  sd_antichain_free(a);
  return code;
}

int run_scc(const InputArgs& in) {
  sd_antichain* a = nullptr;
  sd_status st = parse_input(in, &a);
  if (st != SD_OK) return fail(st);
  char* text = nullptr;
  st = sd_scc_report(a, &text);
  sd_antichain_free(a);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "k = " << doc["k"] << "\n";
  std::cout << "criterion: " << (doc["criterion"]["pass"].get<bool>() ? "pass" : "FAIL")
            << "\n";
  std::cout << "trace:" << trace_line(doc["criterion"]["trace"]) << "\n";
  const bool pass = doc["scc"]["pass"].get<bool>();
  std::cout << "strong criterion: " << (pass ? "pass" : "FAIL") << "\n";
  if (!pass) {
    std::cout << "witness: " << doc["scc"]["witness"].get<std::string>() << "\n";
    std::cout << "witness link: " << doc["scc"]["witness_link"].get<std::string>()
              << "\n";
    std::cout << "witness trace:" << trace_line(doc["scc"]["witness_trace"]) << "\n";
  }
  return kExitOk;
}

int run_reduce(const InputArgs& in) {
  sd_antichain* a = nullptr;
  sd_status st = parse_input(in, &a);
  if (st != SD_OK) return fail(st);
  char* text = nullptr;
  st = sd_reduce_report(a, &text);
  sd_antichain_free(a);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "input: " << doc["input"].get<std::string>() << "\n";
  for (const auto& step : doc["steps"])
    std::cout << "  " << step["rule"].get<std::string>() << " ("
              << step["detail"].get<int>() << ") -> "
              << step["result"].get<std::string>() << "  [n=" << step["n"] << "]\n";
  std::cout << "fixpoint: " << doc["final"].get<std::string>()
            << "  [n=" << doc["final_n"] << "]\n";
  return kExitOk;
}

int run_splits(const InputArgs& in, const std::string& mode) {
  sd_antichain* a = nullptr;
  sd_status st = parse_input(in, &a);
  if (st != SD_OK) return fail(st);
  char* text = nullptr;
  st = sd_splits_report(a, mode.c_str(), &text);
  sd_antichain_free(a);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "mode = " << doc["mode"].get<std::string>() << "\n";
  for (const auto& v : doc["vertices"])
    std::cout << "  x = " << v["x"] << ": "
              << (v["splits"].get<bool>() ? "splits" : "no") << "\n";
  if (doc.contains("splits_over"))
    std::cout << "splits over " << doc["splits_over"] << "\n";
  else
    std::cout << "does not split\n";
  return kExitOk;
}

int run_grid(const std::string& gens, const std::string& g, const std::string& jgens,
             const std::string& side, bool construct) {
  char* text = nullptr;
  const sd_status st =
      sd_grid_report(gens.c_str(), g.empty() ? nullptr : g.c_str(),
                     jgens.empty() ? nullptr : jgens.c_str(), side.c_str(),
                     construct ? 1 : 0, &text);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "n = " << doc["n"] << ", g = " << doc["g"].dump() << ", side = "
            << doc["side"].get<std::string>() << "\n";
  if (construct) {
    const auto& c = doc["construction"];
    std::cout << "quotient maximals: " << c["quotient_maximals"].dump()
              << " (alpha = " << c["alpha_m"] << ")\n";
    std::cout << "constructed sdepth = " << c["sdepth"] << "\n";
    for (const auto& iv : c["intervals"])
      std::cout << "  " << iv["lower"].dump() << " .. " << iv["upper"].dump() << "\n";
    std::cout << "trace:\n";
    for (const auto& line : c["trace"])
      std::cout << "  " << line.get<std::string>() << "\n";
  } else {
    std::cout << "points = " << doc["points"] << "\n";
    std::cout << "sdepth = " << doc["sdepth"];
    if (doc["empty_poset"].get<bool>())
      std::cout << "  (empty poset: ground-set size by convention)";
    std::cout << "\n";
    for (const auto& iv : doc["witness"])
      std::cout << "  " << iv["lower"].dump() << " .. " << iv["upper"].dump() << "\n";
  }
  return kExitOk;
}

int run_census(int n, int k, int jobs, bool long_running, bool include_empty,
               const std::string& mode, const std::string& out_path, bool sort) {
  char* text = nullptr;
  const sd_status st = sd_census_report(
      n, k, jobs, long_running ? 1 : 0, include_empty ? 1 : 0, mode.c_str(),
      out_path.empty() ? nullptr : out_path.c_str(), sort ? 1 : 0, &text);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "census n=" << doc["n"] << " k=" << doc["k"] << " (mode "
            << doc["mode"].get<std::string>() << ")\n";
  std::cout << "  total:           " << doc["total"] << "\n";
  std::cout << "  bad degree:      " << doc["bad_degree"] << "\n";
  std::cout << "  fail scc:        " << doc["fail_scc"] << "\n";
  std::cout << "  splits:          " << doc["splits"] << "\n";
  std::cout << "  sdepth >= k+1:   " << doc["sdepth_ok"] << "\n";
  std::cout << "  counterexamples: " << doc["counterexamples"] << "\n";
  return kExitOk;
}

int run_gap(int n, int k, int jobs, bool long_running, const std::string& csv) {
  char* text = nullptr;
  const sd_status st = sd_gap_report(n, k, jobs, long_running ? 1 : 0,
                                     csv.empty() ? nullptr : csv.c_str(), &text);
  if (st != SD_OK) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  std::cout << "gap census n=" << doc["n"] << " k=" << doc["k"] << ", total "
            << doc["total"] << "\n";
  for (const auto& cell : doc["cells"])
    std::cout << "  sdepth(quotient) = " << cell["quotient"]
              << ", sdepth(ideal) = " << cell["ideal"] << ": " << cell["count"]
              << "\n";
  if (!csv.empty()) std::cout << "csv written to " << csv << "\n";
  return kExitOk;
}

int run_verify(int jobs, bool long_running, const std::string& tables_path) {
  std::string tables;
  if (!tables_path.empty()) {
    std::ifstream f(tables_path);
    if (!f) {
      std::cerr << "error: cannot open " << tables_path << "\n";
      return kExitUsage;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    tables = ss.str();
  }
  char* text = nullptr;
  const sd_status st = sd_verify_tables(jobs, long_running ? 1 : 0,
                                        tables.empty() ? nullptr : tables.c_str(),
                                        &text);
  if (st != SD_OK && st != SD_MISMATCH) return fail(st);
  const json doc = json::parse(text);
  sd_string_free(text);
  for (const auto& check : doc["checks"]) {
    std::cout << (check["ok"].get<bool>() ? "PASS " : "FAIL ")
              << check["name"].get<std::string>();
    if (check.contains("mode"))
      std::cout << "  [split mode: " << check["mode"].get<std::string>() << "]";
    if (check.contains("detail"))
      std::cout << "\n     " << check["detail"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << (doc["ok"].get<bool>() ? "all tables match\n" : "MISMATCH\n");
  return doc["ok"].get<bool>() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stanley depth toolkit"};
  app.require_subcommand(1);

  InputArgs in_sdepth, in_scc, in_reduce, in_splits;

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth of a family");
  add_input_options(sdepth_cmd, in_sdepth);
  std::string side = "quotient";
  sdepth_cmd->add_option("--side", side, "quotient (down set) or ideal (complement)")
      ->check(CLI::IsMember({"quotient", "ideal"}));
  int at_least = -1;
  sdepth_cmd->add_option("--at-least", at_least, "decide a single level only");
  bool witness = false, oracle = false;
  sdepth_cmd->add_flag("--witness", witness, "print the witness partition");
  sdepth_cmd->add_flag("--oracle", oracle, "exhaustive reference mode (n <= 4)");

  auto* scc_cmd = app.add_subcommand("scc", "combinatorial criterion and its strong form");
  add_input_options(scc_cmd, in_scc);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce to a fixpoint and print the trace");
  add_input_options(reduce_cmd, in_reduce);

  auto* splits_cmd = app.add_subcommand("splits", "per-vertex splitting verdicts");
  add_input_options(splits_cmd, in_splits);
  std::string split_mode = "exact";
  splits_cmd->add_option("--mode", split_mode, "condition (ii): exact or criterion")
      ->check(CLI::IsMember({"exact", "criterion"}));

  auto* grid_cmd = app.add_subcommand("grid", "grid poset of monomial generators");
  std::string gens, gbound, jgens, gside = "ideal";
  grid_cmd->add_option("generators", gens, "tuples, e.g. \"2,0,1 0,1,2\"")->required();
  grid_cmd->add_option("--g", gbound, "bound tuple (default: componentwise max)");
  grid_cmd->add_option("--j", jgens, "quotient generators (ideal side only)");
  grid_cmd->add_option("--side", gside, "ideal or quotient")
      ->check(CLI::IsMember({"ideal", "quotient"}));
  bool construct = false;
  grid_cmd->add_flag("--construct-n3", construct, "three-variable constructive partition");

  auto* census_cmd = app.add_subcommand("census", "classification census over k-uniform hypergraphs");
  int cn = 0, ck = 0, jobs = 1;
  bool long_running = false, include_empty = false, sort_records = false;
  std::string census_mode = "exact", out_path;
  census_cmd->add_option("n", cn, "vertices")->required();
  census_cmd->add_option("k", ck, "edge size")->required();
  census_cmd->add_option("--jobs", jobs, "parallel workers");
  census_cmd->add_flag("--long-running", long_running, "open the heavy (n,k) pairs");
  census_cmd->add_flag("--include-empty", include_empty,
                       "count the empty edge set (bad degree)");
  census_cmd->add_option("--mode", census_mode, "split mode: exact or criterion")
      ->check(CLI::IsMember({"exact", "criterion"}));
  census_cmd->add_option("--out", out_path, "write one JSON record per instance");
  census_cmd->add_flag("--sort", sort_records, "canonical order in the record file");

  auto* gap_cmd = app.add_subcommand("gap", "exact sdepth of both sides, tabulated");
  int gn = 0, gk = 0, gjobs = 1;
  bool gap_long = false;
  std::string csv_path;
  gap_cmd->add_option("n", gn, "vertices")->required();
  gap_cmd->add_option("k", gk, "edge size")->required();
  gap_cmd->add_option("--jobs", gjobs, "parallel workers");
  gap_cmd->add_flag("--long-running", gap_long, "open the heavy (n,k) pairs");
  gap_cmd->add_option("--csv", csv_path, "write the matrix as csv");

  auto* verify_cmd = app.add_subcommand("verify-tables",
                                        "recompute every desk-scale table and diff");
  int vjobs = 1;
  bool vlong = false;
  std::string tables_path;
  verify_cmd->add_option("--jobs", vjobs, "parallel workers");
  verify_cmd->add_flag("--long-running", vlong, "include the heavy rows");
  verify_cmd->add_option("--tables", tables_path, "expected-table JSON override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sdepth_cmd->parsed())
      return run_sdepth(in_sdepth, side, at_least, witness, oracle);
    if (scc_cmd->parsed()) return run_scc(in_scc);
    if (reduce_cmd->parsed()) return run_reduce(in_reduce);
    if (splits_cmd->parsed()) return run_splits(in_splits, split_mode);
    if (grid_cmd->parsed()) return run_grid(gens, gbound, jgens, gside, construct);
    if (census_cmd->parsed())
      return run_census(cn, ck, jobs, long_running, include_empty, census_mode,
                        out_path, sort_records);
    if (gap_cmd->parsed()) return run_gap(gn, gk, gjobs, gap_long, csv_path);
    if (verify_cmd->parsed()) return run_verify(vjobs, vlong, tables_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
