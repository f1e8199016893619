// Command line front end: analyze one file, batch a directory, or compare
// the Fine interior with the brute-force oracle.

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "finepoly/fine_interior.hpp"
#include "finepoly/invariants.hpp"
#include "finepoly/io.hpp"
#include "finepoly/report.hpp"

namespace fs = std::filesystem;
using namespace finepoly;

namespace {

enum Exit { kOk = 0, kInput = 1, kInternal = 2 };

int run_analyze(const std::string& file, bool text, bool thresholds) {
  try {
    InputDocument doc = read_input_file(file);
    AnalyzeOptions opts;
    opts.thresholds = thresholds;
    AnalysisReport r = analyze(to_polytope(doc), doc.name, opts);
    if (text)
      std::cout << report_to_text(r);
    else
      std::cout << report_to_json(r).dump(2) << '\n';
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

struct BatchResult {
  Json line;
  bool ok = false;
  AnalysisReport report;
};

BatchResult batch_one(const fs::path& path, bool thresholds) {
  BatchResult out;
  Json line;
  line["file"] = path.filename().string();
  try {
    InputDocument doc = read_input_file(path);
    AnalyzeOptions opts;
    opts.thresholds = thresholds;
    out.report = analyze(to_polytope(doc), doc.name, opts);
    Json body = report_to_json(out.report);
    for (auto& [k, v] : body.items()) line[k] = v;
    out.ok = true;
  } catch (const InputError& e) {
    line["error"] = e.what();
    line["exit"] = static_cast<int>(kInput);
  } catch (const std::exception& e) {
    line["error"] = e.what();
    line["exit"] = static_cast<int>(kInternal);
  }
  out.line = std::move(line);
  return out;
}

int run_batch(const std::string& dir, const std::string& out_file, int jobs, bool thresholds) {
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<BatchResult> results(files.size());
  const int n = static_cast<int>(files.size());
  // Each worker only writes its own slot, so the output order is the sorted
  // file order whatever the scheduling.
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs))
  for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = batch_one(files[static_cast<std::size_t>(i)], thresholds);

  std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << out_file << '\n';
    return kInput;
  }
  std::map<std::string, int> flag_counts{{"canonically_closed", 0}, {"integrally_closed", 0}, {"reflexive", 0},
                                         {"almost_reflexive", 0},   {"pseudoreflexive", 0}};
  std::map<std::string, int> kodaira_counts;
  int ok = 0;
  for (const auto& r : results) {
    out << r.line.dump() << '\n';
    if (!r.ok) continue;
    ++ok;
    const ClosednessFlags& f = r.report.flags;
    flag_counts["canonically_closed"] += f.canonically_closed;
    flag_counts["integrally_closed"] += f.integrally_closed;
    flag_counts["reflexive"] += f.reflexive;
    flag_counts["almost_reflexive"] += f.almost_reflexive;
    flag_counts["pseudoreflexive"] += f.pseudoreflexive;
    ++kodaira_counts[r.report.kodaira ? std::to_string(*r.report.kodaira) : "-inf"];
  }
  Json summary;
  summary["files"] = files.size();
  summary["ok"] = ok;
  summary["errors"] = static_cast<int>(files.size()) - ok;
  summary["flags"] = flag_counts;
  summary["kodaira"] = kodaira_counts;
  Json footer;
  footer["summary"] = summary;
  out << footer.dump() << '\n';
  std::cerr << files.size() << " files, " << ok << " analyzed, " << files.size() - ok << " errors\n";
  return kOk;
}

int run_oracle(const std::string& file, std::int64_t radius) {
  try {
    Polytope p = to_polytope(read_input_file(file));
    std::optional<Polytope> f = fine_interior(p);
    std::optional<Polytope> o = oracle_fine_interior(p, radius);
    auto show = [](const std::optional<Polytope>& q) {
      if (!q) return std::string("empty");
      std::string s;
      for (const auto& v : q->vertices()) s += (s.empty() ? "" : " ") + to_string(v);
      return s;
    };
    std::cout << "fine interior     " << show(f) << '\n';
    std::cout << "oracle            " << show(o) << '\n';
    std::cout << "radius            " << radius << '\n';
    std::cout << "candidate radius  " << candidate_radius(p) << '\n';
    // The oracle uses a subset of the valid inequalities, so it can only be
    // larger than F(P).
    if (f.has_value() == o.has_value() && (!f || *f == *o)) {
      std::cout << "EQUAL\n";
      return kOk;
    }
    if (o && (!f || o->contains(*f))) {
      std::cout << "CANDIDATE_SUBSET\n";
      return kOk;
    }
    std::cout << "MISMATCH\n";
    return kInternal;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fine interiors, canonical hulls and canonical models of lattice polytopes"};
  app.require_subcommand(1);

  std::string file, dir, out_file;
  bool json = false, text = false, no_thresholds = false;
  int jobs = omp_get_max_threads();
  std::int64_t radius = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one polytope file");
  analyze_cmd->add_option("FILE", file, "V or H polytope file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", json, "JSON output (default)");
  analyze_cmd->add_flag("--text", text, "aligned text table")->excludes(json_flag);
  analyze_cmd->add_flag("--no-thresholds", no_thresholds, "skip the canonical-closedness threshold search");

  auto* batch_cmd = app.add_subcommand("batch", "Analyze every file of a directory into JSON lines");
  batch_cmd->add_option("DIR", dir, "input directory")->required();
  batch_cmd->add_option("--out", out_file, "output .jsonl file")->required();
  batch_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--no-thresholds", no_thresholds, "skip the canonical-closedness threshold search");

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare F(P) with the bounded brute-force computation");
  oracle_cmd->add_option("FILE", file, "V or H polytope file")->required();
  oracle_cmd->add_option("--radius", radius, "bound on the normals' sup-norm")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (*analyze_cmd) return run_analyze(file, text, !no_thresholds);
  if (*batch_cmd) return run_batch(dir, out_file, jobs, !no_thresholds);
  return run_oracle(file, radius);
}
