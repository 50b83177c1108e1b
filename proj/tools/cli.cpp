#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "doob/doob.hpp"
#include "suite.hpp"

namespace doob::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Representative files are written one per code; beyond this many the user
// should ask for classes or counts instead.
constexpr std::uint64_t kMaxWrittenCodes = 100000;

struct Common {
  bool json = false;
  unsigned threads = 1;
  bool stamp = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Print a JSON record instead of text");
  sub->add_option("--threads", c.threads, "Upper bound on worker threads")->check(CLI::Range(1U, 256U));
  sub->add_flag("--stamp", c.stamp, "Add a UTC timestamp to the report");
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(std::ostream& out, const Common& c, json j, const std::string& text) {
  if (c.json) {
    if (c.stamp) j["stamp"] = utc_now();
    out << j.dump(2) << '\n';
    return;
  }
  out << text;
  if (c.stamp) out << "stamp: " << utc_now() << '\n';
}

json params_json(const DoobParams& p) { return {{"m", p.m()}, {"n", p.n()}}; }

std::string join_vertices(const VertexSet& s) {
  std::ostringstream os;
  bool first = true;
  s.for_each([&](VertexIndex v) {
    os << (first ? "" : " ") << format_vertex(s.params(), v);
    first = false;
  });
  return os.str();
}

// Coordinates are 0-based internally and 1-based on the command line.
json coords_json(const std::vector<int>& coords) {
  json j = json::array();
  for (const int c : coords) j.push_back(c + 1);
  return j;
}

std::string coords_text(const std::vector<int>& coords) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i] + 1;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_verify(const std::string& type, const std::string& file, const Common& c, std::ostream& out) {
  json j{{"file", file}, {"type", type}};
  std::ostringstream text;
  bool valid = false;
  if (type == "mds" || type == "2mds") {
    const auto s = load_doobset(file);
    valid = type == "mds" ? is_mds(s) : is_two_mds(s);
    j["params"] = params_json(s.params());
    j["size"] = s.count();
    text << file << ": " << s.params().to_string() << ", " << s.count() << " vertices\n";
  } else if (type == "latin") {
    try {
      const auto f = load_doobcol(file);
      valid = true;
      j["params"] = params_json(f.params());
    } catch (const InvalidCode& e) {
      j["reason"] = e.what();
      text << "reason: " << e.what() << '\n';
    }
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw FormatError("cannot open " + file);
    const auto [first, second] = read_partition(in);
    j["params"] = params_json(first.params());
    const auto q = quotient_matrix(first, second);
    valid = q.has_value();
    if (q) {
      const auto e = matrix_eigenvalues(*q);
      const auto x = check_extremal_partition(first);
      j["quotient"] = {{q->s11, q->s12}, {q->s21, q->s22}};
      j["eigenvalues"] = e.to_string();
      j["extremal"] = to_string(x.kind);
      text << "quotient " << q->to_string() << ", eigenvalues " << e.to_string() << ", " << to_string(x.kind) << '\n';
    }
  }
  j["valid"] = valid;
  text << (valid ? "valid " : "not a valid ") << type << '\n';
  emit(out, c, j, text.str());
  return valid ? kOk : kViolated;
}

int cmd_classify(const std::string& file, const std::string& witness_dir, const Common& c, std::ostream& out) {
  const MdsCode code(load_doobset(file));
  const auto& p = code.params();
  const auto cls = classify(code);
  json j{{"code", file}, {"params", params_json(p)}, {"semilinear", cls.semilinear()}, {"reducible", cls.reducible()}};
  std::ostringstream text;
  text << file << ": MDS code in " << p.to_string() << '\n';
  text << "semilinear: " << yes_no(cls.semilinear()) << '\n';
  if (!witness_dir.empty()) fs::create_directories(witness_dir);
  j["linear_witness"] = nullptr;
  if (cls.linear_witness) {
    if (!witness_dir.empty()) {
      const auto path = (fs::path(witness_dir) / "linear.doobset").string();
      save_doobset(path, cls.linear_witness->set());
      j["linear_witness"] = path;
      text << "  linear witness: " << path << '\n';
    } else {
      const auto d = canonical_decomposition(*cls.linear_witness);
      text << "  inside a linear 2xMDS code with sigma=" << d.sigma << '\n';
    }
  }
  text << "reducible: " << yes_no(cls.reducible()) << '\n';
  j["bipartition"] = nullptr;
  j["colorings"] = nullptr;
  if (cls.reducible_witness) {
    const auto& w = *cls.reducible_witness;
    j["bipartition"] = {{"a", coords_json(w.coords_a)}, {"b", coords_json(w.coords_b)}};
    text << "  coordinates {" << coords_text(w.coords_a) << "} | {" << coords_text(w.coords_b) << "}\n";
    if (!witness_dir.empty()) {
      const auto fa = (fs::path(witness_dir) / "f.doobcol").string();
      const auto fb = (fs::path(witness_dir) / "g.doobcol").string();
      save_doobcol(fa, w.f);
      save_doobcol(fb, w.g);
      j["colorings"] = {fa, fb};
      text << "  colourings: " << fa << ", " << fb << '\n';
    }
  }
  emit(out, c, j, text.str());
  return kOk;
}

int cmd_decompose(const std::string& file, const Common& c, std::ostream& out) {
  const TwoMdsCode code(load_doobset(file));
  const auto d = canonical_decomposition(code);
  const auto comps = components(code.set()).size();
  json j{{"code", file},
         {"params", params_json(code.params())},
         {"k", d.k()},
         {"sigma", d.sigma ? 1 : 0},
         {"decomposable", d.decomposable()},
         {"linear", is_linear(code)},
         {"components", comps}};
  std::ostringstream text;
  text << file << ": 2xMDS code in " << code.params().to_string() << '\n';
  text << "k=" << d.k() << " sigma=" << d.sigma << " components=" << comps << " linear=" << yes_no(is_linear(code))
       << '\n';
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json members = json::array();
    b.code.for_each([&](VertexIndex v) { members.push_back(v); });
    blocks.push_back({{"coords", coords_json(b.coords)}, {"params", params_json(b.code.params())}, {"members", members}});
    text << "block {" << coords_text(b.coords) << "} in " << b.code.params().to_string() << ": "
         << join_vertices(b.code) << '\n';
  }
  j["blocks"] = blocks;
  emit(out, c, j, text.str());
  return kOk;
}

struct EnumerateArgs {
  std::string target;
  int m = -1;
  int n = -1;
  bool classes = false;
  bool count_only = false;
  std::string out_dir;
};

Target parse_target(const std::string& t) {
  if (t == "mds") return Target::mds;
  if (t == "2mds") return Target::two_mds;
  return Target::latin_coloring;
}

void save_code(const fs::path& path, const VertexSet& s, Target target, const DoobParams& params) {
  if (target == Target::latin_coloring) {
    save_doobcol(path.string(), coloring_from_mds(MdsCode(s), params.n() + 1));
  } else {
    save_doobset(path.string(), s);
  }
}

std::string numbered(const std::string& stem, std::size_t i, Target target) {
  std::ostringstream os;
  os << stem << '_' << std::setw(6) << std::setfill('0') << i << (target == Target::latin_coloring ? ".doobcol" : ".doobset");
  return os.str();
}

int cmd_enumerate(const EnumerateArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (a.classes && a.count_only) {
    err << "--classes and --count-only are mutually exclusive\n";
    return kUsage;
  }
  const DoobParams params(a.m, a.n);
  const auto target = parse_target(a.target);
  const auto mode = a.count_only ? SearchMode::count_only : a.classes ? SearchMode::up_to_equivalence : SearchMode::all;
  const auto result = run_search({params, target, mode, c.threads});

  json j{{"params", params_json(params)}, {"target", to_string(target)}, {"total", result.total}};
  std::ostringstream text;
  text << params.to_string() << ' ' << to_string(target) << ": " << result.total << " total\n";
  if (result.classes) {
    j["class_count"] = result.classes->class_count();
    j["class_sizes"] = result.classes->class_sizes;
    j["orbit_sizes"] = result.classes->orbit_sizes;
    text << result.classes->class_count() << " classes, sizes";
    for (const auto s : result.classes->class_sizes) text << ' ' << s;
    text << '\n';
  }
  if (!a.out_dir.empty() && !a.count_only) {
    const auto& sets = result.classes ? result.classes->representatives : result.sets;
    if (sets.size() > kMaxWrittenCodes) {
      err << sets.size() << " codes is too many files to write; use --classes or --count-only\n";
      return kUsage;
    }
    fs::create_directories(a.out_dir);
    json files = json::array();
    const std::string stem = result.classes ? "rep" : "code";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto name = numbered(stem, i + 1, target);
      save_code(fs::path(a.out_dir) / name, sets[i], target, params);
      files.push_back(name);
    }
    j["representatives"] = files;
    std::ofstream manifest(fs::path(a.out_dir) / "manifest.json", std::ios::binary);
    manifest << j.dump(2) << '\n';
    if (!manifest) throw FormatError("cannot write manifest in " + a.out_dir);
    text << "wrote " << files.size() << " files and manifest.json to " << a.out_dir << '\n';
  }
  emit(out, c, j, text.str());
  return kOk;
}

int cmd_partition(int power, const std::string& out_file, const Common& c, std::ostream& out) {
  const auto bases = find_intermediate_base();
  json j{{"base_count", bases.size()}};
  std::ostringstream text;
  text << bases.size() << " intermediate 6-sets in Sh with quotient [[1,5],[3,3]]\n";
  if (bases.empty()) {
    emit(out, c, j, text.str());
    return kViolated;
  }
  const auto& base = bases.front();
  json members = json::array();
  base.for_each([&](VertexIndex v) { members.push_back(v); });
  j["base"] = members;
  text << "least base: " << join_vertices(base) << '\n';

  const auto cell = intermediate_partition(base, power);
  const auto rest = cell.complement();
  const auto q = quotient_matrix(cell, rest);
  j["power"] = power;
  j["cell_size"] = cell.count();
  j["equitable"] = q.has_value();
  text << "D(" << power << ",0): cell of " << cell.count() << " vertices, ";
  if (q) {
    j["quotient"] = {{q->s11, q->s12}, {q->s21, q->s22}};
    text << "quotient " << q->to_string() << '\n';
  } else {
    text << "not equitable\n";
  }
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    write_partition(f, cell, rest);
    if (!f) throw FormatError("cannot write " + out_file);
    j["file"] = out_file;
  }
  emit(out, c, j, text.str());
  return q ? kOk : kViolated;
}

int cmd_spectrum(int m, int n, const Common& c, std::ostream& out) {
  const DoobParams p(m, n);
  const auto eig = eigenvalue_list(p);
  const bool ok = verify_spectrum(p);
  json j{{"params", params_json(p)}, {"eigenvalues", eig}, {"annihilated", ok}};
  std::ostringstream text;
  text << p.to_string() << " eigenvalues";
  for (const int e : eig) text << ' ' << e;
  text << "\nannihilating polynomial check: " << (ok ? "passed" : "FAILED") << '\n';
  emit(out, c, j, text.str());
  return ok ? kOk : kViolated;
}

int cmd_report(const std::vector<int>& only, const Common& c, std::ostream& out) {
  json rows = json::array();
  bool all = true;
  bool falsified = false;
  const auto results = suite::run_all(only, c.threads, [&](const suite::Result& r) {
    if (!c.json) out << suite::format_line(r) << '\n' << std::flush;
  });
  for (const auto& r : results) {
    all = all && r.passed;
    falsified = falsified || r.falsified;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"claim", r.claim},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"limit_seconds", r.limit_seconds},
                    {"detail", r.detail}});
  }
  std::ostringstream text;
  text << (all ? "all " : "") << std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; })
       << " of " << results.size() << " criteria passed\n";
  emit(out, c, json{{"criteria", rows}, {"passed", all}}, text.str());
  if (falsified) return kFalsified;
  return all ? kOk : kViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify, classify and enumerate MDS and 2xMDS codes in Doob graphs D(m,n)", "doob"};
  app.require_subcommand(1);

  Common common;
  std::string type;
  std::string file;
  auto* verify = app.add_subcommand("verify", "Check a set, colouring or partition file");
  verify->add_option("--type", type, "mds | 2mds | latin | equitable")
      ->required()
      ->check(CLI::IsMember({"mds", "2mds", "latin", "equitable"}));
  verify->add_option("file", file, "Input file")->required();
  add_common(verify, common);

  std::string witness_dir;
  auto* classify_cmd = app.add_subcommand("classify", "Decide semilinearity and reducibility of an MDS code");
  classify_cmd->add_option("file", file, "doobset file holding an MDS code")->required();
  classify_cmd->add_option("--witness-dir", witness_dir, "Directory for witness files");
  add_common(classify_cmd, common);

  auto* decompose = app.add_subcommand("decompose", "Print the canonical XOR decomposition of a 2xMDS code");
  decompose->add_option("file", file, "doobset file holding a 2xMDS code")->required();
  add_common(decompose, common);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate codes or latin colourings");
  enumerate->add_option("--target", ea.target, "mds | 2mds | latin")
      ->required()
      ->check(CLI::IsMember({"mds", "2mds", "latin"}));
  enumerate->add_option("-m", ea.m, "Number of Shrikhande coordinates")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("-n", ea.n, "Number of K4 coordinates")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--classes", ea.classes, "Reduce to equivalence classes");
  enumerate->add_flag("--count-only", ea.count_only, "Only count");
  enumerate->add_option("--out", ea.out_dir, "Directory for code files and manifest.json");
  add_common(enumerate, common);

  bool find_intermediate = false;
  int power = 1;
  std::string partition_out;
  auto* partition = app.add_subcommand("partition", "Search for intermediate equitable partitions");
  partition->add_flag("--find-intermediate", find_intermediate, "Scan the 6-subsets of Sh")->required();
  partition->add_option("--power", power, "Lift the least base to D(power,0)")->check(CLI::Range(1, 3));
  partition->add_option("--out", partition_out, "Write the lifted partition to this file");
  add_common(partition, common);

  int sm = -1;
  int sn = -1;
  auto* spectrum = app.add_subcommand("spectrum", "Exact annihilating-polynomial check of the spectrum");
  spectrum->add_option("-m", sm, "Number of Shrikhande coordinates")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("-n", sn, "Number of K4 coordinates")->required()->check(CLI::NonNegativeNumber);
  add_common(spectrum, common);

  bool full_suite = false;
  std::vector<int> only;
  auto* report = app.add_subcommand("report", "Run the acceptance battery");
  report->add_flag("--paper-suite", full_suite, "Run every acceptance criterion")->required();
  report->add_option("--only", only, "Restrict to these criterion numbers")->check(CLI::Range(1, 12));
  add_common(report, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(type, file, common, out);
    if (classify_cmd->parsed()) return cmd_classify(file, witness_dir, common, out);
    if (decompose->parsed()) return cmd_decompose(file, common, out);
    if (enumerate->parsed()) return cmd_enumerate(ea, common, out, err);
    if (partition->parsed()) return cmd_partition(power, partition_out, common, out);
    if (spectrum->parsed()) return cmd_spectrum(sm, sn, common, out);
    if (report->parsed()) return cmd_report(only, common, out);
  } catch (const TheoremFalsification& e) {
    err << "theorem falsified: " << e.what() << '\n';
    return kFalsified;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace doob::cli
