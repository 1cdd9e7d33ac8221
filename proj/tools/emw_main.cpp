// Command-line front end: emw / validate / generate / matching.
// Exit codes: 0 yes (or success), 1 no (or a failed check), 2 error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "emw/bounds.hpp"
#include "emw/decomposition.hpp"
#include "emw/emwidth.hpp"
#include "emw/error.hpp"
#include "emw/io.hpp"
#include "emw/matching.hpp"

using namespace emw;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct RunConfig {
  std::string input;
  std::string output;
  std::string decomposition;
  int k = -1;
  bool search = false;
  std::string gadget;
  bool random = false;
  int n = 10;
  std::uint64_t seed = 1;
  std::string mode = "max";
  int r = 3;
  std::string instance;
  bool trace = false;
  int exact_cap = 64;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output, text);
  }
}

EmwConfig engine_config(const RunConfig& cfg) {
  EmwConfig ec;
  ec.improve_cap = cfg.exact_cap;
  ec.base_case_size = std::min(ec.base_case_size, cfg.exact_cap);
  return ec;
}

int cmd_emw(const RunConfig& cfg) {
  const PlaneGraph g = parse_plane_graph(read_file(cfg.input));
  if (cfg.search == (cfg.k >= 0)) {
    std::cerr << "error: give exactly one of --k and --search\n";
    return kError;
  }
  const EmwConfig ec = engine_config(cfg);
  const int n = g.num_vertices();

  if (!cfg.search) {
    if (n <= 1 || cfg.k == 0) {
      // k = 0 only fits graphs without edges; the engine starts at k = 1
      const bool yes = g.num_edges() == 0 && n <= 1;
      std::cout << (yes ? "yes" : "no") << '\n';
      if (yes && !cfg.output.empty()) write_file(cfg.output, print_tree_decomposition(trivial_decomposition(n), n));
      return yes ? kYes : kNo;
    }
    const EmWidthAnswer ans = decide_emwidth(g, cfg.k, ec);
    std::cout << (ans.yes ? "yes" : "no") << '\n';
    if (cfg.trace) std::cout << format_trace(ans.trace);
    if (ans.yes && !cfg.output.empty()) write_file(cfg.output, print_tree_decomposition(*ans.decomposition, n));
    return ans.yes ? kYes : kNo;
  }

  if (n <= 1) {
    std::cout << "emw = " << n - 1 << '\n';
    if (!cfg.output.empty()) write_file(cfg.output, print_tree_decomposition(trivial_decomposition(n), n));
    return kYes;
  }
  // width n-1 always fits; a bounded face of length l forces width >= l-1
  int lo = std::max(1, g.max_bounded_face_length() - 1);
  int hi = n - 1;
  std::optional<EmWidthAnswer> best;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    EmWidthAnswer ans = decide_emwidth(g, mid, ec);
    if (cfg.trace) std::cout << "k = " << mid << ": " << (ans.yes ? "yes" : "no") << '\n' << format_trace(ans.trace);
    if (ans.yes) {
      hi = mid;
      best = std::move(ans);
    } else {
      lo = mid + 1;
    }
  }
  if (!best || best->width > lo) best = decide_emwidth(g, lo, ec);
  std::cout << "emw = " << lo << '\n';
  if (!cfg.output.empty()) write_file(cfg.output, print_tree_decomposition(*best->decomposition, n));
  return kYes;
}

std::string face_text(const PlaneGraph& g, FaceId f) {
  std::ostringstream os;
  os << "face " << f << " (";
  bool first = true;
  for (DartId d : g.face(f).boundary_walk) {
    os << (first ? "" : " ") << g.origin(d);
    first = false;
  }
  os << ')';
  return os.str();
}

int cmd_validate(const RunConfig& cfg) {
  const PlaneGraph g = parse_plane_graph(read_file(cfg.input));
  int universe = 0;
  const TreeDecomposition t = parse_tree_decomposition(read_file(cfg.decomposition), &universe);
  if (universe != g.num_vertices()) {
    std::cerr << "error: decomposition covers " << universe << " vertices, graph has " << g.num_vertices() << '\n';
    return kError;
  }
  if (t.num_nodes() == 0) {
    std::cout << (g.num_vertices() == 0 ? "width -1, properties 1-4: ok\n" : "empty decomposition\n");
    return g.num_vertices() == 0 ? kYes : kNo;
  }
  const ValidationReport rep = validate_em_decomposition(g, t);
  std::cout << "width " << width(t);
  if (rep.ok()) {
    std::cout << ", properties 1-4: ok\n";
    return kYes;
  }
  std::cout << '\n';
  if (!rep.is_tree) std::cout << "tree edges: not a tree\n";
  if (!rep.vertex_coverage) std::cout << "property 1 fails: vertex " << rep.uncovered_vertex.value_or(-1) << " in no bag\n";
  if (!rep.edge_coverage && rep.uncovered_edge) {
    std::cout << "property 2 fails: edge " << rep.uncovered_edge->first << "-" << rep.uncovered_edge->second
              << " in no bag\n";
  }
  if (!rep.subtree_connectivity) {
    std::cout << "property 3 fails: bags of vertex " << rep.disconnected_vertex.value_or(-1) << " are disconnected\n";
  }
  if (!rep.face_coverage && rep.uncovered_face) {
    std::cout << "property 4 fails: " << face_text(g, *rep.uncovered_face) << " in no bag\n";
  }
  return kNo;
}

GadgetSpec parse_gadget(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidSpec, "gadget spec must be p,q,k[,n]: " + text);
    }
  }
  if (parts.size() != 3 && parts.size() != 4) throw Error(ErrorCode::kInvalidSpec, "gadget spec must be p,q,k[,n]");
  return {parts[0], parts[1], parts[2], parts.size() == 4 ? parts[3] : 0};
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.random == !cfg.gadget.empty()) {
    std::cerr << "error: give exactly one of --gadget and --random\n";
    return kError;
  }
  PlaneGraph g;
  if (cfg.random) {
    if (cfg.n < 1) throw Error(ErrorCode::kInvalidSpec, "--n must be positive");
    corpus::RandomOptions opt;
    opt.n = cfg.n;
    g = corpus::random_plane_graph(opt, cfg.seed);
  } else {
    g = generate_gadget(parse_gadget(cfg.gadget));
  }
  emit(cfg, print_plane_graph(g));
  return kYes;
}

void print_family(const RFamily& f) {
  std::cout << "witness: " << f.r() << "-family on " << f.a << "," << f.b << " members";
  for (VertexId v : f.members) std::cout << ' ' << v;
  std::cout << (f.nicely_embedded ? " (nicely embedded)" : "") << '\n';
}

int cmd_matching(const RunConfig& cfg) {
  const PlaneGraph g = parse_plane_graph(read_file(cfg.input));
  const AbstractGraph ug = g.underlying();
  const int n = g.num_vertices();
  Matching m;
  long bound = 0;
  try {
    if (cfg.mode == "max") {
      m = maximum_matching(ug);
      bound = m.size();
    } else if (cfg.mode == "greedy") {
      m = greedy_maximal_matching(g);
      bound = (maximum_matching(ug).size() + 1) / 2;
    } else if (cfg.mode == "no-family") {
      const MatchingResult res = matching_no_r_family(g, cfg.r);
      m = res.matching;
      bound = (n + 12L * cfg.r - 4) / (12L * cfg.r - 3);
      if (cfg.trace) std::cout << "case " << res.trace.case_tag << (res.trace.fallback ? " (fallback)" : "") << '\n';
    } else if (cfg.mode == "no-nice-family") {
      const MatchingResult res = matching_no_nice_family(g);
      m = res.matching;
      bound = (n + 36) / 37;
      if (cfg.trace) std::cout << "case " << res.trace.case_tag << (res.trace.fallback ? " (fallback)" : "") << '\n';
    } else {
      std::cerr << "error: unknown mode " << cfg.mode << '\n';
      return kError;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPreconditionViolated) throw;
    std::cerr << e.what() << '\n';
    const int r_min = cfg.mode == "no-family" ? std::max(3, cfg.r) : 3;
    for (const RFamily& f : find_r_families(g, r_min)) {
      if (cfg.mode == "no-family" || f.nicely_embedded) {
        print_family(f);
        break;
      }
    }
    return kError;
  }
  const bool pass = is_matching(ug, m) && m.size() >= bound;
  std::cout << "matching:";
  for (EdgeId e : m.edges) {
    const auto [u, v] = g.endpoints(e);
    std::cout << ' ' << u << '-' << v;
  }
  std::cout << "\nsize " << m.size() << '\n';
  std::string name = cfg.instance.empty() ? std::filesystem::path(cfg.input).stem().string() : cfg.instance;
  std::ostringstream row;
  row << name << ',' << n << ',' << g.num_edges() << ',' << cfg.mode << ',' << m.size() << ',' << bound << ','
      << (pass ? "true" : "false") << '\n';
  const std::string header = "instance,n,m,mode,value,bound,pass\n";
  if (cfg.output.empty()) {
    std::cout << header << row.str();
  } else {
    const bool fresh = !std::filesystem::exists(cfg.output) || std::filesystem::file_size(cfg.output) == 0;
    std::ofstream out(cfg.output, std::ios::app);
    if (!out) throw Error(ErrorCode::kParseError, "cannot write " + cfg.output);
    if (fresh) out << header;
    out << row.str();
  }
  return pass ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"em-width of plane graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* emw_cmd = app.add_subcommand("emw", "decide em-width <= k, or find it with --search");
  emw_cmd->add_option("--input", cfg.input, ".pg file")->required();
  emw_cmd->add_option("--k", cfg.k, "width to test")->check(CLI::NonNegativeNumber);
  emw_cmd->add_flag("--search", cfg.search, "binary search for the exact value");
  emw_cmd->add_option("--output", cfg.output, "witness .td file");
  emw_cmd->add_flag("--trace", cfg.trace, "print per-level recursion statistics");
  emw_cmd->add_option("--exact-cap", cfg.exact_cap, "largest instance given to the exact solver")
      ->check(CLI::PositiveNumber);

  auto* val_cmd = app.add_subcommand("validate", "check a .td against a .pg");
  val_cmd->add_option("--input", cfg.input, ".pg file")->required();
  val_cmd->add_option("--td", cfg.decomposition, ".td file")->required();

  auto* gen_cmd = app.add_subcommand("generate", "write a gadget or a random plane graph as .pg");
  gen_cmd->add_option("--gadget", cfg.gadget, "p,q,k[,n]");
  gen_cmd->add_flag("--random", cfg.random, "seeded random plane graph");
  gen_cmd->add_option("--n", cfg.n, "vertices for --random");
  gen_cmd->add_option("--seed", cfg.seed, "seed for --random");
  gen_cmd->add_option("--output", cfg.output, "target file (default stdout)");

  auto* match_cmd = app.add_subcommand("matching", "matching constructions with their size bounds");
  match_cmd->add_option("--input", cfg.input, ".pg file")->required();
  match_cmd->add_option("--mode", cfg.mode, "max | greedy | no-family | no-nice-family")
      ->check(CLI::IsMember({"max", "greedy", "no-family", "no-nice-family"}));
  match_cmd->add_option("--r", cfg.r, "family size excluded by no-family")->check(CLI::Range(3, 1 << 20));
  match_cmd->add_option("--instance", cfg.instance, "name for the CSV row");
  match_cmd->add_option("--output", cfg.output, "append the CSV row here");
  match_cmd->add_flag("--trace", cfg.trace, "print the construction case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*emw_cmd) return cmd_emw(cfg);
    if (*val_cmd) return cmd_validate(cfg);
    if (*gen_cmd) return cmd_generate(cfg);
    if (*match_cmd) return cmd_matching(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
