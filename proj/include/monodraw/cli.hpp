#pragma once
// Command-line front end.  run() is separate from main() so the tests can
// drive every subcommand in-process.
//
// Exit codes: 0 success / property holds, 2 well-formed input for which the
// checked property is false, 1 usage or input error.
//
// Machine-readable output is one key=value per line unless noted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "monodraw/classify.hpp"
#include "monodraw/construct.hpp"
#include "monodraw/search.hpp"
#include "monodraw/shellab.hpp"
#include "monodraw/signature.hpp"
#include "monodraw/stats.hpp"
#include "monodraw/transform.hpp"

namespace monodraw::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailed = 2;

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad order entry '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("bad order entry '" + tok + "'");
    order.push_back(v);
  }
  return order;
}

inline std::string order_str(const std::vector<int>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? "," : "") + std::to_string(order[i]);
  return s;
}

/// Rejects a signature that fails `level`, printing the verdict.
inline bool require_level(const SignatureFunction& s, Level level, std::ostream& out) {
  const Verdict v = check_level(s, level);
  if (v.valid) return true;
  out << "valid=0\nlevel=" << to_string(level) << "\nwitness=" << v.witness->str() << '\n';
  return false;
}

struct SearchFlags {
  int n = 0;
  std::string level = "simple";
  bool long_run = false;
  int threads = 1;
  int shard = 0;
  std::string checkpoint;
  bool resume = false;
  double max_seconds = 0;
  std::uint64_t max_nodes = 0;
  bool subdrawing_bound = false;
};

inline void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("-n", f.n, "number of vertices")->required()->check(CLI::Range(1, 12));
  cmd->add_flag("--long", f.long_run, "allow n >= 9 (long-running)");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("--shard", f.shard, "split the tree into prefixes on this many vertices");
  cmd->add_option("--checkpoint", f.checkpoint, "write a checkpoint after every finished prefix");
  cmd->add_flag("--resume", f.resume, "continue from --checkpoint");
  cmd->add_option("--max-seconds", f.max_seconds, "wall-clock budget (0 = none)");
  cmd->add_option("--max-nodes", f.max_nodes, "node budget (0 = none)");
  cmd->add_flag("--subdrawing-bound", f.subdrawing_bound, "extra pruning from optima of smaller n");
}

inline SearchResult run_minimize(const SearchFlags& f, std::ostream& err) {
  if (f.n >= 9 && !f.long_run) throw InputError("n >= 9 needs --long");
  if (f.resume && f.checkpoint.empty()) throw InputError("--resume needs --checkpoint");
  SearchConfig cfg;
  cfg.n = f.n;
  cfg.level = level_from_string(f.level);
  cfg.mode = SearchMode::Minimize;
  cfg.threads = f.threads;
  cfg.shard_vertices = f.shard;
  if (cfg.shard_vertices == 0 && (f.threads > 1 || !f.checkpoint.empty()) && f.n > 4) {
    cfg.shard_vertices = std::min(f.n - 1, 6);
  }
  cfg.limits.max_seconds = f.max_seconds;
  cfg.limits.max_nodes = f.max_nodes;
  cfg.subdrawing_bound = f.subdrawing_bound;
  CheckpointOptions ck{f.checkpoint, f.resume};
  std::function<void(std::size_t, std::size_t, std::int64_t)> progress;
  if (f.long_run) {
    progress = [&err](std::size_t done, std::size_t total, std::int64_t inc) {
      err << "progress " << done << "/" << total << " incumbent=" << inc << '\n';
    };
  }
  return min_crossing_search(cfg, ck, progress);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"monodraw: signature functions of x-monotone drawings of complete graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.footer(
      "SIG file: line 1 'sig v1', line 2 'n <n>', line 3 the C(n,3) signs '+'/'-' of the triples\n"
      "(i,j,k), i<j<k, in lexicographic order ('-' = v_j above edge v_i v_k). '-' reads stdin.\n"
      "Exit codes: 0 ok, 1 usage or input error, 2 check failed.");

  std::string file, output, level = "simple", order;
  bool find = false, count_only = false;
  detail::SearchFlags sf;

  auto* validate = app.add_subcommand("validate", "check a SIG file against a drawing class (exit 2 if invalid)");
  validate->add_option("file", file, "SIG file, '-' for stdin")->required();
  validate->add_option("--level", level, "semisimple | simple | pseudolinear");

  auto* stats = app.add_subcommand("stats", "k-edge vector and crossing identities");
  stats->add_option("file", file)->required();

  auto* realize_cmd = app.add_subcommand("realize", "draw a signature; output format from the -o extension (.svg or .json)");
  realize_cmd->add_option("file", file)->required();
  realize_cmd->add_option("-o,--output", output, "OUT.svg or OUT.json (JSON to stdout if omitted)");
  realize_cmd->footer(
      "JSON: {\"n\", \"vertices\": [[x,y],...], \"edges\": [{\"u\",\"v\",\"polyline\": [[x,y],...]}],\n"
      "\"crossings\"}; vertex v_i sits at (i, 0). SVG: one <polyline data-edge=\"u-v\"> per edge,\n"
      "one <path class=\"crossing\"> per crossing, one <circle> per vertex. See docs/drawing.schema.json.");

  auto* enumerate = app.add_subcommand("enumerate", "list or count all valid signatures");
  enumerate->add_option("-n", sf.n)->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--level", sf.level, "semisimple | simple | pseudolinear");
  enumerate->add_flag("--count", count_only, "print only the count");
  enumerate->add_flag("--long", sf.long_run, "allow n >= 8");
  enumerate->add_option("--threads", sf.threads)->check(CLI::Range(1, 256));
  enumerate->add_option("--max-seconds", sf.max_seconds);
  enumerate->add_option("--max-nodes", sf.max_nodes);

  auto* minimize = app.add_subcommand("minimize", "minimum crossing number over valid signatures");
  detail::add_search_flags(minimize, sf);
  minimize->footer(
      "Checkpoint: 'ckpt v1', 'n <n>', 'level <level>', 'shard <m> <prefixes>', 'incumbent <c>|none',\n"
      "then one 'done <index>' per finished prefix and one 'min <signs>' per minimal signature found.");
  minimize->add_option("--level", sf.level, "semisimple | simple | pseudolinear");
  minimize->add_flag("--list", count_only, "also print every minimal signature");

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical representative of the switching class");
  canonical_cmd->add_option("file", file)->required();

  auto* classes = app.add_subcommand("classes", "switching classes among crossing-minimal signatures");
  detail::add_search_flags(classes, sf);

  auto* shelling = app.add_subcommand("shelling", "order-type level shelling check");
  shelling->add_option("file", file)->required();
  auto* order_opt = shelling->add_option("--order", order, "comma-separated vertex order, e.g. 2,1,3,4");
  auto* find_opt = shelling->add_flag("--find", find, "search for the first shellable order");
  order_opt->excludes(find_opt);

  auto* lambda = app.add_subcommand("lambda", "lambda matrix of a signature (LAM format)");
  lambda->add_option("file", file)->required();
  lambda->add_option("-o,--output", output);
  lambda->footer("LAM file: 'lam v1', 'n <n>', then n rows of n space-separated integers; entry (i,j) counts\n"
                 "the vertices to the left of the directed edge v_i -> v_j.");

  auto* unlambda = app.add_subcommand("unlambda", "signature from a LAM file (exit 2 if not realizable)");
  unlambda->add_option("file", file)->required();
  unlambda->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*validate) {
      const Level lv = level_from_string(level);
      const SignatureFunction s = parse_signature(detail::read_input(file));
      const Verdict v = check_level(s, lv);
      out << "valid=" << (v.valid ? 1 : 0) << "\nlevel=" << to_string(lv) << '\n';
      if (!v.valid) out << "witness=" << v.witness->str() << '\n';
      return v.valid ? kOk : kFailed;
    }

    if (*stats) {
      const SignatureFunction s = parse_signature(detail::read_input(file));
      if (s.n() < 3) throw InputError("stats needs n >= 3");
      if (!detail::require_level(s, Level::Semisimple, out)) return kFailed;
      const EdgeStats st = k_edge_vector(s);
      const IdentityReport r = identities_from_stats(st);
      out << "n=" << s.n() << "\nsimple=" << (check_simple(s).valid ? 1 : 0) << "\nE_k=" << detail::join(st.e_k)
          << "\nE_le_k=" << detail::join(st.le) << "\nE_lele_k=" << detail::join(st.lele)
          << "\nE_lelele_k=" << detail::join(st.lelele) << "\nconvex_quads=" << st.convex_quads
          << "\ncr_from_ek=" << r.cr_from_ek << "\ncr_from_lele=" << r.cr_from_lele
          << "\nlelele_compact=" << r.lelele_compact << "\nidentity=" << (r.all_equal ? "ok" : "mismatch") << '\n';
      return r.all_equal ? kOk : kFailed;
    }

    if (*realize_cmd) {
      const SignatureFunction s = parse_signature(detail::read_input(file));
      if (!detail::require_level(s, Level::Semisimple, out)) return kFailed;
      const Drawing d = realize(s);
      const bool svg = output.size() >= 4 && output.substr(output.size() - 4) == ".svg";
      const bool json = output.empty() || output == "-" ||
                        (output.size() >= 5 && output.substr(output.size() - 5) == ".json");
      if (!svg && !json) throw InputError("output must end in .svg or .json");
      detail::write_output(output, svg ? to_svg(d) : to_json(d).dump(2) + "\n", out);
      if (!output.empty() && output != "-") {
        out << "crossings=" << drawing_crossings(d).total_crossings << "\nwrote=" << output << '\n';
      }
      return kOk;
    }

    if (*enumerate) {
      if (sf.n >= 8 && !sf.long_run) throw InputError("n >= 8 needs --long");
      SearchConfig cfg;
      cfg.n = sf.n;
      cfg.level = level_from_string(sf.level);
      cfg.threads = sf.threads;
      cfg.shard_vertices = sf.threads > 1 ? std::min(sf.n - 1, 5) : 0;
      cfg.limits = {sf.max_nodes, sf.max_seconds};
      std::vector<std::string> sigs;
      const EnumerateStats st = enumerate_valid(cfg, [&](const SignatureFunction& s) {
        if (!count_only) sigs.push_back(s.sign_string());
      });
      std::sort(sigs.begin(), sigs.end());
      for (const auto& x : sigs) out << x << '\n';
      out << "count=" << st.visited << "\nnodes=" << st.nodes << "\ncomplete=" << (st.complete ? 1 : 0) << '\n';
      return kOk;
    }

    if (*minimize) {
      const SearchResult r = detail::run_minimize(sf, err);
      if (count_only)
        for (const auto& s : r.minimal_signatures) out << s.sign_string() << '\n';
      out << "minimum=" << r.minimum << " Z=" << zeta(sf.n) << " classes=" << r.class_count
          << " minimal_count=" << r.minimal_signatures.size() << " complete=" << (r.complete ? 1 : 0)
          << " nodes=" << r.nodes_visited << '\n';
      return kOk;
    }

    if (*classes) {
      sf.level = "simple";
      const SearchResult r = detail::run_minimize(sf, err);
      for (const auto& rep : r.class_representatives) {
        const EquivClass cls = equivalence_class(rep);
        bool two_page = false;
        for (const auto& m : cls.members) two_page = two_page || is_two_page(SignatureFunction::from_string(rep.n(), m));
        out << "class " << rep.sign_string() << " members=" << cls.members.size() << " two_page=" << (two_page ? 1 : 0)
            << '\n';
      }
      out << "classes=" << r.class_count << " minimum=" << r.minimum << " complete=" << (r.complete ? 1 : 0) << '\n';
      return kOk;
    }

    if (*canonical_cmd) {
      const SignatureFunction s = parse_signature(detail::read_input(file));
      if (!detail::require_level(s, Level::Simple, out)) return kFailed;
      out << emit_signature(canonical(s));
      return kOk;
    }

    if (*shelling) {
      const SignatureFunction s = parse_signature(detail::read_input(file));
      if (!detail::require_level(s, Level::Semisimple, out)) return kFailed;
      if (!order.empty()) {
        const std::vector<int> ord = detail::parse_order(order);
        require_permutation(ord, s.n());
        const bool ok = is_shellable_order(s, ord);
        out << "shellable=" << (ok ? 1 : 0) << "\norder=" << detail::order_str(ord) << '\n';
        return ok ? kOk : kFailed;
      }
      const auto found = find_shelling_order(s);
      out << "found=" << (found ? 1 : 0) << '\n';
      if (found) out << "order=" << detail::order_str(*found) << '\n';
      return found ? kOk : kFailed;
    }

    if (*lambda) {
      const SignatureFunction s = parse_signature(detail::read_input(file));
      if (!detail::require_level(s, Level::Semisimple, out)) return kFailed;
      detail::write_output(output, emit_lambda(lambda_matrix(s)), out);
      return kOk;
    }

    if (*unlambda) {
      const LambdaMatrix m = parse_lambda(detail::read_input(file));
      SignatureFunction s;
      try {
        s = signature_from_lambda(m);
      } catch (const InputError& e) {
        out << "valid=0\nreason=" << e.what() << '\n';
        return kFailed;
      }
      detail::write_output(output, emit_signature(s), out);
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monodraw::cli
