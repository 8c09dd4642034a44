#pragma once
// Exhaustive enumeration of valid signatures and branch-and-bound crossing
// minimization.
//
// The search extends a valid signature on [m] to [m+1] by assigning the new
// triples (i,j,m+1) in lexicographic (i,j) order.  With that order the triple
// (b,c,m+1) completes every 4-tuple (a,b,c,m+1) with a < b, and (a,d,m+1)
// completes every 5-tuple (a,b,c,d,m+1), so each constraint is checked
// exactly once, at the moment its last sign is fixed.
//
// Minimization prunes a node when the convex 4-tuples already complete
// exceed the incumbent; adding vertices never removes a convex 4-tuple.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "monodraw/classify.hpp"
#include "monodraw/signature.hpp"
#include "monodraw/stats.hpp"
#include "monodraw/transform.hpp"

namespace monodraw {

enum class SearchMode { EnumerateAll, Minimize };

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;       // 0 = unlimited
};

struct SearchConfig {
  int n = 0;
  Level level = Level::Simple;
  SearchMode mode = SearchMode::EnumerateAll;
  std::optional<std::int64_t> best_bound;    // prune everything above this
  std::optional<SignatureFunction> prefix;  // fixed signature on [m], m <= n
  SearchLimits limits;
  int threads = 1;
  /// Vertex count of the prefixes used to shard the tree (0 = no sharding).
  int shard_vertices = 0;
  /// Minimization only: also prune with the sub-drawing bound
  /// c_m + (n-m) * max(0, opt(m+1) - c_m) once [m] is complete, where opt(p)
  /// is the exact optimum for p vertices (computed recursively).
  bool subdrawing_bound = false;
};

struct EnumerateStats {
  std::uint64_t visited = 0;  // complete valid signatures
  std::uint64_t nodes = 0;    // sign assignments tried
  bool complete = true;
};

struct SearchResult {
  std::int64_t minimum = -1;
  std::vector<SignatureFunction> minimal_signatures;  // sorted
  std::size_t class_count = 0;
  std::vector<SignatureFunction> class_representatives;  // sorted
  std::uint64_t nodes_visited = 0;
  bool complete = true;
};

namespace detail {

class SearchEngine {
 public:
  using LeafFn = std::function<void(const SignatureFunction&, std::int64_t convex)>;

  SearchEngine(int n, Level level) : n_(n), level_(level), stride_(n + 1) {
    if (n < 1) throw InputError("search needs n >= 1");
    table_.assign(static_cast<std::size_t>(stride_ * stride_ * stride_), 0);
    allowed_ = level == Level::Pseudolinear ? kPseudolinearForms : kSemisimpleForms;
    for (int m = 3; m <= n; ++m)
      for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j) schedule_.push_back({i, j, m});
    // Positions where [m] becomes complete: after all triples with max <= m.
    complete_at_.assign(schedule_.size() + 1, 0);
    for (int m = 3; m <= n; ++m) complete_at_[static_cast<std::size_t>(binom(m, 3))] = m;
  }

  int n() const { return n_; }

  /// Loads a fixed prefix; returns false if it violates the level.
  bool load_prefix(const SignatureFunction& p) {
    if (p.n() > n_) throw InputError("prefix has more vertices than the search");
    if (!check_level(p, level_).valid) return false;
    start_ = p.n() >= 3 ? static_cast<std::size_t>(binom(p.n(), 3)) : 0;
    for (int i = 1; i <= p.n(); ++i)
      for (int j = i + 1; j <= p.n(); ++j)
        for (int k = j + 1; k <= p.n(); ++k) at(i, j, k) = static_cast<std::uint8_t>(p(i, j, k));
    convex_ = 0;
    for (int a = 1; a <= p.n(); ++a)
      for (int b = a + 1; b <= p.n(); ++b)
        for (int c = b + 1; c <= p.n(); ++c)
          for (int d = c + 1; d <= p.n(); ++d) convex_ += kConvexForms[code(a, b, c, d)];
    return true;
  }

  void fix_first_sign(bool v) { fix_first_ = v; }
  void set_bound(const std::atomic<std::int64_t>* bound) { bound_ = bound; }
  void set_subdrawing_bound(std::vector<std::int64_t> opt) { opt_ = std::move(opt); }
  void set_limits(SearchLimits l) {
    limits_ = l;
    t0_ = std::chrono::steady_clock::now();
  }
  void set_shared_stop(std::atomic<bool>* stop) { stop_ = stop; }

  void run(const LeafFn& leaf) {
    leaf_ = &leaf;
    dfs(start_);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }
  bool aborted() const { return aborted_; }

 private:
  struct Triple {
    int i, j, k;
  };

  std::uint8_t& at(int i, int j, int k) {
    return table_[static_cast<std::size_t>((i * stride_ + j) * stride_ + k)];
  }
  std::uint8_t at(int i, int j, int k) const {
    return table_[static_cast<std::size_t>((i * stride_ + j) * stride_ + k)];
  }
  unsigned code(int a, int b, int c, int d) const {
    return (static_cast<unsigned>(at(a, b, c)) << 3) | (static_cast<unsigned>(at(a, b, d)) << 2) |
           (static_cast<unsigned>(at(a, c, d)) << 1) | static_cast<unsigned>(at(b, c, d));
  }

  bool over_budget() {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return true;
    if (limits_.max_nodes && nodes_ >= limits_.max_nodes) return true;
    if (limits_.max_seconds > 0 && (nodes_ & 0xFFF) == 0) {
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
      if (dt > limits_.max_seconds) return true;
    }
    return false;
  }

  std::int64_t bound() const {
    return bound_ ? bound_->load(std::memory_order_relaxed) : std::numeric_limits<std::int64_t>::max();
  }

  SignatureFunction current() const {
    SignatureFunction s(n_);
    std::size_t r = 0;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k) s.set_rank(r++, static_cast<Sign>(at(i, j, k)));
    return s;
  }

  void dfs(std::size_t pos) {
    if (aborted_) return;
    if (pos == schedule_.size()) {
      ++leaves_;
      (*leaf_)(current(), convex_);
      return;
    }
    if (const int m = complete_at_[pos]; m && static_cast<std::size_t>(m + 1) < opt_.size()) {
      const std::int64_t need = opt_[static_cast<std::size_t>(m + 1)] - convex_;
      if (convex_ + (n_ - m) * std::max<std::int64_t>(0, need) > bound()) return;
    }
    const auto [i, j, m] = schedule_[pos];
    const bool simple = level_ == Level::Simple;
    for (std::uint8_t sg = 0; sg < 2; ++sg) {
      if (fix_first_ && pos == 0 && sg == 1) break;
      if (over_budget()) {
        aborted_ = true;
        return;
      }
      ++nodes_;
      at(i, j, m) = sg;
      std::int64_t added = 0;
      bool ok = true;
      for (int a = 1; a < i; ++a) {
        const unsigned c = code(a, i, j, m);
        if (!allowed_[c]) {
          ok = false;
          break;
        }
        added += kConvexForms[c];
      }
      if (ok && simple) {
        // 5-tuples (i,b,c,j,m): s(i,b,m) = s(i,j,m) = s(b,c,j) != s(i,c,m)
        for (int b = i + 1; b < j && ok; ++b) {
          if (at(i, b, m) != sg) continue;
          for (int c = b + 1; c < j; ++c)
            if (at(b, c, j) == sg && at(i, c, m) != sg) {
              ok = false;
              break;
            }
        }
      }
      if (!ok) continue;
      convex_ += added;
      if (convex_ <= bound()) dfs(pos + 1);
      convex_ -= added;
      if (aborted_) return;
    }
  }

  int n_;
  Level level_;
  int stride_;
  std::vector<std::uint8_t> table_;
  std::array<bool, 16> allowed_{};
  std::vector<Triple> schedule_;
  std::vector<int> complete_at_;
  std::vector<std::int64_t> opt_;
  std::size_t start_ = 0;
  std::int64_t convex_ = 0;
  bool fix_first_ = false;
  const std::atomic<std::int64_t>* bound_ = nullptr;
  std::atomic<bool>* stop_ = nullptr;
  SearchLimits limits_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
  const LeafFn* leaf_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  bool aborted_ = false;
};

/// All valid signatures on [m] (as prefixes), in search order.
inline std::vector<SignatureFunction> shard_prefixes(int m, Level level, bool fix_first) {
  std::vector<SignatureFunction> out;
  SearchEngine e(m, level);
  e.fix_first_sign(fix_first);
  const SearchEngine::LeafFn f = [&](const SignatureFunction& s, std::int64_t) { out.push_back(s); };
  e.run(f);
  return out;
}

}  // namespace detail

/// Visits every valid signature (at the configured level) exactly once, in
/// depth-first order, '+' before '-'.  With threads > 1 the visitor is called
/// under a mutex and the order across shards is unspecified.
inline EnumerateStats enumerate_valid(const SearchConfig& cfg,
                                      const std::function<void(const SignatureFunction&)>& visit) {
  EnumerateStats st;
  const auto t0 = std::chrono::steady_clock::now();
  auto run_one = [&](const std::optional<SignatureFunction>& prefix, SearchLimits lim, std::atomic<bool>* stop,
                     const detail::SearchEngine::LeafFn& leaf, EnumerateStats& out) {
    detail::SearchEngine e(cfg.n, cfg.level);
    if (prefix && !e.load_prefix(*prefix)) return;
    e.set_limits(lim);
    e.set_shared_stop(stop);
    e.run(leaf);
    out.visited += e.leaves();
    out.nodes += e.nodes();
    if (e.aborted()) out.complete = false;
  };

  const bool shard = cfg.threads > 1 && cfg.shard_vertices >= 3 && cfg.shard_vertices < cfg.n && !cfg.prefix;
  if (!shard) {
    const detail::SearchEngine::LeafFn leaf = [&](const SignatureFunction& s, std::int64_t) { visit(s); };
    run_one(cfg.prefix, cfg.limits, nullptr, leaf, st);
    return st;
  }

  const auto prefixes = detail::shard_prefixes(cfg.shard_vertices, cfg.level, false);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<EnumerateStats> per(static_cast<std::size_t>(cfg.threads));
  std::vector<std::thread> pool;
  for (int t = 0; t < cfg.threads; ++t) {
    pool.emplace_back([&, t] {
      const detail::SearchEngine::LeafFn leaf = [&](const SignatureFunction& s, std::int64_t) {
        std::lock_guard lock(mu);
        visit(s);
      };
      for (std::size_t k; (k = next.fetch_add(1)) < prefixes.size();) {
        SearchLimits lim;
        if (cfg.limits.max_seconds > 0) {
          const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          lim.max_seconds = std::max(1e-9, cfg.limits.max_seconds - used);
        }
        run_one(prefixes[k], lim, &stop, leaf, per[static_cast<std::size_t>(t)]);
        if (!per[static_cast<std::size_t>(t)].complete) stop = true;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : per) {
    st.visited += p.visited;
    st.nodes += p.nodes;
    st.complete = st.complete && p.complete;
  }
  if (stop) st.complete = false;
  return st;
}

/// Number of switching classes among a set of signatures that is closed
/// under the switching operations (e.g. all minimal signatures).  Returns
/// the sorted class representatives.
inline std::vector<SignatureFunction> class_representatives(const std::vector<SignatureFunction>& sigs) {
  std::unordered_set<std::string> covered;
  std::vector<SignatureFunction> reps;
  for (const auto& s : sigs) {
    if (covered.contains(s.sign_string())) continue;
    const EquivClass cls = equivalence_class(s);
    for (const auto& m : cls.members) covered.insert(m);
    reps.push_back(SignatureFunction::from_string(s.n(), cls.representative));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace detail {

/// Shared minimization state.  The incumbent is read without locking by the
/// workers; a stale value only weakens pruning.
struct MinimizeState {
  std::atomic<std::int64_t> incumbent{std::numeric_limits<std::int64_t>::max()};
  std::mutex mu;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<SignatureFunction> minima;
  std::uint64_t nodes = 0;
  bool complete = true;

  void offer(const SignatureFunction& s, std::int64_t c) {
    std::lock_guard lock(mu);
    if (c < best) {
      best = c;
      minima.clear();
      std::int64_t cur = incumbent.load();
      while (c < cur && !incumbent.compare_exchange_weak(cur, c)) {
      }
    }
    if (c == best) minima.push_back(s);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Checkpoint format
//
//   ckpt v1
//   n <n>
//   level <semisimple|simple|pseudolinear>
//   shard <m> <number of prefixes>
//   incumbent <value or none>
//   done <prefix index>            (one line per finished prefix)
//   min <sign string>              (one line per minimum found so far)
//
// Prefixes are the valid signatures on [m] with sigma(1,2,3) = '+', numbered
// in enumeration order, so the index list is stable across runs.

struct Checkpoint {
  int n = 0;
  Level level = Level::Simple;
  int shard_vertices = 0;
  std::size_t shard_count = 0;
  std::optional<std::int64_t> incumbent;
  std::set<std::size_t> done;
  std::vector<std::string> minima;
};

inline std::string emit_checkpoint(const Checkpoint& c) {
  std::ostringstream o;
  o << "ckpt v1\nn " << c.n << "\nlevel " << to_string(c.level) << "\nshard " << c.shard_vertices << ' '
    << c.shard_count << "\nincumbent ";
  if (c.incumbent) o << *c.incumbent; else o << "none";
  o << '\n';
  for (std::size_t d : c.done) o << "done " << d << '\n';
  for (const auto& m : c.minima) o << "min " << m << '\n';
  return o.str();
}

inline Checkpoint parse_checkpoint(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](const char* key) {
    if (!std::getline(in, line)) throw InputError("checkpoint: truncated");
    const std::string k = std::string(key) + " ";
    if (line.rfind(k, 0) != 0) throw InputError("checkpoint: expected '" + std::string(key) + "'");
    return line.substr(k.size());
  };
  auto to_int = [](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("checkpoint: bad number '" + s + "'");
    }
    if (used != s.size() || v < 0) throw InputError("checkpoint: bad number '" + s + "'");
    return v;
  };
  if (!std::getline(in, line) || line != "ckpt v1") throw InputError("checkpoint: bad header");
  Checkpoint c;
  c.n = static_cast<int>(to_int(expect("n")));
  c.level = level_from_string(expect("level"));
  {
    const std::string sh = expect("shard");
    const auto sp = sh.find(' ');
    if (sp == std::string::npos) throw InputError("checkpoint: bad shard line");
    c.shard_vertices = static_cast<int>(to_int(sh.substr(0, sp)));
    c.shard_count = static_cast<std::size_t>(to_int(sh.substr(sp + 1)));
  }
  if (const std::string inc = expect("incumbent"); inc != "none") c.incumbent = to_int(inc);
  const std::int64_t len = binom(c.n, 3);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("done ", 0) == 0) {
      const auto d = static_cast<std::size_t>(to_int(line.substr(5)));
      if (d >= c.shard_count) throw InputError("checkpoint: prefix index out of range");
      c.done.insert(d);
    } else if (line.rfind("min ", 0) == 0) {
      std::string m = line.substr(4);
      if (static_cast<std::int64_t>(m.size()) != len) throw InputError("checkpoint: bad minimum length");
      SignatureFunction::from_string(c.n, m);  // validates characters
      c.minima.push_back(std::move(m));
    } else {
      throw InputError("checkpoint: unexpected line '" + line + "'");
    }
  }
  return c;
}

struct CheckpointOptions {
  std::string path;     // written after every finished prefix; empty = off
  bool resume = false;  // load `path` first and skip finished prefixes
};

inline std::vector<std::int64_t> optimum_table(int n, Level level);

/// Branch and bound for the minimum number of convex 4-tuples.  sigma(1,2,3)
/// is fixed to '+'; the vertically reflected minima are added at the end.
/// With shard_vertices set, the tree is split into prefixes on [m] that are
/// processed by `threads` workers and optionally checkpointed.
inline SearchResult min_crossing_search(const SearchConfig& cfg, const CheckpointOptions& ckpt = {},
                                        const std::function<void(std::size_t done, std::size_t total,
                                                                 std::int64_t incumbent)>& progress = {}) {
  if (cfg.n < 1) throw InputError("minimize needs n >= 1");
  detail::MinimizeState state;
  if (cfg.best_bound) state.incumbent = *cfg.best_bound;
  std::vector<std::int64_t> opt;
  if (cfg.subdrawing_bound && cfg.n >= 5) opt = optimum_table(cfg.n - 1, cfg.level);

  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<bool> stop{false};
  // Returns false when the budget was hit inside this subtree.
  auto run_prefix = [&](const std::optional<SignatureFunction>& prefix) {
    detail::SearchEngine e(cfg.n, cfg.level);
    if (prefix && !e.load_prefix(*prefix)) return true;
    e.fix_first_sign(!prefix);
    e.set_bound(&state.incumbent);
    if (!opt.empty()) e.set_subdrawing_bound(opt);
    SearchLimits lim = cfg.limits;
    if (cfg.limits.max_seconds > 0) {
      const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      lim.max_seconds = std::max(1e-9, cfg.limits.max_seconds - used);
    }
    if (cfg.limits.max_nodes) {
      std::lock_guard lock(state.mu);
      if (state.nodes >= cfg.limits.max_nodes) return false;
      lim.max_nodes = cfg.limits.max_nodes - state.nodes;
    }
    e.set_limits(lim);
    e.set_shared_stop(&stop);
    const detail::SearchEngine::LeafFn leaf = [&](const SignatureFunction& s, std::int64_t c) { state.offer(s, c); };
    e.run(leaf);
    std::lock_guard lock(state.mu);
    state.nodes += e.nodes();
    if (e.aborted()) {
      state.complete = false;
      stop = true;
      return false;
    }
    return true;
  };

  const bool sharded = !cfg.prefix && cfg.shard_vertices >= 3 && cfg.shard_vertices < cfg.n;
  if (!ckpt.path.empty() && !sharded) throw InputError("checkpointing needs a sharded search");

  if (cfg.prefix) {
    run_prefix(cfg.prefix);
  } else if (sharded) {
    const auto prefixes = detail::shard_prefixes(cfg.shard_vertices, cfg.level, true);
    Checkpoint cp;
    cp.n = cfg.n;
    cp.level = cfg.level;
    cp.shard_vertices = cfg.shard_vertices;
    cp.shard_count = prefixes.size();
    if (ckpt.resume) {
      std::ifstream f(ckpt.path);
      if (!f) throw InputError("cannot read checkpoint '" + ckpt.path + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      const Checkpoint old = parse_checkpoint(buf.str());
      if (old.n != cp.n || old.level != cp.level || old.shard_vertices != cp.shard_vertices ||
          old.shard_count != cp.shard_count) {
        throw InputError("checkpoint does not match this search");
      }
      cp.done = old.done;
      if (old.incumbent) {
        std::int64_t cur = state.incumbent.load();
        if (*old.incumbent < cur) state.incumbent = *old.incumbent;
      }
      if (!old.minima.empty()) {
        state.best = old.incumbent.value_or(std::numeric_limits<std::int64_t>::max());
        for (const auto& m : old.minima) state.minima.push_back(SignatureFunction::from_string(cfg.n, m));
      }
    }
    auto save = [&] {
      // caller holds state.mu
      cp.incumbent.reset();
      if (state.best != std::numeric_limits<std::int64_t>::max()) cp.incumbent = state.best;
      cp.minima.clear();
      for (const auto& m : state.minima) cp.minima.push_back(m.sign_string());
      const std::string tmp = ckpt.path + ".tmp";
      {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw InputError("cannot write checkpoint '" + tmp + "'");
        f << emit_checkpoint(cp);
      }
      if (std::rename(tmp.c_str(), ckpt.path.c_str()) != 0) throw InputError("cannot replace checkpoint");
    };

    std::vector<std::size_t> todo;
    for (std::size_t k = 0; k < prefixes.size(); ++k)
      if (!cp.done.contains(k)) todo.push_back(k);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t; !stop && (t = next.fetch_add(1)) < todo.size();) {
        const std::size_t k = todo[t];
        if (!run_prefix(prefixes[k])) break;
        std::lock_guard lock(state.mu);
        cp.done.insert(k);
        if (!ckpt.path.empty()) save();
        if (progress) progress(cp.done.size(), prefixes.size(), state.incumbent.load());
      }
    };
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (cp.done.size() != prefixes.size()) state.complete = false;
  } else {
    run_prefix(std::nullopt);
  }

  SearchResult res;
  res.nodes_visited = state.nodes;
  res.complete = state.complete;
  if (state.minima.empty()) return res;
  res.minimum = state.best;
  std::set<SignatureFunction> all(state.minima.begin(), state.minima.end());
  if (!cfg.prefix) {
    for (const auto& s : state.minima) all.insert(detail::apply_unchecked(s, SwitchOp::vertical_reflect()));
  }
  res.minimal_signatures.assign(all.begin(), all.end());
  if (cfg.level == Level::Simple && !cfg.prefix && res.complete) {
    res.class_representatives = class_representatives(res.minimal_signatures);
    res.class_count = res.class_representatives.size();
  }
  return res;
}
/// for p = 0..n.
inline std::vector<std::int64_t> optimum_table(int n, Level level) {
  std::vector<std::int64_t> opt(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  for (int p = 5; p <= n; ++p) {
    detail::MinimizeState state;
    detail::SearchEngine e(p, level);
    e.fix_first_sign(true);
    e.set_bound(&state.incumbent);
    if (p >= 6) e.set_subdrawing_bound(std::vector<std::int64_t>(opt.begin(), opt.begin() + p));
    const detail::SearchEngine::LeafFn leaf = [&](const SignatureFunction& s, std::int64_t cc) { state.offer(s, cc); };
    e.run(leaf);
    opt[static_cast<std::size_t>(p)] = state.best;
  }
  return opt;
}

// ---------------------------------------------------------------------------
// Empirical bound checks

struct BoundReport {
  int n = 0;
  Level level = Level::Semisimple;
  std::uint64_t signatures = 0;
  std::vector<std::int64_t> min_slack;  // per k, 0 <= k < n/2 - 1
  std::uint64_t violations = 0;
  bool complete = true;
};

namespace detail {
inline BoundReport verify_bound(int n, Level level, bool triple_cumulative, SearchLimits limits) {
  BoundReport rep;
  rep.n = n;
  rep.level = level;
  // integers k with k < n/2 - 1
  const int count_k = std::max(0, (n - 1) / 2);
  rep.min_slack.assign(static_cast<std::size_t>(count_k), std::numeric_limits<std::int64_t>::max());
  SearchConfig cfg;
  cfg.n = n;
  cfg.level = level;
  cfg.limits = limits;
  const auto st = enumerate_valid(cfg, [&](const SignatureFunction& s) {
    ++rep.signatures;
    const EdgeStats es = k_edge_vector(s);
    for (int k = 0; k < count_k; ++k) {
      const std::int64_t have = triple_cumulative ? EdgeStats::get(es.lelele, k) : EdgeStats::get(es.lele, k);
      const std::int64_t need = triple_cumulative ? 3 * binom(k + 4, 4) : 3 * binom(k + 3, 3);
      const std::int64_t slack = have - need;
      auto& ms = rep.min_slack[static_cast<std::size_t>(k)];
      ms = std::min(ms, slack);
      if (slack < 0) ++rep.violations;
    }
  });
  rep.complete = st.complete;
  return rep;
}
}  // namespace detail

/// E_{<=<=k} >= 3 C(k+3,3) over all semisimple-valid signatures on n vertices.
inline BoundReport verify_lele_bound(int n, SearchLimits limits = {}) {
  return detail::verify_bound(n, Level::Semisimple, false, limits);
}

/// E_{<=<=<=k} >= 3 C(k+4,4) over all simple-valid signatures on n vertices.
inline BoundReport verify_lelele_conjecture(int n, SearchLimits limits = {}) {
  return detail::verify_bound(n, Level::Simple, true, limits);
}


// ---------------------------------------------------------------------------
// Random valid signatures

/// A random valid signature: the vertex-incremental order with a random sign
/// tried first at every triple and backtracking on dead ends.  Not uniform.
template <class Rng>
SignatureFunction random_valid_signature(int n, Level level, Rng& rng) {
  if (n < 1) throw InputError("random_valid_signature needs n >= 1");
  struct T {
    int i, j, k;
  };
  std::vector<T> order;
  for (int k = 3; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j) order.push_back({i, j, k});
  const auto& allowed = level == Level::Pseudolinear ? kPseudolinearForms : kSemisimpleForms;
  SignatureFunction s(n);
  auto ok_at = [&](const T& t) {
    for (int a = 1; a < t.i; ++a)
      if (!allowed[quad_code(s, a, t.i, t.j, t.k)]) return false;
    if (level == Level::Simple)
      for (int b = t.i + 1; b < t.j; ++b)
        for (int c = b + 1; c < t.j; ++c)
          if (forbidden_five(s, t.i, b, c, t.j, t.k)) return false;
    return true;
  };
  // tried[p]: number of signs already tried at position p (0, 1 or 2)
  std::vector<int> tried(order.size(), 0);
  std::vector<Sign> first(order.size(), Sign::Plus);
  std::bernoulli_distribution coin(0.5);
  std::size_t p = 0;
  while (p < order.size()) {
    if (tried[p] == 0) first[p] = coin(rng) ? Sign::Minus : Sign::Plus;
    if (tried[p] == 2) {
      tried[p] = 0;
      if (p == 0) throw std::logic_error("no valid signature");  // unreachable: all-plus is valid
      --p;
      continue;
    }
    const Sign sg = tried[p] == 0 ? first[p] : negate(first[p]);
    ++tried[p];
    s.set(order[p].i, order[p].j, order[p].k, sg);
    if (ok_at(order[p])) ++p;
  }
  return s;
}

}  // namespace monodraw
