// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Every quantity is an integer and compared exactly
// (tolerance 0).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "monodraw/cli.hpp"
#include "monodraw/monodraw.hpp"

using namespace monodraw;

namespace {

constexpr std::int64_t kTolerance = 0;  // exact integer comparison throughout

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " | " << detail << std::endl;
  if (!ok) ++failures;
}

bool exact(std::int64_t got, std::int64_t want) { return std::llabs(got - want) <= kTolerance; }

std::string cli_out(const std::vector<std::string>& args) {
  std::vector<std::string> full{"monodraw"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) return "exit=" + std::to_string(code) + " " + err.str();
  return out.str();
}

std::int64_t field(const std::string& text, const std::string& key) {
  const auto p = text.find(key + "=");
  if (p == std::string::npos) return -1;
  return std::stoll(text.substr(p + key.size() + 1));
}

void for_each_valid(int n, Level level, const std::function<void(const SignatureFunction&)>& f) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.level = level;
  enumerate_valid(cfg, f);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);

  // 1 and 2: minimize through the command line for N = 5..8
  {
    const std::int64_t want_min[] = {1, 3, 9, 18};
    const std::int64_t want_cls[] = {1, 1, 5, 3};
    bool ok_min = true, ok_cls = true;
    std::string dmin, dcls;
    for (int n = 5; n <= 8; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::string out = cli_out({"minimize", "-n", std::to_string(n)});
      const double dt = seconds_since(t0);
      const std::int64_t m = field(out, "minimum"), z = field(out, "Z"), c = field(out, "classes");
      const bool complete = field(out, "complete") == 1;
      ok_min = ok_min && complete && exact(m, want_min[n - 5]) && exact(z, want_min[n - 5]);
      ok_cls = ok_cls && complete && exact(c, want_cls[n - 5]);
      char buf[96];
      std::snprintf(buf, sizeof buf, "N=%d min=%lld Z=%lld (%.1fs) ", n, static_cast<long long>(m),
                    static_cast<long long>(z), dt);
      dmin += buf;
      dcls += "N=" + std::to_string(n) + " classes=" + std::to_string(c) + " ";
    }
    report(1, ok_min, "minimize -n N gives Z(N) = 1,3,9,18 for N = 5..8", dmin);
    report(2, ok_cls, "switching classes among minima = 1,1,5,3", dcls);
  }

  // 3: identities, exhaustive n <= 6 plus 10^4 samples with n <= 9
  {
    std::uint64_t checked = 0, bad = 0;
    for (int n = 3; n <= 6; ++n)
      for_each_valid(n, Level::Semisimple, [&](const SignatureFunction& s) {
        ++checked;
        bad += !verify_identities(s).all_equal;
      });
    const std::uint64_t exhaustive = checked;
    std::uniform_int_distribution<int> pick(3, 9);
    for (int t = 0; t < 10000; ++t) {
      const int n = pick(rng);
      const Level l = t % 2 ? Level::Simple : Level::Semisimple;
      ++checked;
      bad += !verify_identities(random_valid_signature(n, l, rng)).all_equal;
    }
    report(3, bad == 0, "IdentityReport.all_equal on every tested signature",
           "exhaustive=" + std::to_string(exhaustive) + " sampled=10000 failures=" + std::to_string(bad));
  }

  // 4: E_{<=<=k} >= 3 C(k+3,3), exhaustive semisimple n <= 7
  {
    bool ok = true;
    std::string d;
    for (int n = 4; n <= 7; ++n) {
      const BoundReport r = verify_lele_bound(n);
      ok = ok && r.complete && r.violations == 0;
      d += "n=" + std::to_string(n) + " sigs=" + std::to_string(r.signatures) +
           " viol=" + std::to_string(r.violations) + " slack=[";
      for (std::size_t k = 0; k < r.min_slack.size(); ++k) d += (k ? "," : "") + std::to_string(r.min_slack[k]);
      d += "] ";
    }
    report(4, ok, "lower bound on E_{<=<=k} holds for all 0 <= k < n/2-1, n <= 7", d);
  }

  // 5 and 6: realization, exhaustive n <= 6
  {
    std::uint64_t simple_sigs = 0, crossing_bad = 0, adjacent_bad = 0, semi_sigs = 0, parity_bad = 0, recover_bad = 0;
    for (int n = 3; n <= 6; ++n) {
      for_each_valid(n, Level::Simple, [&](const SignatureFunction& s) {
        ++simple_sigs;
        const CrossingReport r = drawing_crossings(realize(s));
        crossing_bad += !exact(r.total_crossings, convex_quad_count(s));
        adjacent_bad += !r.adjacent_pairs_crossing.empty();
      });
      for_each_valid(n, Level::Semisimple, [&](const SignatureFunction& s) {
        ++semi_sigs;
        const Drawing d = realize(s);
        const CrossingReport r = drawing_crossings(d);
        adjacent_bad += !r.adjacent_pairs_crossing.empty();
        recover_bad += !(read_signature(d) == s);
        for (int a = 1; a <= n; ++a)
          for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
              for (int e = c + 1; e <= n; ++e) {
                const bool convex = kConvexForms[quad_code(s, a, b, c, e)];
                const int odd = r.pair_parity_odd({a, b}, {c, e}) + r.pair_parity_odd({a, c}, {b, e}) +
                                r.pair_parity_odd({a, e}, {b, c});
                parity_bad += odd != (convex ? 1 : 0);
              }
      });
    }
    report(5, crossing_bad == 0 && adjacent_bad == 0 && parity_bad == 0,
           "realize: crossings = convex 4-tuples, no adjacent crossings, odd parity exactly on convex 4-tuples",
           "simple=" + std::to_string(simple_sigs) + " semisimple=" + std::to_string(semi_sigs) +
               " crossing_mismatch=" + std::to_string(crossing_bad) + " adjacent=" + std::to_string(adjacent_bad) +
               " parity_mismatch=" + std::to_string(parity_bad));
    report(6, recover_bad == 0, "reading the signature off realize(sigma) gives sigma",
           "signatures=" + std::to_string(semi_sigs) + " mismatches=" + std::to_string(recover_bad));
  }

  // 7: lambda round trip
  {
    std::uint64_t checked = 0, bad = 0;
    for (int n = 1; n <= 5; ++n)
      for_each_valid(n, Level::Semisimple, [&](const SignatureFunction& s) {
        ++checked;
        bad += !(signature_from_lambda(lambda_matrix(s)) == s);
      });
    for (int n : {7, 8})
      for (int t = 0; t < 1000; ++t) {
        const SignatureFunction s = random_valid_signature(n, Level::Semisimple, rng);
        ++checked;
        try {
          bad += !(signature_from_lambda(lambda_matrix(s)) == s);
        } catch (const InputError&) {
          ++bad;
        }
      }
    bool rejected = false;
    try {
      signature_from_lambda(LambdaMatrix{4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}});
    } catch (const InputError&) {
      rejected = true;
    }
    report(7, bad == 0 && rejected, "lambda round trip; all-ones 4x4 matrix rejected",
           "checked=" + std::to_string(checked) + " failures=" + std::to_string(bad) +
               " all_ones_rejected=" + (rejected ? "yes" : "no"));
  }

  // 8: form counts at n = 4
  {
    std::uint64_t ss = 0, pl = 0;
    for_each_valid(4, Level::Semisimple, [&](const SignatureFunction&) { ++ss; });
    for_each_valid(4, Level::Pseudolinear, [&](const SignatureFunction&) { ++pl; });
    report(8, exact(static_cast<std::int64_t>(ss), 10) && exact(static_cast<std::int64_t>(pl), 8),
           "enumerate_valid(n=4): 10 semisimple, 8 pseudolinear",
           "semisimple=" + std::to_string(ss) + " pseudolinear=" + std::to_string(pl));
  }

  // 9: 2-page membership of the minimal classes at n = 8
  {
    SearchConfig cfg;
    cfg.n = 8;
    cfg.mode = SearchMode::Minimize;
    const SearchResult r = min_crossing_search(cfg);
    std::int64_t without = 0;
    std::string d = "classes=" + std::to_string(r.class_count);
    for (const auto& rep : r.class_representatives) {
      const EquivClass cls = equivalence_class(rep);
      bool two = false;
      for (const auto& m : cls.members) two = two || is_two_page(SignatureFunction::from_string(8, m));
      without += !two;
      d += " [" + rep.sign_string() + " size=" + std::to_string(cls.members.size()) + " two_page=" + (two ? "1" : "0") + "]";
    }
    report(9, r.complete && exact(static_cast<std::int64_t>(r.class_count), 3) && exact(without, 2),
           "n=8: exactly 2 of the 3 minimal classes have no 2-page member",
           "without_two_page=" + std::to_string(without) + " " + d);
  }

  // 10: the <=<=<= probe on simple signatures, n <= 7
  {
    bool ok = true;
    std::string d;
    for (int n = 4; n <= 7; ++n) {
      const BoundReport r = verify_lelele_conjecture(n);
      ok = ok && r.complete && r.violations == 0;
      d += "n=" + std::to_string(n) + " sigs=" + std::to_string(r.signatures) + " viol=" + std::to_string(r.violations) + " ";
    }
    report(10, ok, "E_{<=<=<=k} >= 3 C(k+4,4) on all simple signatures, n <= 7", d);
  }

  std::cout << (failures ? "ACCEPTANCE FAILED: " + std::to_string(failures) + " criteria" : "ACCEPTANCE PASSED")
            << std::endl;
  return failures ? 1 : 0;
}
