#include "skh/verify.hpp"

#include <array>
#include <sstream>

#include "skh/diagram.hpp"
#include "skh/error.hpp"
#include "skh/invariants.hpp"
#include "skh/moves.hpp"
#include "skh/oracle.hpp"
#include "skh/random_diagrams.hpp"

namespace skh {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"parity", "tensor", "cut", "moves", "oracle", "filtration"};

std::string commented(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += "# " + line + "\n";
  return out;
}

std::string failure_file(const TangleDiagram& d, bool annular, const std::string& why) {
  return commented(why) + to_text(d, annular);
}

TangleDiagram braid_or_tangle(Rng& rng, std::size_t n, int max_crossings) {
  if (n % 2 == 0) return random_braid(rng, 5, max_crossings);
  return random_tangle(rng, max_crossings);
}

MorseMove random_move(Rng& rng, const TangleDiagram& d) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  MorseMove m;
  m.kind = static_cast<MoveKind>(pick(0, 7));
  m.index = static_cast<std::size_t>(pick(0, static_cast<int>(d.slices().size())));
  m.pos = pick(1, std::max(1, d.skeleton().widths[m.index]));
  m.crossing = pick(0, 1) ? SliceKind::CrossLOver : SliceKind::CrossROver;
  m.left = pick(0, 1) == 1;
  return m;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (std::size_t q = 0; q < kNames.size(); ++q) {
    if (kNames[q] == name) return static_cast<Suite>(q);
  }
  return std::nullopt;
}

std::string_view suite_name(Suite s) { return kNames[static_cast<std::size_t>(s)]; }

void accumulate(FiltrationStats& into, const FiltrationStats& from) {
  into.entries += from.entries;
  into.k_preserving += from.k_preserving;
  into.k_decreasing += from.k_decreasing;
  into.k_increasing += from.k_increasing;
  into.dropped += from.dropped;
  into.dropped_not_decreasing += from.dropped_not_decreasing;
}

SuiteReport run_suite(Suite s, std::uint64_t seed, std::size_t count, const BuildOptions& opts, bool keep_going) {
  SuiteReport rep;
  rep.suite = s;
  Rng rng(seed);
  auto fail = [&](const std::string& file) {
    ++rep.failed;
    if (rep.failure.empty()) rep.failure = file;
  };

  for (std::size_t n = 0; n < count && (keep_going || rep.ok()); ++n) {
    switch (s) {
      case Suite::Parity: {
        const TangleDiagram d = random_tangle(rng, 8);
        const ParityReport r = parity_check(d, opts);
        if (r.passed) ++rep.passed;
        else fail(failure_file(d, false, "parity law violated: " + r.detail));
        break;
      }
      case Suite::Tensor: {
        TangleDiagram t1, k;
        const TangleDiagram sum = random_connected_sum(rng, 6, &t1, &k);
        const TensorReport r = tensor_check(t1, k, opts);
        if (r.passed) ++rep.passed;
        else fail(failure_file(sum, false, "tensor law violated: " + r.detail + "\nknot factor:\n" + to_text(k)));
        break;
      }
      case Suite::Cut: {
        const AnnularDiagram a = annular_closure(braid_or_tangle(rng, n, 8));
        const CutReport r = cut_check(a, opts);
        accumulate(rep.filtration, r.filtration);
        if (r.passed) ++rep.passed;
        else fail(failure_file(a.core(), true, "cut law violated: " + r.detail));
        break;
      }
      case Suite::Moves: {
        const TangleDiagram start = braid_or_tangle(rng, n, 6);
        const GradedDims before = skh_tangle(start, opts);
        TangleDiagram cur = start;
        std::string log;
        bool ok = true;
        const int steps = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int st = 0; st < steps && ok; ++st) {
          for (int attempt = 0; attempt < 200; ++attempt) {
            const MorseMove m = random_move(rng, cur);
            TangleDiagram next;
            try {
              next = apply_move(cur, m);
            } catch (const MoveError&) {
              continue;
            }
            if (next.crossing_count() > 10) continue;
            const TangleDiagram back = apply_move(next, inverse_move(cur, m));
            log += describe(m) + "\n";
            if (back.slices() != cur.slices()) {
              ok = false;
              log += "inverse move did not restore the slice list\n";
            }
            cur = next;
            break;
          }
        }
        const GradedDims after = skh_tangle(cur, opts);
        if (ok && after != before) {
          ok = false;
          log += "graded dims changed: " + format_dims(before) + " -> " + format_dims(after) + "\n";
        }
        if (ok) ++rep.passed;
        else fail(failure_file(start, false, "moves applied:\n" + log));
        break;
      }
      case Suite::Oracle: {
        const TangleDiagram d = braid_or_tangle(rng, n, 6);
        std::string why;
        if (skh_tangle(d, opts) != oracle::oracle_homology(d)) why += "tangle tables differ\n";
        const AnnularDiagram a = annular_closure(d);
        const AnnularComputation c = compute_annular(a, opts);
        accumulate(rep.filtration, c.filtration);
        if (c.skh != oracle::oracle_homology(a)) why += "annular tables differ\n";
        if (c.total != oracle::oracle_total_homology(a)) why += "total complex tables differ\n";
        if (why.empty()) ++rep.passed;
        else fail(failure_file(d, false, why));
        break;
      }
      case Suite::Filtration: {
        const AnnularDiagram a = annular_closure(braid_or_tangle(rng, n, 8));
        const SpectralReport r = spectral_bound_check(a, opts);
        accumulate(rep.filtration, r.filtration);
        const bool mono = r.filtration.k_increasing == 0 && r.filtration.dropped_not_decreasing == 0;
        if (r.passed && mono) ++rep.passed;
        else fail(failure_file(a.core(), true, mono ? r.detail : "differential entry raises k"));
        break;
      }
    }
  }
  return rep;
}

}  // namespace skh
