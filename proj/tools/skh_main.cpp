#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skh/diagram.hpp"
#include "skh/error.hpp"
#include "skh/invariants.hpp"
#include "skh/output_record.hpp"
#include "skh/parallel.hpp"
#include "skh/verify.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kParse = 1,
  kIncompatible = 2,
  kSizeCap = 3,
  kNotBraid = 10,
  kVerifyFailed = 20,
  kInternal = 70,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw skh::ParseError(0, 0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int compute(const std::string& path, const std::string& invariant, const std::string& format, bool timing,
            const skh::BuildOptions& opts) {
  const std::string text = read_file(path);
  const skh::ParsedInput in = skh::parse_input(text);
  const auto t0 = std::chrono::steady_clock::now();

  skh::OutputRecord rec;
  rec.invariant = invariant;
  rec.input_digest = skh::input_digest(text);
  if (invariant == "skh-tangle") {
    rec.dims = skh::skh_tangle(in.diagram, opts);
    rec.verdicts["braid"] = rec.dims.total() == 1;
    rec.verdicts["parity_consistent"] = (rec.dims.total() % 2 == 1) == skh::is_string_link(in.diagram);
  } else if (invariant == "skh-annular") {
    if (!in.annular) throw skh::IncompatibleInput("skh-annular needs a file with the 'closure annular' directive");
    rec.dims = skh::skh_annular(skh::annular_closure(in.diagram), opts);
  } else if (invariant == "khr") {
    if (in.annular) throw skh::IncompatibleInput("khr needs a (1,1)-tangle, not an annular closure");
    rec.dims = skh::khr_link(in.diagram, opts);
  } else {
    if (!in.annular && in.diagram.n_bottom() != 0)
      throw skh::IncompatibleInput("kh-total needs an annular closure or a tangle without endpoints");
    rec.dims = skh::kh_total(skh::annular_closure(in.diagram), opts);
  }
  if (timing) {
    rec.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  if (format == "tsv") std::cout << skh::to_tsv(rec);
  else std::cout << skh::to_json(rec).dump(2) << '\n';
  return kOk;
}

int detect(const std::string& path, const skh::BuildOptions& opts) {
  const skh::ParsedInput in = skh::parse_input(read_file(path));
  const skh::BraidVerdict v = skh::detect_braid(in.diagram, opts);
  if (v.is_braid_homology) {
    std::cout << "BRAID\n";
    return kOk;
  }
  std::cout << "NOT-BRAID total=" << v.total_dim << '\n';
  return kNotBraid;
}

int verify(const std::string& suite, std::uint64_t seed, std::size_t count, bool keep_going,
           const skh::BuildOptions& opts) {
  const auto s = skh::parse_suite(suite);
  const skh::SuiteReport r = skh::run_suite(*s, seed, count, opts, keep_going);
  std::cout << "suite " << suite << ": " << r.passed << " passed, " << r.failed << " failed\n";
  if (r.ok()) return kOk;
  std::cout << r.failure;
  return kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sutured Khovanov homology over F2 for tangles and annular links"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = skh::default_threads();
  int max_crossings = 24;
  app.add_option("--threads", threads, "worker threads (default: SKH_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--max-crossings", max_crossings, "refuse diagrams with more crossings")->check(CLI::NonNegativeNumber);

  std::string file, invariant = "skh-tangle", format = "json";
  bool timing = false;
  auto* comp = app.add_subcommand("compute", "compute an invariant and print its graded table");
  comp->add_option("file", file, "diagram file")->required();
  comp->add_option("--invariant", invariant)->check(CLI::IsMember({"skh-tangle", "skh-annular", "khr", "kh-total"}));
  comp->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  comp->add_flag("--timing", timing, "include wall time in the JSON record");

  auto* det = app.add_subcommand("detect-braid", "decide whether a tangle has the homology of a braid");
  det->add_option("file", file, "diagram file")->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool keep_going = false;
  auto* ver = app.add_subcommand("verify", "run a randomized property suite");
  ver->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"parity", "tensor", "cut", "moves", "oracle", "filtration"}));
  ver->add_option("--seed", seed);
  ver->add_option("--count", count);
  ver->add_flag("--keep-going", keep_going, "report every failure count instead of stopping at the first");

  CLI11_PARSE(app, argc, argv);

  const skh::BuildOptions opts{max_crossings, threads};
  try {
    if (*comp) return compute(file, invariant, format, timing, opts);
    if (*det) return detect(file, opts);
    return verify(suite, seed, count, keep_going, opts);
  } catch (const skh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const skh::DiagramError& e) {
    std::cerr << "invalid diagram: " << e.what() << '\n';
    return kParse;
  } catch (const skh::IncompatibleInput& e) {
    std::cerr << "incompatible input: " << e.what() << '\n';
    return kIncompatible;
  } catch (const skh::SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
