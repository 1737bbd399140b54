// p3x: run the verification catalog from the command line.
//
// Exit codes: 0 PASS, 1 FAIL, 2 usage error, 3 DEGENERATE.

#include <p3x/mukai.hpp>
#include <p3x/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace p3x;
using verify::Status;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kDegenerate = 3;

struct Options {
  std::string quartic = "fermat";
  std::uint64_t seed = 1;
  std::size_t n_random = 3;
  std::size_t primes = 3;
  bool exact = false;
  std::string cost = "all";
  std::string json_path;
  std::string partner;
  std::string expected;
  std::string data_dir = verify::default_data_dir();
  bool verbose = false;
  std::string check_id;
  long long d_min = -10;
  long long d_max = 10;
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// "fermat" | "random:<seed>" | "file:<path>"
spaces::QuarticForm parse_partner(const std::string& s) {
  if (s == "fermat") return spaces::QuarticForm::fermat();
  if (s.rfind("random:", 0) == 0) {
    try {
      return spaces::QuarticForm::random(std::stoull(s.substr(7)));
    } catch (const std::logic_error&) {
      throw UsageError("bad partner seed in '" + s + "'");
    }
  }
  if (s.rfind("file:", 0) == 0) return spaces::QuarticForm::load(s.substr(5));
  throw UsageError("bad --partner '" + s + "' (fermat | random:<seed> | file:<path>)");
}

verify::Config make_config(const Options& o) {
  verify::Config c;
  try {
    c.quartic = verify::QuarticChoice::parse(o.quartic);
    c.cost = verify::parse_cost(o.cost);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  c.seed = o.seed;
  c.n_random = o.n_random;
  c.primes = o.primes;
  c.exact = o.exact;
  c.data_dir = o.data_dir;
  c.expected_path = o.expected;
  if (!o.partner.empty()) {
    c.partner = parse_partner(o.partner);
    c.partner_spec = o.partner;
  }
  // Validate file quartics before any check runs.
  if (c.quartic.kind == verify::QuarticChoice::Kind::File) spaces::QuarticForm::load(c.quartic.path);
  return c;
}

void write_json(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Fail:
      return kFail;
    case Status::Degenerate:
      return kDegenerate;
    default:
      return kPass;
  }
}

int cmd_check(const Options& o) {
  const auto cfg = make_config(o);
  const auto& spec = verify::find_check(o.check_id);
  verify::Report rep;
  rep.config = verify::echo(cfg);
  rep.results.push_back(verify::run_check(spec, cfg, verify::ExpectedTable::load(cfg.expected_file())));
  rep.overall = rep.results.front().status == Status::Fail ? Status::Fail : Status::Pass;
  if (o.json_path != "-") std::cout << verify::format_text(rep.results.front(), true) << "\n";
  if (!o.json_path.empty()) write_json(o.json_path, verify::serialize(rep));
  return exit_code(rep.results.front().status);
}

int cmd_all(const Options& o) {
  const auto cfg = make_config(o);
  const auto rep = verify::run_all(cfg);
  if (o.json_path != "-") {
    std::cout << "config: quartic " << rep.config.quartic << ", seed " << rep.config.seed << ", n_random "
              << rep.config.n_random << ", primes " << rep.config.primes << (rep.config.exact ? ", exact" : "")
              << ", cost " << rep.config.cost << "\n";
    std::cout << "quartics:";
    for (const auto& q : rep.config.quartics) std::cout << " " << q;
    std::cout << "\n";
    for (const auto& r : rep.results) {
      std::cout << verify::format_text(r, o.verbose) << "  (" << static_cast<long long>(r.runtime_ms) << " ms)\n";
    }
    std::cout << "overall: " << verify::to_string(rep.overall) << "\n";
  }
  if (!o.json_path.empty()) write_json(o.json_path, verify::serialize(rep));
  return rep.overall == Status::Pass ? kPass : kFail;
}

int cmd_scan(const Options& o) {
  if (o.d_min > o.d_max) throw UsageError("--d-min must not exceed --d-max");
  if (o.d_min < -100000 || o.d_max > 100000) throw UsageError("|d| must be at most 100000");
  const auto rows = mukai::divisibility_scan(o.d_min, o.d_max);
  if (!o.json_path.empty()) {
    write_json(o.json_path, verify::to_json(rows).dump(2) + "\n");
    if (o.json_path == "-") return kPass;
  }
  for (const auto& row : rows) {
    std::cout << "d=" << row.d << "  2d^2+1=" << row.n << "\n";
    for (const auto& e : row.entries) {
      std::cout << "  r=" << e.r << " s=" << e.s << "  " << mukai::to_string(e.status) << "\n";
    }
  }
  return kPass;
}

int cmd_list() {
  for (const auto& s : verify::registry()) {
    std::cout << s.id << "  [" << verify::to_string(s.cost) << "]  " << s.paper_anchor << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for coordinate computations on quartic surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--quartic", o.quartic, "fermat | random | file:<path>");
    sub->add_option("--seed", o.seed, "seed for random quartics and primes");
    sub->add_option("--n-random", o.n_random, "number of seeded random quartics");
    sub->add_option("--primes", o.primes, "primes per modular certificate");
    sub->add_flag("--exact", o.exact, "decide every claim by rational elimination");
    sub->add_option("--cost", o.cost, "fast | medium | heavy | all");
    sub->add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");
    sub->add_option("--partner", o.partner, "second quartic of the curve: fermat | random:<seed> | file:<path>");
    sub->add_option("--expected", o.expected, "expected-values file (default: <data-dir>/expected.txt)");
    sub->add_option("--data-dir", o.data_dir, "directory with expected.txt and anchors.txt");
  };

  auto* check = app.add_subcommand("check", "run one check");
  check->add_option("id", o.check_id, "check id (see 'list')")->required();
  add_common(check);
  auto* all = app.add_subcommand("all", "run the catalog");
  add_common(all);
  all->add_flag("-v,--verbose", o.verbose, "print evidence for every check");
  auto* scan = app.add_subcommand("scan", "divisibility scan of 2d^2+1");
  scan->add_option("--d-min", o.d_min, "lowest d");
  scan->add_option("--d-max", o.d_max, "highest d");
  scan->add_option("--json", o.json_path, "write JSON here ('-' for stdout)");
  auto* list = app.add_subcommand("list", "list check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (all->parsed()) return cmd_all(o);
    if (scan->parsed()) return cmd_scan(o);
    if (list->parsed()) return cmd_list();
  } catch (const verify::UnknownCheck& e) {
    std::cerr << "p3x: " << e.what() << " (see 'p3x list')\n";
    return kUsage;
  } catch (const spaces::QuarticError& e) {
    std::cerr << "p3x: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "p3x: " << e.what() << "\n";
    return kUsage;
  } catch (const verify::DataError& e) {
    std::cerr << "p3x: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
