#include "sqtori/cli.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "sqtori/arith.hpp"
#include "sqtori/asymptotics.hpp"
#include "sqtori/errors.hpp"
#include "sqtori/lattice.hpp"
#include "sqtori/permutation.hpp"

namespace sqtori::cli {

namespace {

using json = nlohmann::ordered_json;

// JSON carries the same 12-digit value as the text formats.
double json_real(double x) { return std::stod(fmt::format("{:.12g}", x)); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

struct Options {
  OutputFormat format = OutputFormat::plain;
  std::uint64_t max_triples = lattice::kDefaultMaxTriples;
  std::uint64_t max_sieve = arith::kDefaultMaxSieve;
};

void cmd_count(std::int64_t n, const Options& opt, std::ostream& out) {
  const auto f = arith::factorize(static_cast<arith::Int>(n));
  const auto r = asymptotics::rho(f);
  switch (opt.format) {
    case OutputFormat::plain:
      out << fmt::format("n={} psi={} sigma={} rho={}\n", n, r.psi, r.sigma, format_real(r.value));
      break;
    case OutputFormat::csv:
      out << "n,psi,sigma,rho\n" << fmt::format("{},{},{},{}\n", n, r.psi, r.sigma, format_real(r.value));
      break;
    case OutputFormat::json: {
      json j;
      j["n"] = n;
      j["psi"] = r.psi;
      j["sigma"] = r.sigma;
      j["rho"] = json_real(r.value);
      out << j.dump() << '\n';
      break;
    }
  }
}

void cmd_enumerate(std::int64_t n, bool cyclic_only, bool permutations, const Options& opt, std::ostream& out) {
  const auto seq = lattice::lattices_of_index(n, opt.max_triples);
  if (permutations) {
    for (const auto& l : seq)
      if (!cyclic_only || lattice::is_cyclic(l)) out << lattice::to_json(lattice::to_permutation_pair(l, opt.max_triples)) << '\n';
    return;
  }

  switch (opt.format) {
    case OutputFormat::plain: out << "w h t cyclic\n"; break;
    case OutputFormat::csv: out << "w,h,t,cyclic\n"; break;
    case OutputFormat::json: out << "{\"n\":" << n << ",\"lattices\":["; break;
  }
  bool first = true;
  for (const auto& l : seq) {
    const bool cyclic = lattice::is_cyclic(l);
    if (cyclic_only && !cyclic) continue;
    switch (opt.format) {
      case OutputFormat::plain: out << fmt::format("{} {} {} {}\n", l.w, l.h, l.t, bool_text(cyclic)); break;
      case OutputFormat::csv: out << fmt::format("{},{},{},{}\n", l.w, l.h, l.t, bool_text(cyclic)); break;
      case OutputFormat::json: {
        json j;
        j["w"] = l.w;
        j["h"] = l.h;
        j["t"] = l.t;
        j["cyclic"] = cyclic;
        out << (first ? "" : ",") << j.dump();
        break;
      }
    }
    first = false;
  }
  if (opt.format == OutputFormat::json) out << "]}\n";
}

void cmd_classify(const std::vector<std::int64_t>& c, const Options& opt, std::ostream& out) {
  const lattice::GeneratorPair g{{c[0], c[1]}, {c[2], c[3]}};
  const auto n = lattice::lattice_index(g);
  const auto hnf = lattice::hnf_reduce(g);
  const auto r = lattice::content(g);
  const auto shape = lattice::smith_shape(g);
  const bool cyclic = lattice::is_cyclic(hnf);
  switch (opt.format) {
    case OutputFormat::plain:
      out << fmt::format("w={} h={} t={} n={} r={} d1={} d2={} cyclic={}\n", hnf.w, hnf.h, hnf.t, n, r, shape.d1,
                         shape.d2, bool_text(cyclic));
      break;
    case OutputFormat::csv:
      out << "w,h,t,n,r,d1,d2,cyclic\n"
          << fmt::format("{},{},{},{},{},{},{},{}\n", hnf.w, hnf.h, hnf.t, n, r, shape.d1, shape.d2, bool_text(cyclic));
      break;
    case OutputFormat::json: {
      json j;
      j["u"] = {c[0], c[1]};
      j["v"] = {c[2], c[3]};
      j["w"] = hnf.w;
      j["h"] = hnf.h;
      j["t"] = hnf.t;
      j["n"] = n;
      j["r"] = r;
      j["d1"] = shape.d1;
      j["d2"] = shape.d2;
      j["cyclic"] = cyclic;
      out << j.dump() << '\n';
      break;
    }
  }
}

void cmd_sweep(std::uint64_t N, const Options& opt, std::ostream& out) {
  const auto tables = arith::sieve_multiplicative(N, opt.max_sieve);
  const double target = asymptotics::zeta_constants().inv_zeta4;

  switch (opt.format) {
    case OutputFormat::plain: out << "n psi sigma rho cum_psi cum_sigma cum_ratio\n"; break;
    case OutputFormat::csv: out << "n,psi,sigma,rho,cum_psi,cum_sigma,cum_ratio\n"; break;
    case OutputFormat::json: out << "{\"rows\":[\n"; break;
  }
  const char sep = opt.format == OutputFormat::csv ? ',' : ' ';
  const auto last = asymptotics::partial_sums(tables, N, [&](const asymptotics::SweepRecord& r) {
    if (opt.format == OutputFormat::json) {
      json j;
      j["n"] = r.n;
      j["psi"] = r.psi;
      j["sigma"] = r.sigma;
      j["rho"] = json_real(r.rho);
      j["cum_psi"] = r.cum_psi;
      j["cum_sigma"] = r.cum_sigma;
      j["cum_ratio"] = json_real(r.cum_ratio);
      out << (r.n == 1 ? "" : ",\n") << j.dump();
    } else {
      out << fmt::format("{1}{0}{2}{0}{3}{0}{4}{0}{5}{0}{6}{0}{7}\n", sep, r.n, r.psi, r.sigma, format_real(r.rho),
                         r.cum_psi, r.cum_sigma, format_real(r.cum_ratio));
    }
  });
  const double deviation = std::abs(last.cum_ratio - target);
  switch (opt.format) {
    case OutputFormat::plain:
      out << fmt::format("final cum_ratio={} deviation={}\n", format_real(last.cum_ratio), format_real(deviation));
      break;
    case OutputFormat::csv:
      out << fmt::format("# cum_ratio={},deviation={}\n", format_real(last.cum_ratio), format_real(deviation));
      break;
    case OutputFormat::json: {
      json footer;
      footer["cum_ratio"] = json_real(last.cum_ratio);
      footer["inv_zeta4"] = json_real(target);
      footer["deviation"] = json_real(deviation);
      out << "\n],\"footer\":" << footer.dump() << "}\n";
      break;
    }
  }
}

void cmd_extremal(unsigned kmax, const Options& opt, std::ostream& out) {
  const double floor_value = asymptotics::zeta_constants().inv_zeta2;
  switch (opt.format) {
    case OutputFormat::plain: out << "k rho deviation\n"; break;
    case OutputFormat::csv: out << "k,rho,deviation\n"; break;
    case OutputFormat::json: out << "["; break;
  }
  for (unsigned k = 1; k <= kmax; ++k) {
    const double r = asymptotics::extremal_sequence_rho(k);
    const double dev = r - floor_value;
    switch (opt.format) {
      case OutputFormat::plain: out << fmt::format("{} {} {}\n", k, format_real(r), format_real(dev)); break;
      case OutputFormat::csv: out << fmt::format("{},{},{}\n", k, format_real(r), format_real(dev)); break;
      case OutputFormat::json: {
        json j;
        j["k"] = k;
        j["rho"] = json_real(r);
        j["deviation"] = json_real(dev);
        out << (k == 1 ? "" : ",") << j.dump();
        break;
      }
    }
  }
  if (opt.format == OutputFormat::json) out << "]\n";
}

} // namespace

std::string format_real(double x) {
  auto s = fmt::format("{:.12g}", x);
  if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count, enumerate and classify square-tiled tori"};
  app.name(args.empty() ? "sqtori" : args.front());
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--max-triples", opt.max_triples, "Cap on enumerated sublattices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-sieve", opt.max_sieve, "Cap on the sieve limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();


  const auto positive = CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());

  std::int64_t n = 0;
  auto* count = app.add_subcommand("count", "Print psi(n), sigma(n) and rho(n)");
  count->add_option("n", n, "Number of squares")->required()->check(positive);

  std::int64_t en = 0;
  bool cyclic_only = false;
  bool permutations = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all (w,h,t) tori with n squares");
  enumerate->add_option("n", en, "Number of squares")->required()->check(positive);
  enumerate->add_flag("--cyclic-only", cyclic_only, "Only list cyclic tori");
  enumerate->add_flag("--permutations", permutations, "Emit permutation pairs as JSON lines");

  std::vector<std::int64_t> coords;
  auto* classify = app.add_subcommand("classify", "Classify the lattice spanned by u=(a,b), v=(c,d)");
  classify->add_option("coords", coords, "a b c d")->required()->expected(4);

  std::uint64_t sweep_n = 0;
  auto* sweep = app.add_subcommand("sweep", "Stream running sums of psi and sigma up to N");
  sweep->add_option("N", sweep_n, "Upper limit")->required()->check(positive);

  unsigned kmax = 0;
  auto* extremal = app.add_subcommand("extremal", "rho along n_k = (p_1...p_k)^k");
  extremal->add_option("kmax", kmax, "Largest k")->required()->check(CLI::Range(1u, asymptotics::kMaxExtremalK));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("sqtori");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  opt.format = formats.at(format_name);
  try {
    if (*count) cmd_count(n, opt, out);
    else if (*enumerate) cmd_enumerate(en, cyclic_only, permutations, opt, out);
    else if (*classify) cmd_classify(coords, opt, out);
    else if (*sweep) cmd_sweep(sweep_n, opt, out);
    else if (*extremal) cmd_extremal(kmax, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace sqtori::cli
