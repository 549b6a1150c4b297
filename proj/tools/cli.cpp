#include "dcsum_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dcsum/appell.hpp"
#include "dcsum/audit.hpp"
#include "dcsum/periodic.hpp"
#include "dcsum/sums.hpp"
#include "dcsum/umbral.hpp"
#include "dcsum_cli/report_io.hpp"

namespace dcsum::cli {

namespace {

struct RangeFlags {
  std::optional<std::int64_t> fixed;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
};

struct AuditFlags {
  std::string checks;
  std::map<std::string, RangeFlags, std::less<>> ranges;
  bool odd_only = false;
  bool coprime_only = false;
  std::string format = "text";
  std::string out_path;
};

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

unsigned worker_count() {
  const char* env = std::getenv("DCSUM_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) {
    throw std::invalid_argument(std::string("DCSUM_THREADS must be a non-negative integer, got '") +
                                env + "'");
  }
  return static_cast<unsigned>(value);
}

audit::ParamGrid build_grid(const AuditFlags& flags) {
  audit::ParamGrid grid;
  for (const auto& [name, f] : flags.ranges) {
    audit::Range& r = grid.range(name);
    if (f.fixed) {
      if (f.lo || f.hi) {
        throw std::invalid_argument("--" + name + " cannot be combined with --" + name +
                                    "min/--" + name + "max");
      }
      r = {*f.fixed, *f.fixed};
      continue;
    }
    if (f.lo) r.lo = *f.lo;
    if (f.hi) r.hi = *f.hi;
  }
  grid.odd_only = flags.odd_only;
  grid.coprime_only = flags.coprime_only;
  return grid;
}

int run_audit(const AuditFlags& flags, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(flags.format);
  const std::vector<std::string> ids =
      flags.checks.empty() || flags.checks == "all" ? audit::registry_ids()
                                                    : split_ids(flags.checks);
  const audit::ParamGrid grid = build_grid(flags);
  const audit::AuditReport report = audit::sweep(ids, grid, {worker_count()});
  const std::string body = render(report, format);
  if (flags.out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << flags.out_path << "' for writing\n";
      return kExitUsage;
    }
    file << body;
  }
  return report.all_hold() ? kExitOk : kExitResidual;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler polynomials, Dedekind and DC sums, and identity audits", "dcsum"};
  app.require_subcommand(1);
  // -h would collide with the h parameter.
  app.set_help_flag("--help", "Print this help message and exit");

  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t h = 0;
  std::int64_t k = 0;
  std::string x_text;

  auto* eulernum = app.add_subcommand("eulernum", "Euler number E_n");
  eulernum->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  auto* bernoullinum = app.add_subcommand("bernoullinum", "Bernoulli number B_n");
  bernoullinum->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  auto* eulerpoly = app.add_subcommand("eulerpoly", "Euler polynomial E_n(x)");
  eulerpoly->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  auto* eulerfn = app.add_subcommand("eulerfn", "Euler function Ebar_p(x) at a rational x");
  eulerfn->add_option("p", p)->required()->check(CLI::NonNegativeNumber);
  eulerfn->add_option("x", x_text, "rational such as -7/3")->required();

  auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum S(h,k)");
  dedekind->add_option("h", h)->required();
  dedekind->add_option("k", k)->required();

  auto* gendedekind = app.add_subcommand("gendedekind", "Generalized Dedekind sum S_p(h,k)");
  gendedekind->add_option("p", p)->required();
  gendedekind->add_option("h", h)->required();
  gendedekind->add_option("k", k)->required();

  auto* dcsum = app.add_subcommand("dcsum", "DC sum T_p(h,k)");
  dcsum->add_option("p", p)->required();
  dcsum->add_option("h", h)->required();
  dcsum->add_option("k", k)->required();

  std::string form;
  auto* umbral = app.add_subcommand("umbral", "Evaluate a fixed umbral form");
  umbral->add_option("--form", form, "hEkE: (hE+kE')^p; Ex: (E+x)^p; thm7; thm9")
      ->required()
      ->check(CLI::IsMember({"hEkE", "Ex", "thm7", "thm9"}));
  umbral->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  umbral->add_option("--h", h);
  umbral->add_option("--k", k);
  umbral->add_option("--x", x_text);

  AuditFlags audit_flags;
  auto* audit_cmd = app.add_subcommand("audit", "Run registered identity checks over a grid");
  audit_cmd->add_option("--checks", audit_flags.checks, "comma-separated ids, or 'all'");
  for (std::string_view name : audit::kParamNames) {
    auto& f = audit_flags.ranges[std::string(name)];
    const std::string base(name);
    audit_cmd->add_option("--" + base, f.fixed, "fix " + base);
    audit_cmd->add_option("--" + base + "min", f.lo, "lower bound for " + base);
    audit_cmd->add_option("--" + base + "max", f.hi, "upper bound for " + base);
  }
  audit_cmd->add_flag("--odd-only", audit_flags.odd_only, "keep odd p, h, k, m");
  audit_cmd->add_flag("--coprime-only", audit_flags.coprime_only, "keep gcd(h,k) = 1");
  audit_cmd->add_option("--format", audit_flags.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  audit_cmd->add_option("--out", audit_flags.out_path, "write the report to a file");

  auto* list_cmd = app.add_subcommand("checks", "List registered identity checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (eulernum->parsed()) {
      out << format_rational(euler_number(static_cast<std::size_t>(n))) << '\n';
    } else if (bernoullinum->parsed()) {
      out << format_rational(bernoulli_number(static_cast<std::size_t>(n))) << '\n';
    } else if (eulerpoly->parsed()) {
      out << euler_poly(static_cast<std::size_t>(n)).to_string() << '\n';
    } else if (eulerfn->parsed()) {
      out << format_rational(euler_function(static_cast<std::size_t>(p), Rational::parse(x_text)))
          << '\n';
    } else if (dedekind->parsed()) {
      out << format_rational(dedekind_sum(h, k)) << '\n';
    } else if (gendedekind->parsed()) {
      out << format_rational(gen_dedekind_sum(p, h, k)) << '\n';
    } else if (dcsum->parsed()) {
      out << format_rational(dc_sum(p, h, k)) << '\n';
    } else if (umbral->parsed()) {
      Rational value;
      if (form == "Ex") {
        if (x_text.empty()) throw std::invalid_argument("--form Ex needs --x");
        const UmbralTerm term[] = {{Rational(1), Rational::parse(x_text), 0}};
        value = umbral_power(term, p);
      } else {
        if (umbral->count("--h") == 0 || umbral->count("--k") == 0) {
          throw std::invalid_argument("--form " + form + " needs --h and --k");
        }
        if (form == "hEkE") {
          const UmbralTerm terms[] = {{Rational(h), Rational(), 0}, {Rational(k), Rational(), 1}};
          value = umbral_power(terms, p);
        } else if (form == "thm7") {
          value = theorem7_sum(p, h, k);
        } else {
          value = theorem9_rhs(p, h, k);
        }
      }
      out << format_rational(value) << '\n';
    } else if (audit_cmd->parsed()) {
      return run_audit(audit_flags, out, err);
    } else if (list_cmd->parsed()) {
      for (const auto& c : audit::registry()) {
        out << c.id << " (";
        for (std::size_t i = 0; i < c.params.size(); ++i) out << (i ? "," : "") << c.params[i];
        out << "): " << c.claim << '\n';
      }
    }
  } catch (const std::invalid_argument& e) {
    // PreconditionError, UnknownCheckError and parse failures all land here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dcsum::cli
