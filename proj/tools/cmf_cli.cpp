// cmf: sequences, CM newform coefficients, q-expansions, congruence sweeps
// and recurrence fitting from the command line.
//
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage error,
// 3 I/O error. Data goes to stdout (or --out); progress to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmf/cmf.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a nonnegative integer: '" + s + "'");
  }
  if (pos != s.size() || s.starts_with('-')) throw UsageError("not a nonnegative integer: '" + s + "'");
  return v;
}

// "n", "a..b", or a comma-separated list of either.
std::vector<std::uint64_t> parse_index_list(const std::string& spec) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const auto lo = parse_u64(item.substr(0, dots));
      const auto hi = parse_u64(item.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range '" + item + "'");
      for (auto n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      out.push_back(parse_u64(item));
    }
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

enum class TextFormat { text, json, csv };

TextFormat parse_text_format(const std::string& s) {
  if (s == "text") return TextFormat::text;
  if (s == "json") return TextFormat::json;
  if (s == "csv") return TextFormat::csv;
  throw UsageError("unknown format '" + s + "'");
}

void print_values(const std::vector<std::uint64_t>& idx, const std::vector<cmf::Int>& vals, TextFormat fmt) {
  switch (fmt) {
    case TextFormat::text:
      for (const auto& v : vals) std::cout << v << '\n';
      break;
    case TextFormat::json:
      std::cout << '[';
      for (std::size_t i = 0; i < vals.size(); ++i) std::cout << (i ? "," : "") << vals[i];
      std::cout << "]\n";
      break;
    case TextFormat::csv:
      std::cout << "n,value\n";
      for (std::size_t i = 0; i < vals.size(); ++i) std::cout << idx[i] << ',' << vals[i] << '\n';
      break;
  }
}

cmf::Family parse_family(const std::string& s) {
  if (s == "gamma") return cmf::Family::gamma;
  if (s == "beta") return cmf::Family::beta;
  if (s == "alpha") return cmf::Family::alpha;
  throw UsageError("unknown family '" + s + "' (expected gamma, beta or alpha)");
}

cmf::FamilyTag make_tag(const std::string& family, int k) {
  try {
    return cmf::FamilyTag(parse_family(family), k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_seq(const std::string& name, const std::string& spec, const std::string& format) {
  const auto idx = parse_index_list(spec);
  const auto fmt = parse_text_format(format);
  std::vector<cmf::Int> vals;
  if (auto s = cmf::parse_sequence(name)) {
    for (auto n : idx) vals.push_back(cmf::sequence_value(*s, n));
  } else if (name == "U2" || name == "U3" || name == "U4") {
    const int m = name[1] - '0';
    for (auto n : idx) {
      if (n < 1) throw UsageError("U_M is defined for n >= 1");
      vals.push_back(cmf::u_M(m, n));
    }
  } else {
    throw UsageError("unknown sequence '" + name + "' (expected A, B, C, D, U2, U3, U4)");
  }
  print_values(idx, vals, fmt);
  return 0;
}

int cmd_coeff(const std::string& family, int k, const std::string& spec, const std::string& format) {
  const auto tag = make_tag(family, k);
  const auto idx = parse_index_list(spec);
  const auto fmt = parse_text_format(format);
  std::uint64_t nmax = 1;
  for (auto n : idx) {
    if (n < 1) throw UsageError("coefficient index must be >= 1");
    nmax = std::max(nmax, n);
  }
  const auto f = cmf::extend_coefficients(tag, nmax);
  std::vector<cmf::Int> vals;
  for (auto n : idx) vals.push_back(f[n]);
  print_values(idx, vals, fmt);
  return 0;
}

int cmd_qexp(const std::string& source, const std::string& family, int k, std::uint64_t nmax,
             const std::string& format) {
  if (nmax < 1) throw UsageError("nmax must be >= 1");
  const auto tag = make_tag(family, k);
  auto fmt = parse_text_format(format);
  if (fmt == TextFormat::text) fmt = TextFormat::json;
  std::vector<cmf::Int> vals;
  if (source == "ideal-sum") {
    if (tag.family == cmf::Family::alpha) throw UsageError("ideal-sum source supports gamma and beta only");
    const auto spec = tag.family == cmf::Family::gamma ? cmf::HeckeCharSpec::eisenstein(k) : cmf::HeckeCharSpec::sqrtm2(k);
    const auto f = cmf::q_expansion_ideal_sum(spec, nmax);
    vals.assign(f.coefficients().begin(), f.coefficients().end());
  } else if (source == "closed-form") {
    const auto f = cmf::extend_coefficients(tag, nmax);
    vals.assign(f.coefficients().begin(), f.coefficients().end());
  } else if (source == "eta") {
    if (tag.family != cmf::Family::alpha || k != 3) throw UsageError("eta source supports alpha with k = 3 only");
    const auto h = cmf::eta_product_h(nmax);
    vals.assign(h.coefficients().begin() + 1, h.coefficients().end());
  } else {
    throw UsageError("unknown source '" + source + "' (expected ideal-sum, closed-form, eta)");
  }
  std::vector<std::uint64_t> idx(vals.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i + 1;
  print_values(idx, vals, fmt);
  return 0;
}

std::vector<int> parse_weights(const std::string& spec) {
  std::vector<int> out;
  for (auto k : parse_index_list(spec)) out.push_back(static_cast<int>(k));
  return out;
}

int cmd_verify(cmf::SweepConfig cfg, const std::string& theorems, const std::string& weights,
               const std::string& format, const std::string& out_path) {
  std::stringstream ss(theorems);
  for (std::string id; std::getline(ss, id, ',');) cfg.theorems.push_back(id);
  cfg.weights = parse_weights(weights);
  cmf::OutputFormat fmt = cmf::OutputFormat::json;
  if (format == "csv")
    fmt = cmf::OutputFormat::csv;
  else if (format != "json")
    throw UsageError("unknown format '" + format + "' (expected json or csv)");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kExitIo;
    }
  }
  std::cerr << "verify: running " << theorems << " (pmax=" << cfg.pmax << ", rmax=" << cfg.rmax
            << ", mmax=" << cfg.mmax << ", nmax=" << cfg.nmax << ", jobs=" << cfg.jobs << ")\n";
  const cmf::SweepResult res = cmf::run_sweep(cfg);
  std::ostream& os = out_path == "-" ? std::cout : file;
  cmf::write_sweep(os, res, fmt);
  os.flush();
  if (!os) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitIo;
  }

  std::cerr << "verify: " << res.reports.size() << " reports, " << res.failures() << " failed\n";
  for (const auto& w : res.witnesses)
    std::cerr << "verify: mod p^2 witness for " << w.theorem_id << " at p=" << w.p << " (" << w.lhs_reduced
              << " vs " << w.rhs_reduced << " mod " << w.modulus << ")\n";
  for (const auto& id : res.missing_witnesses) std::cerr << "verify: no mod p^2 witness found for " << id << "\n";
  if (res.adjudication) {
    const auto& a = *res.adjudication;
    std::cerr << "verify: eq2.1 non-residue branch: " << a.nonresidue_cases << " cases, printed sign passes "
              << a.printed_pass << ", negated sign passes " << a.negated_pass << ", distinguishing "
              << a.distinguishing_cases << "\n";
  }
  return res.all_pass() ? 0 : kExitFail;
}

std::string rational_str(const cmf::Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

int cmd_fit(const std::string& name, std::uint64_t nmax) {
  const auto s = cmf::parse_sequence(name);
  if (!s) throw UsageError("unknown sequence '" + name + "' (expected A, B, C, D)");
  if (nmax < 4) throw UsageError("--nmax must be >= 4");
  const auto seq = cmf::sequence_terms(*s, nmax + 1);
  const auto fit = cmf::fit_triple_detailed(seq);
  if (fit.triple) {
    std::cout << name << ": (a, b, lambda) = (" << fit.triple->a << ", " << fit.triple->b << ", "
              << fit.triple->lambda << "), validated through n = " << fit.validated_through << '\n';
    return 0;
  }
  std::cout << name << ": NoFit";
  if (fit.rational) {
    const auto& q = *fit.rational;
    std::cout << " (rational solution (a, b, lambda) = (" << rational_str(q[0]) << ", " << rational_str(q[1]) << ", "
              << rational_str(q[2]) << "), validated through n = " << fit.validated_through << ", not integral)";
  } else {
    std::cout << " (singular system)";
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CM newform coefficients, Apery-like sequences and congruence sweeps"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string seq_name, seq_spec;
  auto* seq = app.add_subcommand("seq", "print A, B, C, D or U2, U3, U4 values");
  seq->add_option("name", seq_name, "A, B, C, D, U2, U3 or U4")->required();
  seq->add_option("n", seq_spec, "index, range a..b, or comma list")->required();
  seq->add_option("--format", format, "text, json or csv");

  std::string family;
  int k = 0;
  std::string coeff_spec;
  auto* coeff = app.add_subcommand("coeff", "print Fourier coefficients a(n) of a family member");
  coeff->add_option("family", family, "gamma, beta or alpha")->required();
  coeff->add_option("k", k, "weight")->required();
  coeff->add_option("n", coeff_spec, "index, range a..b, or comma list")->required();
  coeff->add_option("--format", format, "text, json or csv");

  std::string source;
  std::uint64_t qexp_nmax = 0;
  auto* qexp = app.add_subcommand("qexp", "emit a(1..nmax) from one computation path");
  qexp->add_option("source", source, "ideal-sum, closed-form or eta")->required();
  qexp->add_option("family", family, "gamma, beta or alpha")->required();
  qexp->add_option("k", k, "weight")->required();
  qexp->add_option("nmax", qexp_nmax, "truncation")->required();
  qexp->add_option("--format", format, "json or csv");

  cmf::SweepConfig cfg;
  std::string theorems, weights = "3", out_path = "-", vformat = "json";
  auto* verify = app.add_subcommand("verify", "run congruence sweeps and write reports");
  verify->add_option("--thm", theorems, "comma-separated theorem ids")->required();
  verify->add_option("--pmax", cfg.pmax, "prime bound (inclusive)");
  verify->add_option("--rmax", cfg.rmax, "r bound");
  verify->add_option("--mmax", cfg.mmax, "m bound for eq2.1");
  verify->add_option("--k", weights, "weights: list or range, e.g. 2..13");
  verify->add_option("--nmax", cfg.nmax, "expansion length for oracle-agreement");
  verify->add_option("--format", vformat, "json or csv");
  verify->add_option("--out", out_path, "output path, '-' for stdout");
  verify->add_option("--jobs", cfg.jobs, "worker threads");

  std::string fit_name;
  std::uint64_t fit_nmax = 200;
  auto* fit = app.add_subcommand("fit", "fit a recurrence triple (a, b, lambda)");
  fit->add_option("name", fit_name, "A, B, C or D")->required();
  fit->add_option("--nmax", fit_nmax, "validate the fit through n = nmax");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(seq_name, seq_spec, format);
    if (*coeff) return cmd_coeff(family, k, coeff_spec, format);
    if (*qexp) return cmd_qexp(source, family, k, qexp_nmax, format);
    if (*verify) return cmd_verify(cfg, theorems, weights, vformat, out_path);
    if (*fit) return cmd_fit(fit_name, fit_nmax);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}
