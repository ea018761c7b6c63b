// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

#include "bt1/catalog.hpp"
#include "bt1/certificate.hpp"
#include "bt1/diagram.hpp"
#include "bt1/errors.hpp"
#include "bt1/family.hpp"
#include "bt1/kappa.hpp"
#include "bt1/kraft.hpp"
#include "bt1/polysys.hpp"
#include "bt1/semilinear.hpp"
#include "bt1/serialize.hpp"

namespace bt1::cli {
namespace {

struct DatumArgs {
  int c = 0;
  int d = 0;
  std::string pi;

  void attach(CLI::App* app) {
    app->add_option("-c", c, "codimension c")->required();
    app->add_option("-d", d, "dimension d")->required();
    app->add_option("--pi", pi, "permutation: cycles \"(1 2 3)\" or images \"[2,3,1]\"")->required();
  }
  Bt1Datum datum() const {
    if (c < 1 || d < 1) fail(ErrorCode::kInvalidDatum, "c and d must be positive");
    return Bt1Datum(c, d, parse_permutation(pi, c + d));
  }
};

int require_prime(int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::kInvalidDatum, std::to_string(p) + " is not prime");
  }
  return p;
}

FiniteField::Elem parse_element(const std::string& text, const FiniteField& field) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::kParse, "field element '" + text + "' is not a non-negative integer");
  }
  if (used != text.size()) fail(ErrorCode::kParse, "field element '" + text + "' is not an integer");
  if (v >= field.q()) fail(ErrorCode::kInvalidDatum, "field element " + text + " >= q");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bt1: invariants of BT_1 classes given by permutations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = true;
  bool pretty = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--seed", seed, "seed of the counter-based generator");
  app.add_option("--jobs", jobs, "worker threads (default BT1_JOBS or hardware)");

  auto emit = [&](const Json& j) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; };

  DatumArgs classify_args;
  auto* classify = app.add_subcommand("classify", "refined classification of J x J");
  classify_args.attach(classify);

  DatumArgs kappa_args;
  int kappa_p = 2;
  bool kappa_class = false;
  bool kappa_perm = false;
  auto* kappa = app.add_subcommand("kappa", "kappa of a permutation or of its class");
  kappa_args.attach(kappa);
  kappa->add_option("-p", kappa_p, "prime")->required();
  auto* class_flag = kappa->add_flag("--class", kappa_class, "minimise over the Kraft class");
  kappa->add_flag("--perm", kappa_perm, "kappa of this permutation only (default)")->excludes(class_flag);
  bool kappa_paths = false;
  kappa->add_flag("--paths", kappa_paths, "list every Gamma/Delta path");

  DatumArgs cond_args;
  int cond_p = 2;
  auto* cond = app.add_subcommand("condition-c", "kappa of the class and of its dual");
  cond_args.attach(cond);
  cond->add_option("-p", cond_p, "prime")->required();

  DatumArgs cert_args;
  int cert_p = 2;
  auto* certify = app.add_subcommand("certify", "finiteness certificate");
  cert_args.attach(certify);
  certify->add_option("-p", cert_p, "prime")->required();

  DatumArgs sys_args;
  int sys_p = 2;
  bool sys_eliminate = false;
  bool sys_text = false;
  auto* system = app.add_subcommand("system", "stabiliser polynomial system");
  sys_args.attach(system);
  system->add_option("-p", sys_p, "prime")->required();
  system->add_flag("--eliminate", sys_eliminate, "substitute the degree-1 equations");
  system->add_flag("--text", sys_text, "plain text, one equation per line");

  DatumArgs diag_args;
  std::string diag_format = "ascii";
  auto* diagram = app.add_subcommand("diagram", "J x J diagram, i horizontal, j vertical");
  diag_args.attach(diagram);
  diagram->add_option("--format", diag_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  int sweep_c = 0;
  int sweep_d = 0;
  std::vector<int> sweep_primes;
  std::string sweep_catalog;
  auto* sweep_cmd = app.add_subcommand("sweep", "catalog of every class of S_{c+d}");
  sweep_cmd->add_option("-c", sweep_c, "codimension")->required();
  sweep_cmd->add_option("-d", sweep_d, "dimension")->required();
  sweep_cmd->add_option("-p", sweep_primes, "primes, comma separated")->required()->delimiter(',');
  sweep_cmd->add_option("--catalog", sweep_catalog, "write JSONL here instead of stdout");

  int prank_p = 2;
  int prank_e = 1;
  std::vector<std::string> prank_x;
  int prank_samples = 0;
  bool prank_oracle = false;
  auto* prank = app.add_subcommand("prank", "p-ranks of the four-parameter family");
  prank->add_option("-p", prank_p, "prime")->required();
  prank->add_option("-e", prank_e, "extension degree");
  prank->add_option("--x", prank_x, "point x1,x2,x3,x4 (integer-encoded elements)")
      ->delimiter(',')
      ->expected(4);
  prank->add_option("--samples", prank_samples, "number of sampled points");
  prank->add_flag("--oracle", prank_oracle, "also count fixed points");

  DatumArgs dual_args;
  std::string dual_key;
  auto* dual_cmd = app.add_subcommand("dual", "Cartier dual class");
  dual_cmd->add_option("--key", dual_key, "class key, e.g. [\"F\",\"FV\"]");
  dual_cmd->add_option("-c", dual_args.c, "codimension");
  dual_cmd->add_option("-d", dual_args.d, "dimension");
  dual_cmd->add_option("--pi", dual_args.pi, "permutation");

  DatumArgs inv_args;
  int inv_p = 2;
  auto* invariant = app.add_subcommand("invariant", "Kraft invariant, p-rank and a-number");
  inv_args.attach(invariant);
  invariant->add_option("-p", inv_p, "prime for the semilinear pair");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (classify->parsed()) {
      emit(to_json(PairTable(classify_args.datum())));
    } else if (kappa->parsed()) {
      const Bt1Datum datum = kappa_args.datum();
      const int p = require_prime(kappa_p);
      const PairTable table(datum);
      KappaReport report = kappa_of_perm(table, p);
      if (kappa_class) report.kappa_class = kappa_of_class(datum, p);
      Json j = to_json(report);
      j["seed"] = seed;
      if (kappa_paths) {
        Json paths = Json::array();
        for (const auto& path : enumerate_paths(table)) paths.push_back(to_json(path, p));
        j["paths"] = paths;
      }
      emit(j);
    } else if (cond->parsed()) {
      emit(to_json(condition_c(cond_args.datum(), require_prime(cond_p))));
    } else if (certify->parsed()) {
      emit(to_json(finiteness_report(cert_args.datum(), require_prime(cert_p))));
    } else if (system->parsed()) {
      const int p = require_prime(sys_p);
      PolySystem sys = gen_system(PairTable(sys_args.datum()), p);
      Json j;
      j["p"] = p;
      if (sys_eliminate) {
        const EliminationReport report = eliminate_linear(sys);
        j["elimination"] = to_json(report);
        sys = report.system;
      }
      if (sys_text) {
        out << to_text(sys);
      } else {
        j["text"] = to_text(sys);
        emit(j);
      }
    } else if (diagram->parsed()) {
      const PairTable table(diag_args.datum());
      out << (diag_format == "svg" ? diagram_svg(table) : diagram_ascii(table));
    } else if (sweep_cmd->parsed()) {
      const auto entries = sweep(sweep_c, sweep_d, sweep_primes, jobs, default_max_r());
      if (sweep_catalog.empty()) {
        for (const auto& entry : entries) out << to_json(entry).dump() << '\n';
      } else {
        write_catalog(sweep_catalog, entries);
        emit(Json{{"catalog", sweep_catalog}, {"entries", entries.size()}});
      }
    } else if (prank->parsed()) {
      const int p = require_prime(prank_p);
      const FieldPtr field = FiniteField::get(p, prank_e);
      FamilyReport report;
      if (!prank_x.empty()) {
        FamilyPoint x{};
        for (std::size_t k = 0; k < 4; ++k) x[k] = parse_element(prank_x[k], *field);
        report.p = p;
        report.e = prank_e;
        report.modulus = field->modulus_string();
        report.seed = seed;
        report.points.push_back(family_evaluate(p, prank_e, x, prank_oracle));
        report.mismatches = report.points.back().ok ? 0 : 1;
      } else {
        report = family_sample(p, prank_e, std::max(prank_samples, 1), seed, prank_oracle);
      }
      emit(to_json(report));
      if (report.mismatches > 0) {
        err << "error: " << report.mismatches << " p-rank mismatches\n";
        return 5;
      }
    } else if (dual_cmd->parsed()) {
      KraftInvariant inv;
      if (!dual_key.empty()) {
        inv = KraftInvariant::parse(dual_key);
      } else if (!dual_args.pi.empty()) {
        inv = kraft_invariant(dual_args.datum());
      } else {
        fail(ErrorCode::kParse, "dual needs --key or -c/-d/--pi");
      }
      const KraftInvariant du = dual(inv);
      const Bt1Datum rep = representative(du);
      emit(Json{{"invariant", inv.key()},
                {"dual", du.key()},
                {"dual_representative", {{"c", rep.c()}, {"d", rep.d()}, {"pi", to_json(rep.pi())}}}});
    } else if (invariant->parsed()) {
      const Bt1Datum datum = inv_args.datum();
      const int p = require_prime(inv_p);
      const SemilinearPair pair = build_pair(datum, p);
      const KraftInvariant inv = kraft_invariant(datum);
      emit(Json{{"key", inv.key()},
                {"words", to_json(inv)},
                {"c", inv.c()},
                {"d", inv.d()},
                {"p", p},
                {"p_rank", p_rank(pair)},
                {"a_number", a_number(pair)}});
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
    return 5;
  }
  return 0;
}

}  // namespace bt1::cli
