#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tjurina/corpus.hpp"
#include "tjurina/io.hpp"

namespace {

using namespace tjurina;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::BadCoefficient:
    case Errc::UnknownVariable:
      return 2;
    case Errc::NotStabilized:
      return 4;
    case Errc::Internal:
      return 70;
    default:
      return 3;  // hypothesis violation / unusable input
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PlaneCurve curve_of(const InputDocument& doc) {
  if (!doc.curve) fail(Errc::ParseError, "input file has no curve line");
  return PlaneCurve::from(*doc.curve);
}

int cmd_analyze(const std::string& path, uint64_t seed, const std::string& format) {
  InputDocument doc = parse_input_document(read_file(path));
  if (!doc.curve && doc.foliation) {
    Foliation fol = make_foliation((*doc.foliation)[0], (*doc.foliation)[1], (*doc.foliation)[2]);
    std::cout << (format == "json" ? foliation_to_json(fol, doc.field.name(), seed)
                                   : foliation_to_text(fol, doc.field.name(), seed));
    return 0;
  }
  PlaneCurve curve = curve_of(doc);
  CurveInvariants inv = analyze_curve(curve, seed);
  std::optional<LeafCheckResult> leaf;
  if (doc.foliation && inv.reduced) {
    ProjectiveOneForm form = ProjectiveOneForm::from((*doc.foliation)[0], (*doc.foliation)[1],
                                                     (*doc.foliation)[2]);
    leaf = leaf_check(curve, form);
  }
  const LeafCheckResult* leafp = leaf ? &*leaf : nullptr;
  std::cout << (format == "json" ? invariants_to_json(inv, curve.field().name(), seed, leafp)
                                 : invariants_to_text(inv, curve.field().name(), seed, leafp));
  if (!inv.reduced) return 3;
  return 0;
}

int cmd_verify(const std::string& path, uint64_t seed, const std::string& format) {
  InputDocument doc = parse_input_document(read_file(path));
  PlaneCurve curve = curve_of(doc);
  BoundsReport report = full_report(curve, seed);
  std::cout << (format == "json" ? report_to_json(report) : report_to_text(report));
  if (!report.invariants.reduced) return 3;
  for (const std::string& e : report.stage_errors)
    if (e.rfind("invariants:", 0) == 0) return 3;  // hypothesis violation
  return report.all_non_skipped_hold() ? 0 : 1;
}

int cmd_corpus(const std::string& action, const std::string& filter, uint64_t seed, bool bless) {
  const auto& corpus = builtin_corpus();
  if (action == "list") {
    size_t n = 0;
    for (const CorpusEntry& e : corpus) {
      if (!e.matches_filter(filter)) continue;
      ++n;
      std::cout << e.name << "  [" << e.field_text << "]  tags:";
      for (const std::string& t : e.tags) std::cout << " " << t;
      std::cout << "\n";
    }
    std::cout << n << " entries\n";
    return 0;
  }
  bool all_ok = true;
  for (const CorpusEntry& e : corpus) {
    if (!e.matches_filter(filter)) continue;
    if (bless) {
      std::cout << bless_corpus_entry(e, seed);
      continue;
    }
    CorpusEntryResult r = run_corpus_entry(e, seed);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << e.name;
    const auto& fol = r.report.foliation;
    std::cout << "  tau=" << r.report.invariants.tau << " sigma=" << r.report.invariants.sigma
              << " u=" << (r.report.invariants.u ? std::to_string(*r.report.invariants.u) : "n/a")
              << " m_leaf=" << (fol.m_leaf ? std::to_string(*fol.m_leaf) : "n/a")
              << " m_factors=" << (fol.m_factors ? std::to_string(*fol.m_factors) : "n/a") << "\n";
    for (const std::string& f : r.failures) std::cout << "      " << f << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 1;
}

int cmd_oracle(const std::string& path, int bound) {
  InputDocument doc = parse_input_document(read_file(path));
  std::vector<Polynomial> gens;
  if (doc.ideal) {
    gens = *doc.ideal;
  } else if (doc.curve) {
    for (int v = 0; v < 3; ++v) gens.push_back(doc.curve->differentiate(v));
  } else {
    fail(Errc::ParseError, "oracle needs an ideal or curve line");
  }
  int nvars = 1;
  for (const Polynomial& g : gens) nvars = std::max(nvars, g.var_span());
  Ideal ideal(doc.field, nvars, gens);
  std::cout << oracle_colength(ideal, bound) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of plane curves and foliations, with bound verification"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  std::string format = "text";
  std::string filter;
  std::string file;
  int bound = 8;
  bool bless = false;
  std::string corpus_action = "run";

  CLI::App* analyze = app.add_subcommand("analyze", "curve invariants (d, tau, u, sigma, clusters)");
  analyze->add_option("file", file)->required();
  analyze->add_option("--seed", seed);
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* verify = app.add_subcommand("verify", "full bound report for a curve");
  verify->add_option("file", file)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* corpus = app.add_subcommand("corpus", "run or list the built-in example corpus");
  corpus->add_option("action", corpus_action)->check(CLI::IsMember({"list", "run"}));
  corpus->add_option("--filter", filter);
  corpus->add_option("--seed", seed);
  corpus->add_flag("--bless", bless, "print regenerated expected values for maintainer review");

  CLI::App* oracle = app.add_subcommand("oracle", "Macaulay-matrix colength (independent of the Groebner path)");
  std::string oracle_sub;
  oracle->add_option("subcommand", oracle_sub)->check(CLI::IsMember({"colength"}))->required();
  oracle->add_option("file", file)->required();
  oracle->add_option("--bound", bound);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(file, seed, format);
    if (app.got_subcommand(verify)) return cmd_verify(file, seed, format);
    if (app.got_subcommand(corpus)) return cmd_corpus(corpus_action, filter, seed, bless);
    if (app.got_subcommand(oracle)) return cmd_oracle(file, bound);
  } catch (const tjurina::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
