#include "tjurina/corpus.hpp"

#include <sstream>

namespace tjurina {

namespace {

CorpusEntry entry(std::string name, std::vector<std::string> tags, std::string field,
                  std::string curve) {
  CorpusEntry e;
  e.name = std::move(name);
  e.tags = std::move(tags);
  e.field_text = std::move(field);
  e.curve_text = std::move(curve);
  return e;
}

CorpusEntry cone(int d) {
  static const char* factors[] = {"x", "y", "(x+y)", "(x-y)", "(x+2*y)", "(x-2*y)"};
  std::string text = factors[0];
  for (int i = 1; i < d; ++i) text += "*" + std::string(factors[i]);
  CorpusEntry e = entry("cone_d" + std::to_string(d), {"cones"}, "Q", text);
  e.claimed_irreducibility = d >= 2 ? "false" : "unknown";
  e.expect_tau = static_cast<long>(d - 1) * (d - 1);
  e.expect_sigma = 2 * d - 3;
  e.expect_u = 0;
  e.expect_m_leaf = 0;
  e.expect_all_clusters_qh = true;
  e.provenance["tau"] = "cone of d concurrent lines: tau = (d-1)^2 (complete intersection of two polars)";
  e.provenance["sigma"] = "sigma = 2d-3 (regularity of a complete intersection of two polars)";
  e.provenance["m_leaf"] = "line pencil through the vertex";
  return e;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;

  for (int d = 2; d <= 6; ++d) out.push_back(cone(d));

  {
    CorpusEntry e = entry("smooth_conic", {"smooth", "conic"}, "Q", "x*z-y^2");
    e.claimed_irreducibility = "true";
    e.expect_tau = 0;
    e.expect_sigma = 0;
    e.expect_u = 0;
    e.expect_m_leaf = 1;
    e.provenance["m_leaf"] = "smooth curves force m = d-1 (degree bound both ways)";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("smooth_cubic", {"smooth", "cubic"}, "Q", "x^3+y^3+z^3");
    e.claimed_irreducibility = "true";
    e.expect_tau = 0;
    e.expect_sigma = 0;
    e.expect_u = 0;
    e.expect_m_leaf = 2;
    e.provenance["m_leaf"] = "smooth curves force m = d-1";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("nodal_cubic", {"cubic", "nodal"}, "Q", "y^2*z-x^2*(x+z)");
    e.claimed_irreducibility = "true";
    e.expect_tau = 1;
    e.expect_sigma = 1;
    e.expect_u = 0;
    e.expect_m_leaf = 2;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "one ordinary node";
    e.provenance["m_leaf"] = "m = 1 is excluded by the lower Tjurina bound";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("cuspidal_cubic", {"cubic", "cuspidal"}, "Q", "y^2*z-x^3");
    e.claimed_irreducibility = "true";
    e.expect_tau = 2;
    e.expect_sigma = 2;
    e.expect_u = 0;
    e.expect_m_leaf = 1;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "cusp: Macaulay oracle colength of (f,fx,fy)";
    e.provenance["m_leaf"] = "weighted-homogeneous curve: leaf of the weight vector field";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("quartic_three_nodes", {"quartic", "nodal"}, "Q",
                          "x^2*y^2+y^2*z^2+z^2*x^2");
    e.claimed_irreducibility = "true";
    e.expect_tau = 3;
    e.expect_sigma = 2;
    e.expect_u = 0;
    e.expect_m_leaf = 3;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "three coordinate-vertex nodes";
    e.provenance["m_leaf"] = "m = 1,2 force an equality case whose regularity test fails";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("quartic_cusp_tacnode", {"quartic", "cuspidal"}, "Q",
                          "y^2*z^2-x^4-x^3*z");
    e.claimed_irreducibility = "true";
    e.expect_tau = 5;
    e.expect_sigma = 3;
    e.expect_u = 0;
    e.expect_m_leaf = 2;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "cusp (2) at the origin chart plus tacnode (3) at infinity; oracle-checked";
    e.provenance["m_leaf"] = "lower Tjurina bound excludes m=1; witness found at 2";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("quartic_node_cusp", {"quartic", "nodal", "cuspidal"}, "Q",
                          "y^2*z^2-x^3*z-x^2*y^2");
    e.claimed_irreducibility = "true";
    e.expect_tau = 3;
    e.expect_sigma = 2;
    e.expect_u = 0;
    e.expect_m_leaf = 3;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "one cusp (2) and one node (1), both oracle-checked";
    e.provenance["m_leaf"] = "equality-case regularity test excludes m=1,2; witness found at 3";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("quartic_conjugate_nodes", {"quartic", "nodal", "conjugate"}, "Q",
                          "(x^2-2*z^2)^2-y^2*z*(x+z)");
    e.expect_tau = 3;
    e.expect_sigma = 2;
    e.expect_u = 0;
    e.expect_m_leaf = 3;
    e.expect_all_clusters_qh = true;
    e.provenance["clusters"] = "conjugate node pair over x^2 = 2 plus one rational node";
    e.provenance["m_leaf"] = "equality-case regularity test excludes m=1,2; witness found at 3";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("quintic_saito", {"quintic", "saito", "u1"}, "Q", "x^5+y^5+x^2*y^2*z");
    e.claimed_irreducibility = "true";
    e.expect_tau = 10;
    e.expect_sigma = 4;
    e.expect_u = 1;
    e.expect_m_leaf = 3;
    e.expect_all_clusters_qh = false;
    e.provenance["tau"] = "Macaulay oracle colength of the local Tjurina ideal";
    e.provenance["u"] = "single non-quasi-homogeneous point (tau < mu)";
    e.provenance["m_leaf"] = "rho = 1 forces m >= 3 through the degree bound; witness found at 3";
    out.push_back(e);
  }
  {
    CorpusEntry e = entry("five_lines", {"remark34", "lines"}, "Q", "x*y*(x+y)*(x-y)*(x+z)");
    e.claimed_irreducibility = "false";
    e.expect_tau = 13;
    e.expect_sigma = 6;
    e.expect_u = 0;
    e.expect_m_factors = 1;
    e.expect_m_leaf = 3;
    e.expect_m_leaf_min = 3;
    e.expect_all_clusters_qh = true;
    e.provenance["tau"] = "four-line cone point (9) plus four transversal nodes";
    e.provenance["m_factors"] = "pencil through the cone point times the extra line";
    e.provenance["m_leaf_min"] = "exhaustive search at coefficient degrees 1..3";
    out.push_back(e);
  }
  for (int d = 3; d <= 6; ++d) {
    CorpusEntry e = entry("random_fp_d" + std::to_string(d), {"random", "fp"}, "F 32003", "");
    e.random_degree = d;
    out.push_back(e);
  }
  return out;
}

}  // namespace

bool CorpusEntry::matches_filter(const std::string& filter) const {
  if (filter.empty() || name.find(filter) != std::string::npos) return true;
  for (const std::string& t : tags)
    if (t.find(filter) != std::string::npos) return true;
  return false;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

FieldSpec corpus_field(const CorpusEntry& e) {
  if (e.field_text == "Q") return FieldSpec::rationals();
  std::istringstream is(e.field_text);
  std::string kind;
  long p = 0;
  is >> kind >> p;
  return FieldSpec::prime(static_cast<uint32_t>(p));
}

PlaneCurve corpus_curve(const CorpusEntry& e, uint64_t seed) {
  FieldSpec f = corpus_field(e);
  if (e.random_degree == 0) return PlaneCurve::from(parse_polynomial(e.curve_text, f));
  Rng rng = Rng::derived(seed, "corpus-" + e.name);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Term> terms;
    Monomial m;
    for (int i = 0; i <= e.random_degree; ++i)
      for (int j = 0; i + j <= e.random_degree; ++j) {
        m.e[0] = static_cast<uint16_t>(i);
        m.e[1] = static_cast<uint16_t>(j);
        m.e[2] = static_cast<uint16_t>(e.random_degree - i - j);
        Coeff c = f.from_long(rng.uniform(0, f.characteristic() - 1));
        if (c != 0) terms.push_back({m, c});
      }
    Polynomial p = polynomial_from_terms(f, std::move(terms));
    if (p.is_zero() || p.degree() != e.random_degree) continue;
    PlaneCurve curve = PlaneCurve::from(p);
    if (is_reduced(curve)) return curve;
  }
  fail(Errc::Internal, "random curve generation failed for " + e.name);
}

CorpusEntryResult run_corpus_entry(const CorpusEntry& e, uint64_t seed) {
  CorpusEntryResult result;
  result.name = e.name;
  PlaneCurve curve = corpus_curve(e, seed);
  result.report = full_report(curve, Rng::derive(seed, "entry-" + e.name));
  const CurveInvariants& inv = result.report.invariants;

  auto expect = [&](const char* what, std::optional<long> expected, std::optional<long> got) {
    if (!expected) return;
    if (!got || *got != *expected) {
      result.passed = false;
      result.failures.push_back(std::string(what) + ": expected " + std::to_string(*expected) +
                                ", got " + (got ? std::to_string(*got) : std::string("n/a")));
    }
  };

  expect("tau", e.expect_tau, inv.tau);
  expect("sigma", e.expect_sigma, static_cast<long>(inv.sigma));
  expect("u", e.expect_u, inv.u);
  expect("m_leaf", e.expect_m_leaf,
         result.report.foliation.m_leaf ? std::optional<long>(*result.report.foliation.m_leaf)
                                        : std::nullopt);
  expect("m_factors", e.expect_m_factors,
         result.report.foliation.m_factors
             ? std::optional<long>(*result.report.foliation.m_factors)
             : std::nullopt);
  if (e.expect_m_leaf_min) {
    if (!result.report.foliation.m_leaf || *result.report.foliation.m_leaf < *e.expect_m_leaf_min) {
      result.passed = false;
      result.failures.push_back("m_leaf below the expected lower bound");
    }
  }
  if (e.expect_all_clusters_qh && corpus_field(e).kind() == FieldKind::Rationals) {
    for (const SingularCluster& c : inv.clusters) {
      bool qh = c.quasi_homogeneous.value_or(false);
      if (qh != *e.expect_all_clusters_qh) {
        result.passed = false;
        result.failures.push_back("cluster quasi-homogeneity flag mismatch on factor " +
                                  c.eliminant_factor.to_string());
        break;
      }
    }
  }
  if (e.claimed_irreducibility == "true" && inv.irreducibility == Irreducibility::Reducible) {
    result.passed = false;
    result.failures.push_back("claimed irreducible but a factor was found");
  }
  if (e.claimed_irreducibility == "false" && inv.irreducibility == Irreducibility::Irreducible) {
    result.passed = false;
    result.failures.push_back("claimed reducible but certified irreducible");
  }

  for (const TheoremVerdict& v : result.report.verdicts) {
    if (v.holds.has_value() && !*v.holds) {
      result.passed = false;
      result.failures.push_back("verdict " + v.id + " is false");
    }
  }
  for (const std::string& err : result.report.stage_errors) {
    result.passed = false;
    result.failures.push_back("stage error: " + err);
  }
  return result;
}

std::string bless_corpus_entry(const CorpusEntry& e, uint64_t seed) {
  CorpusEntryResult r = run_corpus_entry(e, seed);
  const CurveInvariants& inv = r.report.invariants;
  std::ostringstream os;
  os << e.name << ": tau=" << inv.tau << " sigma=" << inv.sigma
     << " u=" << (inv.u ? std::to_string(*inv.u) : "n/a") << " m_leaf="
     << (r.report.foliation.m_leaf ? std::to_string(*r.report.foliation.m_leaf) : "n/a")
     << " m_factors="
     << (r.report.foliation.m_factors ? std::to_string(*r.report.foliation.m_factors) : "n/a")
     << "\n";
  return os.str();
}

}  // namespace tjurina
