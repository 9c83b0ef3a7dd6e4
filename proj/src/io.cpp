#include "tjurina/io.hpp"

#include <sstream>

#include <json.hpp>

namespace tjurina {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string coeff_to_string(const Coeff& c) { return c.get_str(); }

InputDocument parse_input_document(const std::string& text) {
  InputDocument doc;
  bool field_seen = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<int, std::string>> deferred;  // polynomial lines parsed after `field`

  auto parse_error = [&](int n, const std::string& what) {
    fail(Errc::ParseError, "line " + std::to_string(n) + ": " + what);
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string keyword;
    ls >> keyword;
    std::string rest = trim(t.substr(keyword.size()));
    if (keyword == "field") {
      if (field_seen) parse_error(lineno, "duplicate field declaration");
      if (rest == "Q") {
        doc.field = FieldSpec::rationals();
      } else {
        std::istringstream fs(rest);
        std::string kind;
        long p = 0;
        fs >> kind >> p;
        if (kind != "F" || p <= 0) parse_error(lineno, "expected 'field Q' or 'field F <p>'");
        try {
          doc.field = FieldSpec::prime(static_cast<uint32_t>(p));
        } catch (const Error& e) {
          parse_error(lineno, e.what());
        }
      }
      field_seen = true;
    } else if (keyword == "curve" || keyword == "foliation" || keyword == "ideal") {
      deferred.push_back({lineno, t});
    } else if (keyword == "meta") {
      std::istringstream ms(rest);
      std::string key;
      ms >> key;
      std::string value = trim(rest.substr(key.size()));
      if (key == "irreducible") {
        if (value != "true" && value != "false" && value != "unknown")
          parse_error(lineno, "meta irreducible must be true|false|unknown");
        doc.meta_irreducible = value;
      } else if (key == "description") {
        doc.description = value;
      } else {
        parse_error(lineno, "unknown meta key '" + key + "'");
      }
    } else {
      parse_error(lineno, "unknown keyword '" + keyword + "'");
    }
  }

  for (auto& [n, t] : deferred) {
    std::istringstream ls(t);
    std::string keyword;
    ls >> keyword;
    std::string rest = trim(t.substr(keyword.size()));
    try {
      if (keyword == "curve") {
        if (doc.curve) parse_error(n, "duplicate curve line");
        doc.curve = parse_polynomial(rest, doc.field);
      } else if (keyword == "foliation") {
        if (doc.foliation) parse_error(n, "duplicate foliation line");
        std::vector<std::string> parts = split_on(rest, ';');
        if (parts.size() != 3) parse_error(n, "foliation needs three ';'-separated polynomials");
        doc.foliation = {parse_polynomial(trim(parts[0]), doc.field),
                         parse_polynomial(trim(parts[1]), doc.field),
                         parse_polynomial(trim(parts[2]), doc.field)};
      } else {
        std::vector<Polynomial> gens;
        for (const std::string& part : split_on(rest, ';'))
          gens.push_back(parse_polynomial(trim(part), doc.field));
        doc.ideal = std::move(gens);
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError || e.code() == Errc::BadCoefficient)
        parse_error(n, e.what());
      throw;
    }
  }

  if (!doc.curve && !doc.foliation && !doc.ideal)
    fail(Errc::ParseError, "input needs at least one of: curve, foliation, ideal");
  return doc;
}

namespace {

json coeff_json(const std::optional<Coeff>& c) {
  if (!c) return nullptr;
  return c->get_str();
}

json clusters_json(const CurveInvariants& inv) {
  json arr = json::array();
  for (const SingularCluster& c : inv.clusters) {
    json e;
    e["eliminant_factor"] = c.eliminant_factor.to_string();
    e["point_count"] = c.point_count;
    e["tjurina"] = c.tjurina;
    e["milnor"] = c.milnor;
    e["polar"] = c.polar;
    e["quasi_homogeneous"] =
        c.quasi_homogeneous.has_value() ? json(*c.quasi_homogeneous) : json(nullptr);
    arr.push_back(e);
  }
  return arr;
}

std::string irreducibility_name(Irreducibility i) {
  switch (i) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    default: return "unknown";
  }
}

json invariants_json(const CurveInvariants& inv) {
  json j;
  j["d"] = inv.d;
  j["tau"] = inv.tau;
  j["u"] = inv.u.has_value() ? json(*inv.u) : json(nullptr);
  j["sigma"] = inv.sigma;
  j["rho"] = inv.rho;
  return j;
}

json verdict_json(const TheoremVerdict& v) {
  json j;
  j["id"] = v.id;
  j["hypotheses"] = {{"met", v.hypotheses_met}, {"reasons", v.hypothesis_notes}};
  j["lhs"] = coeff_json(v.lhs);
  j["rhs"] = coeff_json(v.rhs);
  j["holds"] = v.holds.has_value() ? json(*v.holds) : json(nullptr);
  j["equality"] = v.equality.has_value() ? json(*v.equality) : json(nullptr);
  if (v.equality_case_consistent.has_value())
    j["equality_case_consistent"] = *v.equality_case_consistent;
  j["skipped"] = v.skipped.has_value() ? json(*v.skipped) : json(nullptr);
  return j;
}

}  // namespace

static json leaf_check_json(const LeafCheckResult& r) {
  json j;
  j["is_leaf"] = r.is_leaf;
  j["factors_through_only"] = r.factors_through_only;
  json rems = json::array();
  for (const Polynomial& rem : r.tangency_remainders) rems.push_back(rem.to_string());
  j["tangency_remainders"] = rems;
  return j;
}

std::string invariants_to_json(const CurveInvariants& inv, const std::string& field_name,
                               uint64_t seed, const LeafCheckResult* leaf) {
  json j;
  j["field"] = field_name;
  j["seed"] = seed;
  j["d"] = inv.d;
  j["reduced"] = inv.reduced;
  j["irreducibility"] = irreducibility_name(inv.irreducibility);
  j["tau"] = inv.tau;
  j["u"] = inv.u.has_value() ? json(*inv.u) : json(nullptr);
  j["sigma"] = inv.sigma;
  j["rho"] = inv.rho;
  j["clusters"] = clusters_json(inv);
  if (leaf) j["leaf_check"] = leaf_check_json(*leaf);
  return j.dump(2) + "\n";
}

std::string foliation_to_json(const Foliation& fol, const std::string& field_name, uint64_t seed) {
  FoliationRegularity reg = foliation_regularity(fol);
  json j;
  j["field"] = field_name;
  j["seed"] = seed;
  j["m"] = fol.degree;
  j["deg_s"] = fol.deg_s;
  j["regularity"] = reg.value;
  j["regularity_in_scope"] = reg.in_scope;
  j["tangency_degree"] = tangency_degree_check(fol, seed);
  j["form"] = {fol.form.a.to_string(), fol.form.b.to_string(), fol.form.c.to_string()};
  return j.dump(2) + "\n";
}

std::string foliation_to_text(const Foliation& fol, const std::string& field_name, uint64_t seed) {
  FoliationRegularity reg = foliation_regularity(fol);
  std::ostringstream os;
  os << "field            " << field_name << "\n";
  os << "seed             " << seed << "\n";
  os << "m                " << fol.degree << "\n";
  os << "deg S            " << fol.deg_s << "\n";
  os << "regularity       " << reg.value << (reg.in_scope ? "" : " (m = 0: outside the statement)")
     << "\n";
  os << "tangency degree  " << tangency_degree_check(fol, seed) << "\n";
  os << "form             " << fol.form.a.to_string() << " ; " << fol.form.b.to_string() << " ; "
     << fol.form.c.to_string() << "\n";
  return os.str();
}

std::string invariants_to_text(const CurveInvariants& inv, const std::string& field_name,
                               uint64_t seed, const LeafCheckResult* leaf) {
  std::ostringstream os;
  os << "field            " << field_name << "\n";
  os << "seed             " << seed << "\n";
  os << "d                " << inv.d << "\n";
  os << "reduced          " << (inv.reduced ? "true" : "false") << "\n";
  if (!inv.reduced) return os.str();
  os << "irreducibility   " << irreducibility_name(inv.irreducibility) << "\n";
  os << "tau              " << inv.tau << "\n";
  os << "u                " << (inv.u ? std::to_string(*inv.u) : "n/a") << "\n";
  os << "sigma            " << inv.sigma << "\n";
  os << "rho              " << inv.rho << "\n";
  os << "clusters         " << inv.clusters.size() << "\n";
  for (size_t i = 0; i < inv.clusters.size(); ++i) {
    const SingularCluster& c = inv.clusters[i];
    os << "  cluster " << i << ": points=" << c.point_count << " tjurina=" << c.tjurina
       << " milnor=" << c.milnor << " polar=" << c.polar << " quasi_homogeneous="
       << (c.quasi_homogeneous ? (*c.quasi_homogeneous ? "true" : "false") : "unknown")
       << " factor=" << c.eliminant_factor.to_string() << "\n";
  }
  if (leaf) {
    os << "leaf             " << (leaf->is_leaf ? "true" : "false");
    if (leaf->factors_through_only) os << " (factors through, component inside singular locus)";
    os << "\n";
  }
  return os.str();
}

std::string report_to_json(const BoundsReport& report) {
  json j;
  j["curve"] = report.curve_hash;
  j["field"] = report.field_name;
  j["seed"] = report.seed;
  j["invariants"] = invariants_json(report.invariants);
  json fol;
  fol["m_leaf"] = report.foliation.m_leaf ? json(*report.foliation.m_leaf) : json(nullptr);
  fol["m_factors"] = report.foliation.m_factors ? json(*report.foliation.m_factors) : json(nullptr);
  fol["hamilton_degree"] =
      report.foliation.hamilton_degree ? json(*report.foliation.hamilton_degree) : json(nullptr);
  fol["hamilton_degree_dropped"] = report.foliation.hamilton_degree_dropped;
  fol["leaf_gap_levels"] = report.foliation.leaf_gap_levels;
  if (report.foliation.leaf_witness) {
    fol["m_leaf_witness"] = {(*report.foliation.leaf_witness)[0],
                             (*report.foliation.leaf_witness)[1],
                             (*report.foliation.leaf_witness)[2]};
  } else {
    fol["m_leaf_witness"] = nullptr;
  }
  j["foliation"] = fol;
  json verdicts = json::array();
  for (const TheoremVerdict& v : report.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  j["reduced"] = report.invariants.reduced;
  j["clusters"] = clusters_json(report.invariants);
  j["errors"] = report.stage_errors;
  return j.dump(2) + "\n";
}

std::string report_to_text(const BoundsReport& report) {
  std::ostringstream os;
  os << "curve   " << report.curve_hash << "\n";
  os << "field   " << report.field_name << "\n";
  os << "seed    " << report.seed << "\n";
  const CurveInvariants& inv = report.invariants;
  os << "d=" << inv.d << " reduced=" << (inv.reduced ? "true" : "false") << " tau=" << inv.tau
     << " u=" << (inv.u ? std::to_string(*inv.u) : "n/a") << " sigma=" << inv.sigma
     << " rho=" << inv.rho << "\n";
  os << "m_leaf=" << (report.foliation.m_leaf ? std::to_string(*report.foliation.m_leaf) : "n/a")
     << " m_factors="
     << (report.foliation.m_factors ? std::to_string(*report.foliation.m_factors) : "n/a")
     << " hamilton_degree="
     << (report.foliation.hamilton_degree ? std::to_string(*report.foliation.hamilton_degree)
                                          : "n/a")
     << "\n";
  for (const TheoremVerdict& v : report.verdicts) {
    os << v.id << ": ";
    if (v.skipped) {
      os << "skipped (" << *v.skipped << ")\n";
      continue;
    }
    os << (v.holds && *v.holds ? "holds" : "VIOLATED");
    if (v.lhs && v.rhs) os << "  " << v.lhs->get_str() << (v.equality && *v.equality ? " = " : " vs ") << v.rhs->get_str();
    if (v.equality_case_consistent)
      os << "  equality-case " << (*v.equality_case_consistent ? "consistent" : "INCONSISTENT");
    os << "\n";
  }
  for (const std::string& e : report.stage_errors) os << "error: " << e << "\n";
  return os.str();
}

}  // namespace tjurina
