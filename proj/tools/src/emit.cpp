#include <cycres/cli/emit.hpp>

#include <cycres/errors.hpp>

#include <sstream>

namespace cycres::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "md") return Format::kMarkdown;
  if (name == "csv") return Format::kCsv;
  throw DomainError("unknown format: " + name);
}

namespace {

std::vector<unsigned long> unit_digits(const PadicScalar& x) {
  std::vector<unsigned long> out(static_cast<std::size_t>(x.precision()));
  BigInt u = x.unit(), q;
  for (auto& d : out) {
    d = mpz_fdiv_q_ui(q.get_mpz_t(), u.get_mpz_t(), x.prime());
    u = q;
  }
  return out;
}

const char* zero_reason_name(LimitZeroReason r) {
  switch (r) {
    case LimitZeroReason::kMuPositive: return "mu_positive";
    case LimitZeroReason::kLambdaPositive: return "lambda_positive";
    default: return "nonzero";
  }
}

const char* method_name(LimitMethod m) {
  switch (m) {
    case LimitMethod::kFormula: return "formula";
    case LimitMethod::kSequence: return "sequence";
    default: return "both";
  }
}

}  // namespace

json padic_json(const PadicScalar& x) {
  json j;
  j["p"] = x.prime();
  if (x.is_zero()) {
    j["zero_to_precision"] = true;
    j["precision"] =
        x.abs_precision() >= kExactZeroPrec ? json("exact") : json(x.abs_precision());
    return j;
  }
  j["valuation"] = x.valuation();
  j["unit_digits"] = unit_digits(x);
  j["precision"] = x.precision();
  return j;
}

json invariants_json(const IwasawaInvariants& inv) {
  return json{{"lambda", inv.lambda},
              {"mu", inv.mu},
              {"nu", inv.nu},
              {"stabilization_level", inv.stabilization_level}};
}

json report_json(const LimitReport& rep) {
  json j;
  j["p"] = rep.p;
  j["requested_precision"] = rep.requested_precision;
  j["method"] = method_name(rep.method);
  j["limit"] = padic_json(rep.limit);
  j["limit_is_zero"] = rep.limit_is_zero;
  j["zero_reason"] = zero_reason_name(rep.zero_reason);
  if (rep.nonp_limit)
    j["nonp_limit"] = padic_json(*rep.nonp_limit);
  else
    j["nonp_limit_absent_reason"] = rep.nonp_absent_reason;
  j["xi"] = padic_json(rep.xi);
  j["invariants"] = invariants_json(rep.invariants);
  j["sign_parity"] = rep.sign_parity;
  if (rep.method == LimitMethod::kBoth) j["agreement_digits"] = rep.agreement_digits;
  if (rep.cyclotomic_case) {
    j["cyclotomic_case"] = {{"m", rep.cyclotomic_case->m},
                            {"expected", rep.cyclotomic_case->expected}};
  }
  j["nu_shortcut_applies"] = rep.nu_shortcut_applies;
  return j;
}

namespace {

std::string padic_text(const PadicScalar& x) { return x.to_string(); }

std::string report_markdown(const LimitReport& rep) {
  std::ostringstream os;
  os << "| field | value |\n|---|---|\n";
  os << "| p | " << rep.p << " |\n";
  os << "| method | " << method_name(rep.method) << " |\n";
  os << "| limit | " << padic_text(rep.limit) << " |\n";
  os << "| zero reason | " << zero_reason_name(rep.zero_reason) << " |\n";
  if (rep.nonp_limit)
    os << "| non-p limit | " << padic_text(*rep.nonp_limit) << " |\n";
  else
    os << "| non-p limit | absent: " << rep.nonp_absent_reason << " |\n";
  os << "| xi | " << padic_text(rep.xi) << " |\n";
  os << "| lambda, mu, nu | " << rep.invariants.lambda << ", " << rep.invariants.mu
     << ", " << rep.invariants.nu << " |\n";
  if (rep.method == LimitMethod::kBoth)
    os << "| agreement digits | " << rep.agreement_digits << " |\n";
  return os.str();
}

std::string report_csv(const LimitReport& rep) {
  std::ostringstream os;
  os << "field,value\n";
  os << "p," << rep.p << "\n";
  os << "method," << method_name(rep.method) << "\n";
  os << "limit," << padic_text(rep.limit) << "\n";
  os << "zero_reason," << zero_reason_name(rep.zero_reason) << "\n";
  if (rep.nonp_limit) os << "nonp_limit," << padic_text(*rep.nonp_limit) << "\n";
  os << "lambda," << rep.invariants.lambda << "\n";
  os << "mu," << rep.invariants.mu << "\n";
  os << "nu," << rep.invariants.nu << "\n";
  return os.str();
}

}  // namespace

std::string emit_limit_report(const LimitReport& rep, Format format) {
  switch (format) {
    case Format::kJson: return report_json(rep).dump(2) + "\n";
    case Format::kMarkdown: return report_markdown(rep);
    case Format::kCsv: return report_csv(rep);
  }
  return {};
}

std::string emit_invariants(const IwasawaInvariants& inv, Format format) {
  switch (format) {
    case Format::kJson: return invariants_json(inv).dump(2) + "\n";
    case Format::kMarkdown: {
      std::ostringstream os;
      os << "| lambda | mu | nu | stabilization |\n|---|---|---|---|\n| "
         << inv.lambda << " | " << inv.mu << " | " << inv.nu << " | "
         << inv.stabilization_level << " |\n";
      return os.str();
    }
    case Format::kCsv: {
      std::ostringstream os;
      os << "lambda,mu,nu,stabilization\n"
         << inv.lambda << "," << inv.mu << "," << inv.nu << ","
         << inv.stabilization_level << "\n";
      return os.str();
    }
  }
  return {};
}

std::string emit_table(const TableDoc& doc, Format format) {
  if (format == Format::kJson) {
    json j;
    j["id"] = doc.id;
    j["title"] = doc.title;
    j["columns"] = doc.col_labels;
    json rows = json::array();
    for (const auto& [name, cells] : doc.rows)
      rows.push_back(json{{"name", name}, {"cells", cells}});
    j["rows"] = rows;
    if (!doc.notes.empty()) j["notes"] = doc.notes;
    j["pass"] = doc.pass;
    if (!doc.diffs.empty()) j["diffs"] = doc.diffs;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::kMarkdown) {
    os << "### " << doc.title << " (" << doc.id << ")\n\n";
    os << "|  |";
    for (const auto& c : doc.col_labels) os << " " << c << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < doc.col_labels.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& [name, cells] : doc.rows) {
      os << "| " << name << " |";
      for (const auto& cell : cells) os << " " << cell << " |";
      os << "\n";
    }
    for (const auto& note : doc.notes) os << "\n" << note << "\n";
    os << "\n" << (doc.pass ? "PASS" : "FAIL") << " " << doc.id << "\n";
    for (const auto& d : doc.diffs) os << "  mismatch: " << d << "\n";
  } else {
    os << doc.id;
    for (const auto& c : doc.col_labels) os << "," << c;
    os << "\n";
    for (const auto& [name, cells] : doc.rows) {
      os << name;
      for (const auto& cell : cells) os << "," << cell;
      os << "\n";
    }
    os << "result," << (doc.pass ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

namespace {

TableDoc tower_doc(const std::string& id, const std::string& title,
                   const std::vector<BigInt>& orders, unsigned long p) {
  TableDoc doc;
  doc.id = id;
  doc.title = title;
  std::vector<std::string> values, residues;
  BigInt mod(p);
  for (std::size_t n = 0; n < orders.size(); ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    values.push_back(to_decimal(orders[n]));
    residues.push_back(n == 0 ? std::string("-")
                              : to_decimal(mod_reduce(orders[n], mod)));
    if (n > 0) mod *= p;
  }
  doc.rows.emplace_back("|H1|", values);
  doc.rows.emplace_back("mod p^n", residues);
  return doc;
}

}  // namespace

std::string emit_homology_tower(const HomologyTower& tower, Format format) {
  if (format == Format::kJson) {
    json j = report_json(tower.report);
    j["res_sign"] = tower.res_sign;
    j["homology_limit"] = padic_json(tower.homology_limit);
    json orders = json::array();
    for (const auto& v : tower.level_orders) orders.push_back(to_decimal(v));
    j["level_orders"] = orders;
    if (tower.normalization_warning)
      j["warning"] = "normalization delta(1) = +-1 was not verified";
    return j.dump(2) + "\n";
  }
  TableDoc doc = tower_doc("homology-tower", "homology orders along the tower",
                           tower.level_orders, tower.report.p);
  doc.notes.push_back("res sign: " + std::to_string(tower.res_sign));
  doc.notes.push_back("|H1| limit: " + tower.homology_limit.to_string());
  if (tower.normalization_warning)
    doc.notes.push_back("warning: normalization delta(1) = +-1 was not verified");
  std::ostringstream os;
  os << emit_table(doc, format) << emit_limit_report(tower.report, format);
  return os.str();
}

std::string emit_composite_tower(const CompositeTower& tower, Format format) {
  if (format == Format::kJson) {
    json j = report_json(tower.report);
    j["transformed"] = tower.transformed.to_string();
    j["res_sign"] = tower.res_sign;
    j["transform_sign"] = tower.transform_sign;
    json orders = json::array(), scaled = json::array();
    for (const auto& v : tower.level_orders) orders.push_back(to_decimal(v));
    for (const auto& v : tower.scaled_orders) scaled.push_back(to_decimal(v));
    j["level_orders"] = orders;
    j["scaled_orders"] = scaled;
    j["homology_limit"] = padic_json(tower.homology_limit);
    j["nonp_homology_limit"] = padic_json(tower.nonp_homology_limit);
    return j.dump(2) + "\n";
  }
  TableDoc doc;
  doc.id = "composite-tower";
  doc.title = "tower over levels m p^n (transformed: " +
              tower.transformed.to_string() + ")";
  std::vector<std::string> values, scaled, residues;
  BigInt mod(1);
  for (std::size_t n = 0; n < tower.level_orders.size(); ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    values.push_back(to_decimal(tower.level_orders[n]));
    scaled.push_back(to_decimal(tower.scaled_orders[n]));
    residues.push_back(n == 0 ? std::string("-")
                              : to_decimal(mod_reduce(tower.scaled_orders[n], mod)));
    mod = (n == 0 ? BigInt(tower.report.p) : mod * tower.report.p);
  }
  doc.rows.emplace_back("|H1|", values);
  doc.rows.emplace_back("non-p part", scaled);
  doc.rows.emplace_back("mod p^n", residues);
  doc.notes.push_back("non-p |H1| limit: " + tower.nonp_homology_limit.to_string());
  std::ostringstream os;
  os << emit_table(doc, format) << emit_limit_report(tower.report, format);
  return os.str();
}

std::string emit_class_tower(const ClassTower& tower, Format format) {
  if (format == Format::kJson) {
    json j = report_json(tower.report);
    j["frobenius"] = tower.extended.F.to_string();
    j["q"] = to_decimal(tower.extended.q);
    json orders = json::array();
    for (const auto& v : tower.class_numbers) orders.push_back(to_decimal(v));
    j["class_numbers"] = orders;
    return j.dump(2) + "\n";
  }
  TableDoc doc = tower_doc("class-tower",
                           "class numbers of the constant tower (F = " +
                               tower.extended.F.to_string() + ")",
                           tower.class_numbers, tower.report.p);
  doc.rows[0].first = "|Cl0|";
  std::ostringstream os;
  os << emit_table(doc, format) << emit_limit_report(tower.report, format);
  return os.str();
}

std::string emit_curve_classification(const CurveClassification& cls, Format format) {
  const char* kind = cls.kind == CurveClass::kSupersingular ? "supersingular"
                     : cls.kind == CurveClass::kAnomalous   ? "anomalous"
                                                            : "ordinary-generic";
  if (format == Format::kJson) {
    json j{{"kind", kind}, {"points", cls.points}, {"trace", cls.trace}};
    if (cls.cm_consistent) j["cm_consistent"] = *cls.cm_consistent;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "kind: " << kind << "\npoints: " << cls.points << "\ntrace: " << cls.trace
     << "\n";
  if (cls.cm_consistent)
    os << "cm_consistent: " << (*cls.cm_consistent ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace cycres::cli
