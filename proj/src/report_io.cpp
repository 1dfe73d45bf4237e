#include "mpbern/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace mpbern {

namespace {

Family family_from(const json& j) {
  auto f = parse_family(j.get<std::string>());
  if (!f) throw std::invalid_argument("unknown family " + j.dump());
  return *f;
}

ReportKind kind_from(const std::string& s) {
  if (s == "theorem") return ReportKind::Theorem;
  if (s == "classical") return ReportKind::Classical;
  if (s == "counterexample") return ReportKind::Counterexample;
  throw std::invalid_argument("unknown report kind " + s);
}

Rational rational_from(const json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

void to_json(json& j, const Valuation& v) {
  if (v.is_infinite()) {
    j = "inf";
  } else {
    j = v.value();
  }
}

void from_json(const json& j, Valuation& v) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    v = Valuation::infinity();
  } else {
    v = Valuation(j.get<std::int64_t>());
  }
}

void to_json(json& j, const Hypotheses& h) {
  j = json{{"orders_at_least_N", h.orders_at_least_N},
           {"wt_plus_below_p_minus_1", h.wt_plus_below_p_minus_1},
           {"orders_congruent", h.orders_congruent},
           {"p_minus_1_not_dividing", h.p_minus_1_not_dividing},
           {"orders_even", h.orders_even},
           {"prime_bound", h.prime_bound}};
}

void from_json(const json& j, Hypotheses& h) {
  j.at("orders_at_least_N").get_to(h.orders_at_least_N);
  j.at("wt_plus_below_p_minus_1").get_to(h.wt_plus_below_p_minus_1);
  j.at("orders_congruent").get_to(h.orders_congruent);
  j.at("p_minus_1_not_dividing").get_to(h.p_minus_1_not_dividing);
  j.at("orders_even").get_to(h.orders_even);
  j.at("prime_bound").get_to(h.prime_bound);
}

void to_json(json& j, const CongruenceReport& r) {
  j = json{{"kind", to_string(r.kind)},
           {"family", r.family ? json(to_string(*r.family)) : json(nullptr)},
           {"index", r.k ? json(r.k->to_string()) : json(nullptr)},
           {"p", r.p},
           {"m", r.m},
           {"n", r.n},
           {"N", r.N},
           {"scale_exponent", r.scale_exponent},
           {"lhs", to_string(r.lhs)},
           {"rhs", to_string(r.rhs)},
           {"achieved", r.achieved},
           {"required", r.required},
           {"pass", r.pass},
           {"hypotheses_hold", r.hypotheses_hold()},
           {"hypotheses", r.hypotheses}};
}

void from_json(const json& j, CongruenceReport& r) {
  r.kind = kind_from(j.at("kind").get<std::string>());
  r.family = j.at("family").is_null() ? std::nullopt : std::optional<Family>(family_from(j.at("family")));
  r.k = j.at("index").is_null() ? std::nullopt : std::optional<Index>(Index::parse(j.at("index").get<std::string>()));
  j.at("p").get_to(r.p);
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("N").get_to(r.N);
  j.at("scale_exponent").get_to(r.scale_exponent);
  r.lhs = rational_from(j.at("lhs"));
  r.rhs = rational_from(j.at("rhs"));
  j.at("achieved").get_to(r.achieved);
  j.at("required").get_to(r.required);
  j.at("pass").get_to(r.pass);
  j.at("hypotheses").get_to(r.hypotheses);
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"kind", to_string(r.kind)},
           {"index", r.k.to_string()},
           {"p", r.p},
           {"range_lo", r.range_lo},
           {"range_hi", r.range_hi},
           {"minimum", r.minimum},
           {"argmin", r.argmin},
           {"bound", r.bound},
           {"hypothesis_ok", r.hypothesis_ok},
           {"pass", r.pass},
           {"tail_start", r.tail_start ? json(*r.tail_start) : json(nullptr)},
           {"tail_covered", r.tail_covered}};
}

void from_json(const json& j, BoundReport& r) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "keylemma") {
    r.kind = BoundKind::KeyLemma;
  } else if (kind == "fmin") {
    r.kind = BoundKind::FMin;
  } else {
    throw std::invalid_argument("unknown bound kind " + kind);
  }
  r.k = Index::parse(j.at("index").get<std::string>());
  j.at("p").get_to(r.p);
  j.at("range_lo").get_to(r.range_lo);
  j.at("range_hi").get_to(r.range_hi);
  j.at("minimum").get_to(r.minimum);
  j.at("argmin").get_to(r.argmin);
  j.at("bound").get_to(r.bound);
  j.at("hypothesis_ok").get_to(r.hypothesis_ok);
  j.at("pass").get_to(r.pass);
  r.tail_start = j.at("tail_start").is_null() ? std::nullopt
                                                : std::optional<std::int64_t>(j.at("tail_start").get<std::int64_t>());
  j.at("tail_covered").get_to(r.tail_covered);
}

void to_json(json& j, const MahlerExpansion& e) {
  json coeffs = json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(to_string(c));
  json integral = json::array();
  for (bool b : e.integral) integral.push_back(b);
  j = json{{"m", e.m},
           {"n", e.n},
           {"N", e.N},
           {"p", e.p},
           {"coeffs", coeffs},
           {"integral", integral},
           {"all_integral", e.all_integral()},
           {"hypotheses_hold", e.hypotheses_hold()}};
}

void from_json(const json& j, MahlerExpansion& e) {
  j.at("m").get_to(e.m);
  j.at("n").get_to(e.n);
  j.at("N").get_to(e.N);
  j.at("p").get_to(e.p);
  e.coeffs.clear();
  for (const auto& c : j.at("coeffs")) e.coeffs.push_back(rational_from(c));
  e.integral = j.at("integral").get<std::vector<bool>>();
}

void to_json(json& j, const HValue& h) {
  j = json{{"index", h.k.to_string()},
           {"p", h.p},
           {"j", h.j},
           {"value", to_string(h.value)},
           {"valuation", h.valuation}};
}

void to_json(json& j, const MpbValue& v) {
  j = json{{"index", v.k.to_string()},
           {"n", v.n},
           {"family", to_string(v.family)},
           {"value", to_string(v.value)},
           {"method", to_string(v.method)}};
}

MpbValue mpb_value_from_json(const json& j) {
  auto method = parse_method(j.at("method").get<std::string>());
  if (!method) throw std::invalid_argument("unknown method " + j.at("method").dump());
  return MpbValue{Index::parse(j.at("index").get<std::string>()), j.at("n").get<std::int64_t>(),
                  family_from(j.at("family")), rational_from(j.at("value")), *method};
}

std::string csv_header_reports() {
  return "kind,family,index,p,m,n,N,scale_exponent,lhs,rhs,achieved,required,pass,hypotheses_hold";
}

std::string csv_row(const CongruenceReport& r) {
  std::ostringstream os;
  os << to_string(r.kind) << ',' << (r.family ? to_string(*r.family) : "") << ",\""
     << (r.k ? r.k->to_string() : "") << "\"," << r.p << ',' << r.m << ',' << r.n << ',' << r.N << ','
     << r.scale_exponent << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << r.achieved << ','
     << r.required << ',' << (r.pass ? "true" : "false") << ',' << (r.hypotheses_hold() ? "true" : "false");
  return os.str();
}

std::string csv_header_summary() { return "family,index,p,N,cells,hypothesis_cells,failures,min_margin"; }

std::string csv_row(const ScanSummaryRow& row) {
  std::ostringstream os;
  os << to_string(row.family) << ",\"" << row.k.to_string() << "\"," << row.p << ',' << row.N << ','
     << row.cells << ',' << row.hypothesis_cells << ',' << row.failures << ','
     << (row.min_margin ? std::to_string(*row.min_margin) : "inf");
  return os.str();
}

}  // namespace mpbern
