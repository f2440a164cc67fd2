#include "lfl_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lfl::io {

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_float(x).c_str(), nullptr);
}

std::string CsvTable::render() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

namespace {

std::string str(u64 v) { return std::to_string(v); }

}  // namespace

ordered_json to_json(const CongruenceRecord& rec) {
  return {{"lambda", rec.lambda},
          {"rho", rec.rho},
          {"r", rec.r},
          {"s", rec.s},
          {"witness", "(" + str(rec.r) + "," + str(rec.s) + ")"}};
}

ordered_json to_json(const ThetaResult& t) {
  return {{"value", t.value}, {"argmin", t.argmin}, {"exponent_ratio", number(t.exponent_ratio)}};
}

ordered_json to_json(const LValue& v) {
  return {{"p", v.character.p},
          {"j", v.character.j},
          {"s", number(v.s)},
          {"re", number(v.value.real())},
          {"im", number(v.value.imag())},
          {"method", to_string(v.method)},
          {"err_estimate", number(v.err_estimate)}};
}

ordered_json to_json(const AkConstant& a) {
  return {{"k", a.k}, {"cutoff", a.cutoff}, {"value", number(a.value)}, {"tail_bound", number(a.tail_bound)}};
}

ordered_json to_json(const MomentReport& rep) {
  return {{"p", rep.p},
          {"d", rep.d},
          {"m", rep.m},
          {"k", rep.k},
          {"s", number(rep.s)},
          {"filter", rep.filter},
          {"value", number(rep.value)},
          {"main_term", number(rep.main_term)},
          {"deviation", number(rep.deviation)},
          {"character_count", rep.character_count},
          {"excluded", rep.excluded},
          {"degenerate", rep.degenerate}};
}

ordered_json to_json(const TwistedMoments& t) {
  return {{"A_re", number(t.A.real())},
          {"A_im", number(t.A.imag())},
          {"B", number(t.B)},
          {"B_imag_residue", number(t.B_imag)},
          {"A_main", number(t.A_main)},
          {"B_main", number(t.B_main)}};
}

ordered_json to_json(const MollifiedMoments& mm) {
  return {{"C", number(mm.C)},
          {"D", number(mm.D)},
          {"C_imag_residue", number(mm.C_imag)},
          {"character_count", mm.character_count}};
}

ordered_json to_json(const MollifierReport& rep) {
  ordered_json coeffs = ordered_json::array();
  for (double x : rep.coeffs) coeffs.push_back(number(x));
  ordered_json values = ordered_json::array();
  for (std::size_t i = 0; i < rep.characters.size(); ++i) {
    values.push_back({{"j", rep.characters[i]}, {"abs_L", number(rep.abs_values[i])}});
  }
  return {{"p", rep.p},
          {"d", rep.d},
          {"m", rep.m},
          {"H", rep.H},
          {"C", number(rep.C)},
          {"D", number(rep.D)},
          {"lower_bound", number(rep.lower_bound)},
          {"count_nonzero", rep.count_nonzero},
          {"character_count", rep.character_count},
          {"proportion", number(rep.proportion)},
          {"epsilon_nv", number(rep.epsilon_nv)},
          {"predicted_D_shape", number(rep.predicted_D_shape)},
          {"theta_ratio", number(rep.theta_ratio)},
          {"principal_excluded", rep.principal_excluded},
          {"coeffs", coeffs},
          {"values", values}};
}

ordered_json to_json(const GrowthReport& rep) {
  return {{"Q", rep.Q},
          {"k", rep.k},
          {"subset_fraction", number(rep.subset_fraction)},
          {"seed", rep.seed},
          {"set_size", rep.set_size},
          {"product_size", rep.product_size},
          {"c_obs", number(rep.c_obs)}};
}

ordered_json to_json(const CyclotomicPoly& poly) {
  return {{"d", poly.d},
          {"coeffs", poly.coeffs},
          {"l1_norm", poly.l1_norm()},
          {"norm_bound", number(poly.norm_bound())}};
}

ordered_json to_json(const SurveyReport& rep) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& e : rep.entries) {
    if (!e.witness) continue;
    const auto& w = *e.witness;
    witnesses.push_back({{"p", e.p},
                         {"lambda", w.lambda},
                         {"order", w.order},
                         {"rho", w.rho},
                         {"witness", "(" + str(w.r) + "," + str(w.s) + ")"}});
  }
  return {{"Qlo", rep.Qlo},
          {"Qhi", rep.Qhi},
          {"D", rep.D},
          {"R", rep.R},
          {"scanned", rep.scanned},
          {"exceptional", rep.exceptional},
          {"exceptional_count", rep.exceptional.size()},
          {"bound_value", number(rep.bound_value)},
          {"witnesses", witnesses}};
}

ordered_json to_json(const AlmostAllReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"p", r.p},
                    {"d", r.d},
                    {"m", r.m},
                    {"moment_all", number(r.moment_all)},
                    {"moment_odd", number(r.moment_odd)},
                    {"deviation_all", number(r.deviation_all)},
                    {"deviation_odd", number(r.deviation_odd)}});
  }
  return {{"Q", rep.Q},
          {"D", rep.D},
          {"R", rep.R},
          {"k", rep.k},
          {"main_term", number(rep.main_term)},
          {"scanned", rep.survey.scanned},
          {"exceptional", rep.survey.exceptional},
          {"exceptional_count", rep.survey.exceptional.size()},
          {"exceptional_envelope", number(rep.survey.bound_value)},
          {"max_abs_deviation", number(rep.max_abs_deviation)},
          {"median_abs_deviation", number(rep.median_abs_deviation)},
          {"max_abs_deviation_odd", number(rep.max_abs_deviation_odd)},
          {"median_abs_deviation_odd", number(rep.median_abs_deviation_odd)},
          {"rows", rows}};
}

CsvTable to_csv(const MomentReport& rep) {
  return {{"p", "d", "m", "k", "filter", "value", "main_term", "deviation", "character_count"},
          {{str(rep.p), str(rep.d), str(rep.m), str(rep.k), rep.filter, format_float(rep.value),
            format_float(rep.main_term), format_float(rep.deviation), str(rep.character_count)}}};
}

CsvTable to_csv(const MollifierReport& rep) {
  return {{"p", "d", "m", "H", "C", "D", "lower_bound", "count_nonzero", "proportion", "theta_ratio"},
          {{str(rep.p), str(rep.d), str(rep.m), str(rep.H), format_float(rep.C), format_float(rep.D),
            format_float(rep.lower_bound), str(rep.count_nonzero), format_float(rep.proportion),
            format_float(rep.theta_ratio)}}};
}

CsvTable to_csv(const SurveyReport& rep) {
  CsvTable t{{"p", "exceptional", "witness_lambda", "witness_order", "rho"}, {}};
  for (const auto& e : rep.entries) {
    if (e.witness) {
      t.rows.push_back({str(e.p), "1", str(e.witness->lambda), str(e.witness->order), str(e.witness->rho)});
    } else {
      t.rows.push_back({str(e.p), "0", "", "", ""});
    }
  }
  return t;
}

CsvTable to_csv(const AlmostAllReport& rep) {
  CsvTable t{{"p", "d", "m", "k", "moment_all", "moment_odd", "deviation_all", "deviation_odd"}, {}};
  for (const auto& r : rep.rows) {
    t.rows.push_back({str(r.p), str(r.d), str(r.m), str(rep.k), format_float(r.moment_all),
                      format_float(r.moment_odd), format_float(r.deviation_all), format_float(r.deviation_odd)});
  }
  return t;
}

CsvTable to_csv(const GrowthReport& rep) {
  return {{"Q", "k", "subset_fraction", "seed", "set_size", "product_size", "c_obs"},
          {{str(rep.Q), std::to_string(rep.k), format_float(rep.subset_fraction), str(rep.seed),
            str(rep.set_size), str(rep.product_size), format_float(rep.c_obs)}}};
}

CsvTable flat_csv(const ordered_json& obj) {
  CsvTable t{{"key", "value"}, {}};
  for (const auto& [key, val] : obj.items()) {
    std::string cell;
    if (val.is_string()) {
      cell = val.get<std::string>();
    } else if (val.is_number_float()) {
      cell = format_float(val.get<double>());
    } else {
      cell = val.dump();
    }
    // Quote cells holding separators.
    if (cell.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      cell = quoted + "\"";
    }
    t.rows.push_back({key, cell});
  }
  return t;
}

}  // namespace lfl::io
