#include "zeroheavy/serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace zeroheavy {

using ojson = nlohmann::ordered_json;

std::string transcript_jsonl(const std::vector<TranscriptEntry>& transcript) {
  std::string out;
  for (const auto& e : transcript) {
    ojson j;
    j["m"] = e.m;
    j["k"] = e.k;
    j["base"] = e.base;
    j["tau_prime"] = e.tau_prime;
    j["x_level"] = e.x_level;
    j["x_width"] = to_string(e.x_width);
    j["y_width"] = to_string(e.y_width);
    j["x"] = to_string(e.x);
    j["y"] = to_string(e.y);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string certificates_json(const ConstructionResult& r) {
  ojson j;
  j["status"] = r.status == RunStatus::Complete ? "complete" : "PARTIAL";
  j["run_status"] = to_string(r.status);
  if (!r.message.empty()) j["message"] = r.message;
  j["iterations"] = r.iterations;
  j["conjugation"] = r.conjugation.describe();
  j["x_interval"] = {to_string(r.x_interval.lo), to_string(r.x_interval.hi)};
  ojson xs = ojson::array();
  for (const auto& p : r.x_prefixes) xs.push_back({{"base", p.base}, {"length", p.size()}});
  j["x_prefixes"] = xs;
  j["all_valid"] = r.all_valid();
  ojson certs = ojson::array();
  for (const auto& c : r.certificates) {
    ojson cj;
    cj["label"] = c.label;
    cj["k"] = c.k;
    cj["base"] = c.base;
    cj["function"] = c.function;
    cj["prefix_length"] = c.prefix.size();
    cj["valid"] = c.valid;
    ojson cps = ojson::array();
    for (std::size_t i = 0; i < c.certificate.checkpoints.size(); ++i) {
      const auto& cp = c.certificate.checkpoints[i];
      cps.push_back({{"index", i + 1},
                     {"length", cp.length},
                     {"frequency", to_string(cp.frequency)},
                     {"bound", to_string(Rational(1) - Rational(1, static_cast<unsigned long>(i + 1)))}});
    }
    cj["checkpoints"] = cps;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  return j.dump(2) + "\n";
}

std::string cover_report_csv(const CoverBoundReport& r) {
  std::ostringstream os;
  os << "M,count,cost_upper\n";
  for (const auto& row : r.rows) os << row.M << ',' << row.count.get_str() << ',' << to_string(row.cost) << '\n';
  return os.str();
}

std::string cover_report_json(const CoverBoundReport& r) {
  ojson j;
  j["base"] = r.base;
  j["s"] = to_string(r.s);
  j["epsilon"] = to_string(r.epsilon);
  j["epsilon_valid"] = r.epsilon_valid;
  j["K"] = r.K;
  j["M_cap"] = r.M_cap;
  j["m0"] = r.m0;
  j["rows"] = r.rows.size();
  j["tail_upper"] = to_string(r.tail);
  j["total_upper"] = to_string(r.total);
  j["total_decimal"] = to_decimal(r.total, 40);
  j["formula_lower"] = to_string(r.formula.lo);
  j["formula_upper"] = to_string(r.formula.hi);
  j["formula_decimal"] = to_decimal(r.formula.hi, 40);
  j["total_le_formula"] = r.total <= r.formula.lo;
  return j.dump(2) + "\n";
}

}  // namespace zeroheavy
