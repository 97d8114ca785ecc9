#include "escrate/serialization.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace escrate {

namespace {

using ojson = nlohmann::ordered_json;

ojson poly_obj(const IntPolynomial& p) {
  ojson o = ojson::object();
  auto m = p.to_map();
  for (auto it = m.rbegin(); it != m.rend(); ++it)  // descending exponents
    o[std::to_string(it->first)] = it->second.get_str();
  return o;
}

ojson ratfunc_obj(const RationalFunction& f) {
  ojson o;
  o["num"] = poly_obj(f.num);
  o["den"] = poly_obj(f.den);
  o["str"] = f.str();
  return o;
}

ojson perron_obj(const PerronResult& p) {
  ojson o;
  o["value"] = round12(p.value);
  o["lo"] = rational_str(p.lo);
  o["hi"] = rational_str(p.hi);
  o["method"] = p.method;
  o["iterations"] = p.iterations;
  if (p.method == "matrix") {
    o["recurrent_components"] = p.recurrent_components;
    o["irreducible"] = p.irreducible;
  }
  if (!p.notes.empty()) o["notes"] = p.notes;
  return o;
}

ojson words_arr(const WordCollection& g) {
  ojson a = ojson::array();
  for (const auto& w : g.words()) a.push_back(w.str());
  return a;
}

std::string dump(const ojson& o) { return o.dump(); }

}  // namespace

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format_g12(v).c_str(), nullptr); }

std::string json_polynomial(const IntPolynomial& p) {
  ojson o;
  o["coefficients"] = poly_obj(p);
  o["str"] = p.str();
  return dump(o);
}

std::string json_transfer_matrix(const TransferMatrix& t) {
  ojson o;
  o["dimension"] = t.n;
  ojson triples = ojson::array();
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      if (t.a[static_cast<size_t>(i)][static_cast<size_t>(j)])
        triples.push_back({i, j, t.a[static_cast<size_t>(i)][static_cast<size_t>(j)]});
  o["triples"] = triples;
  return dump(o);
}

std::string json_correlation(const Word& u, const Word& w, const IntPolynomial& c) {
  ojson o;
  o["u"] = u.str();
  o["w"] = w.str();
  o["correlation"] = poly_obj(c);
  o["str"] = c.str();
  return dump(o);
}

std::string json_period(const WordCollection& g) {
  ojson o;
  o["words"] = words_arr(g);
  ojson per = ojson::array();
  for (const auto& w : g.words()) per.push_back(minimal_period_word(w));
  o["word_periods"] = per;
  o["tau"] = minimal_period_hole(g);
  return dump(o);
}

std::string json_rfunc(const WordCollection& g, const RFunction& r) {
  ojson o;
  o["words"] = words_arr(g);
  o["delta"] = poly_obj(r.delta);
  o["adjugate_sum"] = poly_obj(r.adj_sum);
  o["r"] = ratfunc_obj(r.paper_form);
  o["r_reduced"] = ratfunc_obj(r.reduced);
  return dump(o);
}

std::string json_entropy(int q, const std::string& forbidden, const EntropyResult& e,
                         const TransferMatrix* matrix) {
  ojson o;
  o["q"] = q;
  o["forbidden"] = forbidden;
  o["h_top"] = round12(e.value);
  o["theta"] = perron_obj(e.theta);
  if (matrix) o["transfer_matrix"] = ojson::parse(json_transfer_matrix(*matrix));
  return dump(o);
}

std::string json_escape(const HoleSpec& h, const EscapeRateResult& r) {
  ojson o;
  o["q"] = h.q;
  o["base"] = h.base ? words_arr(*h.base) : ojson::array();
  o["hole"] = words_arr(h.hole);
  o["rho"] = round12(r.rho);
  o["lambda"] = perron_obj(r.lambda);
  o["theta"] = perron_obj(r.theta);
  o["method"] = r.method;
  o["entropy_ambient"] = round12(r.entropy_ambient);
  o["entropy_survivor"] = round12(r.entropy_survivor);
  if (!r.diagnostics.empty()) o["diagnostics"] = r.diagnostics;
  return dump(o);
}

std::string json_compare(const HoleSpec& h1, const HoleSpec& h2, const ComparisonResult& c) {
  ojson o;
  o["q"] = h1.q;
  o["base"] = h1.base ? words_arr(*h1.base) : ojson::array();
  o["hole1"] = words_arr(h1.hole);
  o["hole2"] = words_arr(h2.hole);
  o["ordering"] = ordering_str(c.ordering);
  o["certified"] = c.certified;
  if (c.certified)
    o["gap_lower"] = rational_str(c.gap_lower);
  else
    o["residual"] = rational_str(c.residual);
  o["lambda1"] = perron_obj(c.lambda1);
  o["lambda2"] = perron_obj(c.lambda2);
  o["refinements"] = c.refinements;
  return dump(o);
}

std::string json_series(int q, const WordCollection& hole, const std::vector<BigInt>& coeffs) {
  ojson o;
  o["q"] = q;
  o["hole"] = words_arr(hole);
  ojson a = ojson::array();
  for (const auto& c : coeffs) a.push_back(c.get_str());
  o["coefficients"] = a;
  return dump(o);
}

std::string json_count(int q, const WordCollection& hole, int n, const BigInt& value,
                       const std::string& method) {
  ojson o;
  o["q"] = q;
  o["hole"] = words_arr(hole);
  o["n"] = n;
  o["count"] = value.get_str();
  o["method"] = method;
  return dump(o);
}

std::string json_parry(const ParryData& pd, const std::string& cylinder_word, bool has_cylinder,
                       double cylinder_mu) {
  ojson o;
  o["q"] = pd.q;
  o["block_length"] = pd.block_len;
  ojson st = ojson::array();
  for (const auto& s : pd.states) st.push_back(s.str());
  o["states"] = st;
  o["theta"] = perron_obj(pd.theta);
  ojson u = ojson::array(), v = ojson::array();
  for (double x : pd.u) u.push_back(round12(x));
  for (double x : pd.v) v.push_back(round12(x));
  o["u"] = u;
  o["v"] = v;
  if (has_cylinder) {
    o["cylinder"] = cylinder_word;
    o["measure"] = round12(cylinder_mu);
  }
  return dump(o);
}

std::string json_threshold(int t, int p, int p2, const std::string& variant, const BigInt& value) {
  ojson o;
  o["t"] = t;
  o["p"] = p;
  if (variant == "mixed") o["p2"] = p2;
  o["variant"] = variant;
  o["value"] = value.get_str();
  return dump(o);
}

namespace {

ojson table_row_obj(const TableRow& r) {
  ojson o;
  o["table"] = r.table_id;
  o["row"] = r.row_name;
  o["q"] = r.q;
  o["base"] = r.base;
  o["collection"] = r.collection;
  if (r.expected)
    o["expected"] = round12(*r.expected);
  else
    o["expected"] = nullptr;
  if (r.computed)
    o["computed"] = round12(*r.computed);
  else
    o["computed"] = nullptr;
  if (r.abs_error)
    o["abs_error"] = round12(*r.abs_error);
  else
    o["abs_error"] = nullptr;
  o["status"] = cell_status_str(r.status);
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

}  // namespace

std::string json_table(const std::vector<TableRow>& rows, double tolerance) {
  ojson o;
  o["tolerance"] = tolerance;
  ojson a = ojson::array();
  for (const auto& r : rows) a.push_back(table_row_obj(r));
  o["cells"] = a;
  int pass = 0, fail = 0, erratum = 0, impossible = 0;
  for (const auto& r : rows) switch (r.status) {
      case CellStatus::Pass:
        ++pass;
        break;
      case CellStatus::Fail:
        ++fail;
        break;
      case CellStatus::Erratum:
        ++erratum;
        break;
      case CellStatus::Impossible:
        ++impossible;
        break;
    }
  o["summary"] = {{"pass", pass}, {"fail", fail}, {"erratum", erratum}, {"impossible", impossible}};
  return dump(o);
}

std::string csv_table(const std::vector<TableRow>& rows) {
  std::string out = "table,row,q,base,collection,expected,computed,abs_error,status\n";
  for (const auto& r : rows) {
    out += std::to_string(r.table_id) + "," + r.row_name + "," + std::to_string(r.q) + "," +
           r.base + "," + r.collection + ",";
    out += (r.expected ? format_g12(*r.expected) : "") + std::string(",");
    out += (r.computed ? format_g12(*r.computed) : "") + std::string(",");
    out += (r.abs_error ? format_g12(*r.abs_error) : "") + std::string(",");
    out += cell_status_str(r.status) + "\n";
  }
  return out;
}

std::string json_verification(const VerificationReport& report) {
  ojson o;
  o["suite"] = report.suite;
  o["universe"] = report.universe;
  ojson params = ojson::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  o["params"] = params;
  o["instances"] = report.instances;
  o["exploratory"] = report.exploratory;
  o["passed"] = report.passed();
  ojson fails = ojson::array();
  for (const auto& f : report.failures) fails.push_back({{"instance", f.instance}, {"detail", f.detail}});
  o["failures"] = fails;
  ojson obs = ojson::array();
  for (const auto& f : report.observations)
    obs.push_back({{"instance", f.instance}, {"detail", f.detail}});
  o["observations"] = obs;
  o["wall_seconds"] = round12(report.wall_seconds);
  return dump(o);
}

std::string csv_verification(const VerificationReport& report) {
  std::string out = "suite,kind,instance,detail\n";
  auto esc = [](std::string s) {
    for (auto& c : s)
      if (c == ',') c = ';';
    return s;
  };
  for (const auto& f : report.failures)
    out += report.suite + ",failure," + esc(f.instance) + "," + esc(f.detail) + "\n";
  for (const auto& f : report.observations)
    out += report.suite + ",observation," + esc(f.instance) + "," + esc(f.detail) + "\n";
  return out;
}

std::string csv_escape(const HoleSpec& h, const EscapeRateResult& r) {
  std::string base = h.base ? h.base->str() : "";
  return std::to_string(h.q) + "," + h.hole.str() + "," + base + "," + format_g12(r.rho) + "," +
         format_g12(to_double(r.lambda.hi - r.lambda.lo)) + "\n";
}

}  // namespace escrate
