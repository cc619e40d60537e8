#include "nilsymp/json_io.hpp"

#include <algorithm>

namespace nilsymp {

Json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

static Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw SchemaError("expected an integer or a rational string");
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().code();
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.coords);
  j["positive_roots"] = roots;
  j["max_root"] = rs.max_root().coords;
  return j;
}

Json structure_table_json(const StructureTable& st) {
  Json rows = Json::array();
  for (const auto& [a, b, c, k] : st.table())
    rows.push_back(Json::array({a, b, rational_json(c), k}));
  Json j;
  j["type"] = st.roots().type().code();
  j["triples"] = rows;
  return j;
}

Json algebra_to_json(const NilAlgebra& n) {
  Json j;
  j["labels"] = n.labels();
  j["dim"] = n.dim();
  j["k"] = n.k();
  j["grading"] = n.grading();
  Json br = Json::array();
  for (const auto& [key, terms] : n.bracket_table())
    for (const auto& t : terms)
      br.push_back(Json::array({key.first, key.second, rational_json(t.c), t.k}));
  j["brackets"] = br;
  return j;
}

NilAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("labels") || !j.contains("brackets"))
    throw SchemaError("algebra json needs labels and brackets");
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  const int dim = j.contains("dim") ? j["dim"].get<int>() : static_cast<int>(labels.size());
  if (dim != static_cast<int>(labels.size())) throw SchemaError("dim disagrees with labels");

  std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets;
  for (const auto& row : j["brackets"]) {
    if (!row.is_array() || row.size() != 4) throw SchemaError("bracket rows are [i,j,c,k]");
    const int a = row[0].get<int>(), b = row[1].get<int>(), k = row[3].get<int>();
    if (a < 0 || b < 0 || k < 0 || a >= dim || b >= dim || k >= dim)
      throw SchemaError("bracket index out of range");
    if (a >= b) throw SchemaError("bracket rows must be ordered i < j");
    brackets[{a, b}].push_back({k, rational_from_json(row[2])});
  }

  std::vector<int> grading;
  if (j.contains("grading") && !j["grading"].is_null()) {
    grading = j["grading"].get<std::vector<int>>();
    if (static_cast<int>(grading.size()) != dim) throw SchemaError("grading size mismatch");
  }

  // nilpotency check (and derived grading) via a provisional algebra
  NilAlgebra prov = NilAlgebra::make(labels, std::vector<int>(dim, 1), brackets);
  // Jacobi sweep
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int z = y + 1; z < dim; ++z) {
        QVec acc(dim);
        const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
        for (const auto& t : tri)
          for (const auto& b1 : prov.bracket(t[0], t[1]))
            for (const auto& b2 : prov.bracket(b1.k, t[2])) acc[b2.k] += b1.c * b2.c;
        for (const auto& v : acc)
          if (v != 0) throw JacobiFail("ingested brackets violate the Jacobi identity");
      }
  const auto lcs = prov.lower_central_series();  // throws NotNilpotent if it stalls

  if (grading.empty()) {
    // basis vectors inside c^g but not c^{g+1} get grade g+1
    grading.assign(dim, 1);
    for (int i = 0; i < dim; ++i) {
      QVec e(dim);
      e[i] = 1;
      int g = 0;
      while (g + 1 < static_cast<int>(lcs.size()) && lcs[g + 1].contains(e)) ++g;
      grading[i] = g + 1;
    }
  } else {
    const int k = *std::max_element(grading.begin(), grading.end());
    for (int g = 1; g <= k; ++g)
      if (std::find(grading.begin(), grading.end(), g) == grading.end())
        throw SchemaError("grading values must span 1..k");
    for (const auto& [key, terms] : brackets)
      for (const auto& t : terms)
        if (grading[t.k] != grading[key.first] + grading[key.second])
          throw SchemaError("brackets must respect the grading");
  }
  return NilAlgebra::make(std::move(labels), std::move(grading), std::move(brackets));
}

Json form_to_json(const ExtForm& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.coeffs()) {
    Json t = Json::array();
    for (int i : idx) t.push_back(i);
    t.push_back(rational_json(c));
    terms.push_back(t);
  }
  Json j;
  j["degree"] = f.degree();
  j["terms"] = terms;
  return j;
}

ExtForm form_from_json(const Json& j, int dim, int degree) {
  const Json& terms = j.is_array() ? j : j.at("terms");
  ExtForm f(dim, degree);
  for (const auto& row : terms) {
    if (!row.is_array() || static_cast<int>(row.size()) != degree + 1)
      throw SchemaError("form terms are [i_1..i_p, coeff]");
    std::vector<int> idx;
    for (int s = 0; s < degree; ++s) idx.push_back(row[s].get<int>());
    f.add_term(std::move(idx), rational_from_json(row[degree]));
  }
  return f;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["target"] = to_string(v.target);
  j["outcome"] = to_string(v.outcome);
  if (v.witness) j["witness"] = form_to_json(*v.witness);
  if (v.obstruction) {
    Json o;
    o["kind"] = to_string(v.obstruction->kind);
    if (v.obstruction->j >= 0) o["j"] = v.obstruction->j;
    if (v.obstruction->t >= 0) o["t"] = v.obstruction->t;
    if (v.obstruction->dim_n >= 0) o["dim"] = v.obstruction->dim_n;
    if (v.obstruction->dim_upper >= 0) o["dim_upper_j"] = v.obstruction->dim_upper;
    if (v.obstruction->dim_lower >= 0) o["dim_lower_j"] = v.obstruction->dim_lower;
    o["detail"] = v.obstruction->detail;
    j["obstruction"] = o;
  }
  if (v.certificate) {
    Json c;
    c["samples"] = v.certificate->samples;
    c["prime"] = v.certificate->prime;
    c["max_rank_seen"] = v.certificate->max_rank_seen;
    c["dim"] = v.certificate->dim;
    c["failure_bound"] = to_string(v.certificate->failure_bound);
    j["certificate"] = c;
  }
  return j;
}

Json hwv_report_json(const HwvReport& r) {
  Json j;
  j["case"] = r.case_code;
  j["dim"] = r.dim;
  j["b2"] = r.b2;
  j["w12"] = r.w12_count;
  j["hwv"] = r.hwv_count;
  j["verified"] = r.ok;
  if (!r.ok) j["failure"] = r.failure;
  return j;
}

}  // namespace nilsymp
