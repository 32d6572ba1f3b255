#include "lie/report.hpp"

#include <sstream>

namespace lie::report {

json rational(const Rational& r) { return to_string(r); }

json weight(const Weight& w) {
  json a = json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(to_string(w[i]));
  return a;
}

json types(const TypeMultiset& t) {
  json entries = json::array();
  for (const auto& [w, m] : t.entries) entries.push_back({{"weight", weight(w)}, {"mult", m}});
  return {{"algebra", tag_name(t.tag)}, {"types", entries}, {"count", t.count()}};
}

json row(const ClassificationRow& r) {
  return {{"family", r.family},
          {"g0", r.g0_label},
          {"type", std::string(1, r.type) + std::to_string(r.rank)},
          {"nu", r.nu},
          {"k1", r.k1_label},
          {"l1", r.l1_label},
          {"l2", r.l2_label},
          {"Y", r.Y_label},
          {"X", r.X_label},
          {"invariant_algebra", r.algebra_text()},
          {"invariant_degree", r.invariant_degree},
          {"quaternionic", r.quaternionic},
          {"tube", r.tube_type}};
}

json datum(const BdsDatum& d) {
  json deltas = json::object();
  for (int i = -2; i <= 2; ++i) {
    json a = json::array();
    for (const auto& b : d.Delta(i)) a.push_back(weight(b));
    deltas[std::to_string(i)] = a;
  }
  json psi_k = json::array();
  for (const auto& s : d.k().simples()) psi_k.push_back(weight(s));
  return {{"case", d.key()},
          {"Delta", deltas},
          {"epsilon", weight(d.epsilon)},
          {"mu", weight(d.mu)},
          {"nu_star", weight(d.nu_star)},
          {"eps_star", weight(d.eps_star)},
          {"rho_g", weight(d.rho_g)},
          {"rho_k", weight(d.rho_k)},
          {"Psi_k", psi_k},
          {"c", d.c},
          {"s", d.s},
          {"quaternionic", d.quaternionic()},
          {"tube", d.herm.tube},
          {"spin", spin_structure(d)}};
}

json cascade(const Cascade& c, const HermitianPair& h) {
  json g = json::array();
  for (const auto& x : c.gammas) g.push_back(weight(x));
  SumCheck sc = verify_sum(c, h);
  const char* status = sc.status == SumStatus::holds ? "holds" : sc.status == SumStatus::fails ? "fails" : "not_tube";
  return {{"gammas", g},
          {"r", c.r},
          {"sum", weight(sc.sum)},
          {"sum_is_minus_2_eps_star", status},
          {"partial_orthogonality", verify_partial_orthogonality(c, h)}};
}

json schmid(int m, const Cascade& c, const HermitianPair& h) {
  json j = types(lie::schmid(m, c, h));
  j["m"] = m;
  return j;
}

json common(const CommonReport& r) {
  json list = json::array();
  for (const auto& t : r.types) {
    json e = {{"weight", weight(t.weight)},
              {"mult_bds_truncated", t.mult_bds},
              {"mult_holo_truncated", t.mult_holo},
              {"growth_flag", t.growth},
              {"windows", t.windows},
              {"window_mults", t.window_mults}};
    if (r.pipeline == "tube") {
      e["a"] = t.a;
      e["certified_j"] = t.certified_j;
    }
    list.push_back(e);
  }
  return {{"pipeline", r.pipeline},
          {"common_types", list},
          {"truncation", {{"m_max", r.m_max}, {"r_max", r.r_max}, {"j_max", r.j_max}}},
          {"hypotheses", {{"tube", r.tube}, {"relative_invariant_degree", r.invariant_degree}, {"q", rational(r.q)}}},
          {"growth_semantics", "evidence: strictly increasing truncated multiplicity over three windows"}};
}

json evidence(const AdmissibilityEvidence& e) {
  return {{"isotype", weight(e.isotype)},
          {"windows", e.windows},
          {"multiplicities", e.multiplicities},
          {"growth", e.growth},
          {"stabilized", e.stabilized},
          {"label", e.label}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream out;
  out << "type,nu,g0,k1,l1,l2,Y,X,invariant_degree,quaternionic,tube\n";
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  for (const auto& r : rows)
    out << r.type << r.rank << ',' << r.nu << ',' << q(r.g0_label) << ',' << q(r.k1_label) << ',' << q(r.l1_label)
        << ',' << q(r.l2_label) << ',' << q(r.Y_label) << ',' << q(r.X_label) << ',' << r.invariant_degree << ','
        << r.quaternionic << ',' << r.tube_type << '\n';
  return out.str();
}

}  // namespace lie::report
