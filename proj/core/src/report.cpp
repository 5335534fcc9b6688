#include "folcoh/report.hpp"

#include <sstream>

#include "folcoh/cohomology.hpp"
#include "folcoh/complexes.hpp"
#include "folcoh/errors.hpp"
#include "folcoh/symplectic.hpp"
#include "folcoh/verdicts.hpp"

namespace folcoh {

using nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

ordered_json not_applicable(const std::string& why) {
  return ordered_json{{"applicable", false}, {"note", why}};
}

ordered_json cell_dims(const std::map<CellKey, int>& dims) {
  ordered_json cells = ordered_json::array();
  for (const auto& [key, dim] : dims)
    cells.push_back({{"p", key.first}, {"q", key.second}, {"dim", dim}});
  return cells;
}

ordered_json bigraded_section(const DoubleComplex& dc, Theory t) {
  CohomologyReport rep = cohomology_dims(dc, t);
  ordered_json sec;
  if (t != Theory::Total) sec["cells"] = cell_dims(rep.dims);
  ordered_json by_degree = ordered_json::array();
  for (int n = dc.min_total_degree(); n <= dc.max_total_degree(); ++n)
    by_degree.push_back({{"degree", n}, {"dim", rep.total_in_degree(n)}});
  sec["by_degree"] = by_degree;
  return sec;
}

ordered_json graded_section(const CochainComplex& cx, Theory t) {
  CohomologyReport rep = symplectic_cohomology_dims(cx, t);
  ordered_json by_degree = ordered_json::array();
  for (const auto& [j, dim] : rep.graded_dims)
    by_degree.push_back({{"degree", j}, {"dim", dim}});
  return ordered_json{{"by_degree", by_degree}};
}

ordered_json inequality_section(const InequalityReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const auto& [n, ineq] : rep.per_degree)
    rows.push_back({{"degree", n},
                    {"lhs", ineq.lhs},
                    {"rhs", ineq.rhs},
                    {"equal", ineq.equal()},
                    {"strict", ineq.strict()}});
  return ordered_json{{"rows", rows},
                      {"overall_equality", rep.overall_equality},
                      {"lemma", rep.lemma},
                      {"lemma_equivalent", rep.lemma_equivalent}};
}

ordered_json filtration_section(const DoubleComplex& dc, Filtration f, int max_page) {
  ordered_json pages = ordered_json::array();
  for (int r = 0; r <= max_page; ++r) {
    SpectralPage page = spectral_page(dc, f, r);
    pages.push_back({{"r", r}, {"cells", cell_dims(page.dims)}});
  }
  return ordered_json{{"pages", pages}, {"degeneration_page", degeneration_page(dc, f)}};
}

ordered_json decomposition_section(const ModelSpec& spec, const DoubleComplex& dc,
                                   LaplacianKind kind) {
  DecompositionReport rep = decomposition_check(spec, kind);
  CohomologyReport coh =
      cohomology_dims(dc, kind == LaplacianKind::BC ? Theory::BottChern : Theory::Aeppli);
  ordered_json cells = ordered_json::array();
  bool harmonic_matches = true;
  for (const auto& [key, cell] : rep.cells) {
    cells.push_back({{"p", key.first},
                     {"q", key.second},
                     {"harmonic_dim", cell.harmonic_dim},
                     {"middle_dim", cell.middle_dim},
                     {"last_dim", cell.last_dim},
                     {"ok", cell.ok()}});
    auto it = coh.dims.find(key);
    int coh_dim = it == coh.dims.end() ? 0 : it->second;
    harmonic_matches = harmonic_matches && cell.harmonic_dim == coh_dim;
  }
  return ordered_json{
      {"cells", cells}, {"ok", rep.ok()}, {"harmonic_matches_cohomology", harmonic_matches}};
}

CochainComplex de_rham_complex(const ModelSpec& spec) {
  CochainComplex cx;
  for (int k = 0; k <= spec.num_generators(); ++k) {
    cx.degrees[k] = int(total_basis(spec, k).size());
    cx.d[k] = total_operator_matrix(spec, k);
  }
  return cx;
}

const char* field_name(CoeffField f) {
  return f == CoeffField::Rational ? "rational" : "gaussian";
}

}  // namespace

AnalysisRequest AnalysisRequest::all() {
  AnalysisRequest r;
  r.cohomology = r.lemma = r.froelicher = r.spectral = true;
  r.symplectic = r.hodge = r.duality = r.lefschetz = true;
  return r;
}

bool AnalysisRequest::any() const {
  return cohomology || lemma || froelicher || spectral || symplectic || hodge || duality ||
         lefschetz;
}

ordered_json build_report(const ModelSpec& spec, const AnalysisRequest& req) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["tool"] = "folcoh";
  doc["tool_version"] = kToolVersion;
  doc["exact_arithmetic"] = true;
  doc["model"] = ordered_json{{"name", spec.name},
                              {"field", field_name(spec.field)},
                              {"generators", spec.num_generators()},
                              {"complex", spec.is_complex()},
                              {"has_omega", spec.omega.has_value()},
                              {"half_codim", spec.half_codim}};

  ValidationReport validation = validate(spec);
  ordered_json checks = ordered_json::array();
  for (const ValidationCheck& c : validation.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  doc["validation"] = ordered_json{{"passed", validation.ok()}, {"checks", checks}};
  if (!validation.ok()) return doc;

  const bool is_complex = spec.is_complex();
  const bool has_omega = spec.omega.has_value();
  const std::string no_bigrading = "model has no complex bigrading";
  const std::string no_omega = "model has no symplectic form";

  if (req.cohomology) {
    ordered_json sec{{"applicable", true}};
    if (is_complex) {
      DoubleComplex dc = double_complex_from_model(spec);
      ordered_json big;
      for (Theory t : {Theory::Total, Theory::Delta1, Theory::Delta2, Theory::BottChern,
                       Theory::Aeppli})
        big[theory_name(t)] = bigraded_section(dc, t);
      sec["bigraded"] = big;
    }
    ordered_json graded;
    graded[theory_name(Theory::DeRham)] = graded_section(de_rham_complex(spec), Theory::DeRham);
    if (has_omega) {
      CochainComplex cx = symplectic_complex(spec);
      for (Theory t : {Theory::DLambda, Theory::DPlusDLambda, Theory::DDLambda})
        graded[theory_name(t)] = graded_section(cx, t);
    }
    sec["graded"] = graded;
    doc["cohomology"] = sec;
  }

  if (req.lemma) {
    if (is_complex) {
      LemmaVerdict v = lemma_check(double_complex_from_model(spec));
      doc["lemma"] = ordered_json{{"applicable", true},
                                  {"by_definition", v.by_definition},
                                  {"conditions",
                                   std::vector<bool>(v.six_conditions.begin(),
                                                     v.six_conditions.end())},
                                  {"consistent", v.consistent},
                                  {"holds", v.holds()}};
    } else {
      doc["lemma"] = not_applicable(no_bigrading);
    }
  }

  if (req.froelicher) {
    ordered_json sec{{"applicable", is_complex || has_omega}};
    if (is_complex) {
      DoubleComplex dc = double_complex_from_model(spec);
      sec["versus_edges"] = inequality_section(froelicher_bigraded(dc));
      sec["versus_total"] = inequality_section(froelicher_bigraded_total(dc));
    }
    if (has_omega)
      sec["symplectic"] =
          inequality_section(froelicher_symplectic(symplectic_complex(spec), spec.half_codim));
    if (!is_complex && !has_omega) sec["note"] = "no comparison applies";
    doc["froelicher"] = sec;
  }

  if (req.spectral) {
    ordered_json sec{{"applicable", is_complex || has_omega}};
    if (is_complex) {
      DoubleComplex dc = double_complex_from_model(spec);
      sec["bigraded"] = ordered_json{
          {"first", filtration_section(dc, Filtration::First, req.spectral_max_page)},
          {"second", filtration_section(dc, Filtration::Second, req.spectral_max_page)}};
    }
    if (has_omega) {
      DoubleComplex doub = doub_construction(symplectic_complex(spec), 1, -1);
      sec["doub"] = ordered_json{
          {"first", filtration_section(doub, Filtration::First, req.spectral_max_page)},
          {"second", filtration_section(doub, Filtration::Second, req.spectral_max_page)}};
    }
    if (!is_complex && !has_omega) sec["note"] = no_bigrading;
    doc["spectral"] = sec;
  }

  if (req.symplectic) {
    if (has_omega) {
      CochainComplex cx = symplectic_complex(spec);
      DegenerationVerdict dv = zgraded_equality_and_degeneration(cx, 1, -1);
      PhiVerdict phi = phi_intertwine_check(spec);
      doc["symplectic"] = ordered_json{
          {"applicable", true},
          {"equality_and_degeneration",
           ordered_json{{"equality", dv.equality},
                        {"page_first", dv.page_first},
                        {"page_second", dv.page_second},
                        {"lemma", dv.lemma},
                        {"equivalence_holds", dv.equivalence_holds}}},
          {"phi", ordered_json{{"invertible", phi.invertible},
                               {"intertwines", phi.intertwines},
                               {"decomposition", phi.decomposition}}}};
    } else {
      doc["symplectic"] = not_applicable(no_omega);
    }
  }

  if (req.hodge) {
    if (is_complex) {
      DoubleComplex dc = double_complex_from_model(spec);
      doc["hodge"] =
          ordered_json{{"applicable", true},
                       {"bott_chern", decomposition_section(spec, dc, LaplacianKind::BC)},
                       {"aeppli", decomposition_section(spec, dc, LaplacianKind::Aeppli)}};
    } else {
      doc["hodge"] = not_applicable(no_bigrading);
    }
  }

  if (req.duality) {
    if (is_complex) {
      try {
        DualityReport rep = bc_aeppli_duality_check(spec);
        ordered_json pairs = ordered_json::array();
        for (const auto& [key, dims] : rep.pairs)
          pairs.push_back({{"p", key.first},
                          {"q", key.second},
                          {"bott_chern", dims.first},
                          {"aeppli_dual", dims.second},
                          {"equal", dims.first == dims.second}});
        doc["duality"] =
            ordered_json{{"applicable", true}, {"orientable", true}, {"pairs", pairs},
                         {"ok", rep.ok()}};
      } catch (const NotOrientable&) {
        doc["duality"] = ordered_json{{"applicable", true}, {"orientable", false}, {"ok", false}};
      }
    } else {
      doc["duality"] = not_applicable(no_bigrading);
    }
  }

  if (req.lefschetz) {
    if (has_omega) {
      LefschetzVerdict hl = hard_lefschetz(spec);
      LefschetzEquivalence eq = lefschetz_equivalence_report(spec);
      ordered_json per_k = ordered_json::array();
      for (const auto& [k, cell] : hl.per_k)
        per_k.push_back({{"k", k},
                         {"rank", cell.map_rank},
                         {"source_dim", cell.source_dim},
                         {"target_dim", cell.target_dim},
                         {"iso", cell.is_iso}});
      doc["lefschetz"] = ordered_json{
          {"applicable", true},
          {"hard_lefschetz", ordered_json{{"per_k", per_k}, {"overall", hl.overall}}},
          {"equivalence", ordered_json{{"hard_lefschetz", eq.hard_lefschetz},
                                       {"quotient_iso", eq.quotient_iso},
                                       {"closed_have_dl_reps", eq.closed_have_dl_reps},
                                       {"ddlambda_lemma", eq.ddlambda_lemma},
                                       {"agree", eq.agree()}}}};
    } else {
      doc["lefschetz"] = not_applicable(no_omega);
    }
  }

  return doc;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }
const char* holds_fails(bool b) { return b ? "HOLDS" : "FAILS"; }

void render_rows(std::ostream& out, const ordered_json& section, const std::string& label) {
  out << label << ":\n";
  for (const auto& row : section.at("rows")) {
    out << "  k=" << row.at("degree").get<int>() << ": " << row.at("lhs").get<int>() << " >= "
        << row.at("rhs").get<int>()
        << (row.at("strict").get<bool>() ? " (strict)" : " (equal)") << "\n";
  }
  out << "  equality at every degree: " << yes_no(section.at("overall_equality").get<bool>())
      << "\n";
}

void render_by_degree(std::ostream& out, const ordered_json& table) {
  for (const auto& row : table.at("by_degree"))
    out << " " << row.at("degree").get<int>() << ":" << row.at("dim").get<int>();
  out << "\n";
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  const ordered_json& model = report.at("model");
  out << "model " << model.at("name").get<std::string>() << " ("
      << model.at("field").get<std::string>() << " field, "
      << model.at("generators").get<int>() << " generators)\n";

  const ordered_json& validation = report.at("validation");
  out << "validation: " << pass_fail(validation.at("passed").get<bool>()) << "\n";
  for (const auto& check : validation.at("checks"))
    if (!check.at("pass").get<bool>())
      out << "  " << check.at("name").get<std::string>() << ": "
          << check.at("detail").get<std::string>() << "\n";
  if (!validation.at("passed").get<bool>()) return out.str();

  if (report.contains("cohomology") && report.at("cohomology").value("applicable", false)) {
    const ordered_json& sec = report.at("cohomology");
    if (sec.contains("bigraded"))
      for (const auto& [name, table] : sec.at("bigraded").items()) {
        out << "dim H_" << name << " by degree:";
        render_by_degree(out, table);
      }
    for (const auto& [name, table] : sec.at("graded").items()) {
      out << "dim H_" << name << " by degree:";
      render_by_degree(out, table);
    }
  }

  if (report.contains("lemma") && report.at("lemma").value("applicable", false)) {
    const ordered_json& sec = report.at("lemma");
    out << "del-delbar lemma: " << holds_fails(sec.at("holds").get<bool>())
        << " (six equivalent conditions consistent: "
        << yes_no(sec.at("consistent").get<bool>()) << ")\n";
  }

  if (report.contains("froelicher") && report.at("froelicher").value("applicable", false)) {
    const ordered_json& sec = report.at("froelicher");
    if (sec.contains("versus_edges"))
      render_rows(out, sec.at("versus_edges"), "froelicher (vs edge cohomologies)");
    if (sec.contains("versus_total"))
      render_rows(out, sec.at("versus_total"), "froelicher (vs twice total cohomology)");
    if (sec.contains("symplectic"))
      render_rows(out, sec.at("symplectic"), "froelicher (symplectic)");
  }

  if (report.contains("spectral") && report.at("spectral").value("applicable", false)) {
    const ordered_json& sec = report.at("spectral");
    for (const char* part : {"bigraded", "doub"}) {
      if (!sec.contains(part)) continue;
      for (const auto& [filt, table] : sec.at(part).items())
        out << "spectral " << part << " " << filt << " filtration: degenerates at page "
            << table.at("degeneration_page").get<int>() << "\n";
    }
  }

  if (report.contains("symplectic") && report.at("symplectic").value("applicable", false)) {
    const ordered_json& sec = report.at("symplectic").at("equality_and_degeneration");
    out << "dd^Lambda lemma: " << holds_fails(sec.at("lemma").get<bool>())
        << " (equality: " << yes_no(sec.at("equality").get<bool>()) << ", pages "
        << sec.at("page_first").get<int>() << "/" << sec.at("page_second").get<int>()
        << ", equivalence verified: " << yes_no(sec.at("equivalence_holds").get<bool>())
        << ")\n";
    const ordered_json& phi = report.at("symplectic").at("phi");
    out << "phi intertwining: " << pass_fail(phi.at("intertwines").get<bool>()) << "\n";
  }

  if (report.contains("hodge") && report.at("hodge").value("applicable", false)) {
    const ordered_json& sec = report.at("hodge");
    out << "hodge decompositions: bott_chern "
        << pass_fail(sec.at("bott_chern").at("ok").get<bool>()) << ", aeppli "
        << pass_fail(sec.at("aeppli").at("ok").get<bool>()) << "\n";
  }

  if (report.contains("duality") && report.at("duality").value("applicable", false)) {
    const ordered_json& sec = report.at("duality");
    if (!sec.at("orientable").get<bool>())
      out << "duality: not homologically orientable\n";
    else
      out << "duality bott_chern vs aeppli: " << pass_fail(sec.at("ok").get<bool>()) << "\n";
  }

  if (report.contains("lefschetz") && report.at("lefschetz").value("applicable", false)) {
    const ordered_json& sec = report.at("lefschetz");
    out << "hard lefschetz: "
        << holds_fails(sec.at("hard_lefschetz").at("overall").get<bool>())
        << " (four-way equivalence agrees: "
        << yes_no(sec.at("equivalence").at("agree").get<bool>()) << ")\n";
  }

  return out.str();
}

}  // namespace folcoh
