#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "folcoh/errors.hpp"
#include "folcoh/model.hpp"
#include "folcoh/report.hpp"

namespace {

folcoh::ModelSpec load_model(const std::string& builtin_name, const std::string& file_path,
                             int half_codim) {
  if (!builtin_name.empty()) return folcoh::builtin(builtin_name, half_codim);
  std::ifstream in(file_path);
  if (!in) throw folcoh::Error("cannot open model file '" + file_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return folcoh::parse_model(text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology analyzer for finite invariant-form models"};

  std::string builtin_name, file_path, format = "text", out_path;
  int half_codim = 1;
  folcoh::AnalysisRequest req;
  bool run_all = false;

  auto* builtin_opt = app.add_option("--builtin", builtin_name, "built-in model name");
  auto* file_opt = app.add_option("--file", file_path, "model definition file (JSON)");
  builtin_opt->excludes(file_opt);
  app.add_option("--half-codim", half_codim, "half codimension for torus2q")
      ->check(CLI::PositiveNumber);
  app.add_flag("--cohomology", req.cohomology, "dimension tables of every theory");
  app.add_flag("--lemma", req.lemma, "the lemma by definition and six conditions");
  app.add_flag("--froelicher", req.froelicher, "the inequality reports");
  app.add_flag("--spectral", req.spectral, "spectral sequence pages and degeneration");
  app.add_option("--max-page", req.spectral_max_page, "last rendered page")
      ->check(CLI::PositiveNumber);
  app.add_flag("--symplectic", req.symplectic, "symplectic verdicts and phi check");
  app.add_flag("--hodge", req.hodge, "laplacian decompositions");
  app.add_flag("--duality", req.duality, "Bott-Chern / Aeppli duality table");
  app.add_flag("--lefschetz", req.lefschetz, "hard Lefschetz and the four-way equivalence");
  app.add_flag("--all", run_all, "run every analysis (default when none selected)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (builtin_name.empty() && file_path.empty()) {
    std::cerr << "error: one of --builtin or --file is required\n";
    return 2;
  }
  if (run_all || !req.any()) req = [&] {
    folcoh::AnalysisRequest all = folcoh::AnalysisRequest::all();
    all.spectral_max_page = req.spectral_max_page;
    return all;
  }();

  try {
    folcoh::ModelSpec spec = load_model(builtin_name, file_path, half_codim);
    nlohmann::ordered_json doc = folcoh::build_report(spec, req);
    std::string rendered = format == "json" ? doc.dump(2) + "\n" : folcoh::render_text(doc);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
      }
      out << rendered;
    }
    return doc.at("validation").at("passed").get<bool>() ? 0 : 1;
  } catch (const folcoh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
