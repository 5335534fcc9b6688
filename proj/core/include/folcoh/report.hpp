#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "folcoh/model.hpp"

namespace folcoh {

/// Which analyses to run.  Validation always runs first; when it fails the
/// report carries only the validation section.
struct AnalysisRequest {
  bool cohomology = false;
  bool lemma = false;
  bool froelicher = false;
  bool spectral = false;
  bool symplectic = false;
  bool hodge = false;
  bool duality = false;
  bool lefschetz = false;
  int spectral_max_page = 2;

  static AnalysisRequest all();
  bool any() const;
};

/// Runs the requested analyses and collects every result value in a single
/// ordered JSON document (schema_version 1).  Sections that do not apply to
/// the model (bigraded analyses on a purely real model, symplectic analyses
/// without a two-form) are emitted with applicable = false instead of being
/// computed.
nlohmann::ordered_json build_report(const ModelSpec& spec, const AnalysisRequest& req);

/// Text table rendering generated from the JSON document itself, so both
/// output formats carry exactly the same numbers.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace folcoh
