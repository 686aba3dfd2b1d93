#pragma once

#include "json.hpp"
#include "yangrep/classify.hpp"
#include "yangrep/sweep.hpp"
#include "yangrep/verify.hpp"

namespace yangrep {

using Json = nlohmann::ordered_json;

Json ratfunc_to_json(const RatFuncU& f);
RatFuncU ratfunc_from_json(const Json& j);

Json factored_to_json(const FactoredSeries& f);
FactoredSeries factored_from_json(const Json& j);

Json roots_to_json(const RootMultiset& m);
RootMultiset roots_from_json(const Json& j);

Json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const Json& j);

struct ModuleSpecJson {
  Family family = Family::Y;
  int N = 0;
  ExprPtr expr;
};

ModuleSpecJson module_spec_from_json(const Json& j);
std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Builds the action described by an expression under the given family.
/// A plain Y(N) expression under a twisted family means its restriction.
Action build_from_expr(Family family, int N, const ExprPtr& expr);

Json lie_module_to_json(const LieModule& m);

Json action_to_json(const Action& x);
/// Loads stored matrices verbatim; when with_underlying is set and the
/// family is twisted, the underlying Y(N) action is rebuilt from the
/// stored expression.
Action action_from_json(const Json& j, bool with_underlying = false);

Json analysis_to_json(const AnalysisReport& r);
Json verify_report_to_json(const VerifyReport& r);
Json classification_to_json(const ClassificationResult& r);

/// Dispatches a predicate request {"predicate": ..., ...} to the
/// classification layer and returns the result as JSON.
Json run_classify_json(const Json& input);

SweepConfig sweep_config_from_json(const Json& j);
/// Standard grids by name.
SweepConfig standard_grid(const std::string& name);

}  // namespace yangrep
