#include "yangrep/serialize.hpp"

namespace yangrep {

namespace {

Rat parse_rat_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  auto r = parse_rat(j.get<std::string>());
  if (!r) throw ParseError("invalid rational literal: " + j.dump());
  return *r;
}

std::vector<Rat> parse_rat_array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(parse_rat_json(v));
  return out;
}

Json poly_to_json(const PolyU& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_str(c));
  return arr;
}

PolyU poly_from_json(const Json& j) { return PolyU(parse_rat_array(j)); }

}  // namespace

Json ratfunc_to_json(const RatFuncU& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFuncU ratfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.count("num") || !j.count("den"))
    throw ParseError("rational function needs num and den arrays");
  return RatFuncU(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json factored_to_json(const FactoredSeries& f) {
  Json arr = Json::array();
  for (const auto& [c, e] : f.factors) arr.push_back(Json::array({rat_str(c), e}));
  return Json{{"factors", arr}};
}

FactoredSeries factored_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("factors") : j;
  if (!arr.is_array()) throw ParseError("factored series needs a factors array");
  FactoredSeries f;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw ParseError("each factor is a [c, exponent] pair");
    f.mul_factor(parse_rat_json(item[0]), item[1].get<int>());
  }
  return f;
}

Json roots_to_json(const RootMultiset& m) {
  Json roots = Json::object();
  for (const auto& [c, k] : m.mult) roots[rat_str(c)] = k;
  return Json{{"roots", roots}};
}

RootMultiset roots_from_json(const Json& j) {
  const Json& obj = j.is_object() && j.count("roots") ? j.at("roots") : j;
  RootMultiset m;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    m.add(parse_rat_or_throw(it.key()), it.value().get<int>());
  return m;
}

Json expr_to_json(const ExprPtr& e) {
  if (!e) throw Error("expression unavailable for this action");
  auto rats = [](const std::vector<Rat>& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(rat_str(r));
    return arr;
  };
  switch (e->kind) {
    case ExprNode::Kind::Eval:
      return Json{{"eval", Json{{"hw", rats(e->weight)}}}};
    case ExprNode::Kind::TwistedEval:
      return Json{{"twisted_eval", Json{{"mu", rats(e->weight)}}}};
    case ExprNode::Kind::Spin:
      return Json{{"spin", Json::object()}};
    case ExprNode::Kind::OneDim:
      return Json{{"onedim", Json{{"gamma", rat_str(e->gamma)}}}};
    case ExprNode::Kind::Tensor: {
      Json arr = Json::array();
      for (const auto& c : e->children) arr.push_back(expr_to_json(c));
      return Json{{"tensor", arr}};
    }
    case ExprNode::Kind::TensorMixed:
      return Json{{"tensor_mixed", Json{{"left", expr_to_json(e->children[0])},
                                        {"right", expr_to_json(e->children[1])}}}};
    case ExprNode::Kind::Shift:
      return Json{{"shift", Json{{"a", rat_str(e->shift_a)},
                                 {"of", expr_to_json(e->children[0])}}}};
    case ExprNode::Kind::Twist:
      return Json{{"twist", Json{{"phi", factored_to_json(e->twist_phi)},
                                 {"of", expr_to_json(e->children[0])}}}};
  }
  throw Error("unknown expression kind");
}

ExprPtr expr_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1)
    throw ParseError("expression node must be a single-key object: " + j.dump());
  const std::string kind = j.begin().key();
  const Json& body = j.begin().value();
  if (kind == "eval") return expr_eval(parse_rat_array(body.at("hw")));
  if (kind == "twisted_eval") return expr_twisted_eval(parse_rat_array(body.at("mu")));
  if (kind == "spin") return expr_spin();
  if (kind == "onedim") return expr_onedim(parse_rat_json(body.at("gamma")));
  if (kind == "tensor") {
    std::vector<ExprPtr> children;
    for (const auto& c : body) children.push_back(expr_from_json(c));
    if (children.empty()) throw ParseError("tensor needs at least one factor");
    return expr_tensor(std::move(children));
  }
  if (kind == "tensor_mixed")
    return expr_tensor_mixed(expr_from_json(body.at("left")), expr_from_json(body.at("right")));
  if (kind == "shift")
    return expr_shift(parse_rat_json(body.at("a")), expr_from_json(body.at("of")));
  if (kind == "twist")
    return expr_twist(factored_from_json(body.at("phi")), expr_from_json(body.at("of")));
  throw ParseError("unknown expression kind: " + kind);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Y:
      return "Y";
    case Family::YPlus:
      return "Y+";
    case Family::YMinus:
      return "Y-";
  }
  throw Error("unknown family");
}

Family family_from_name(const std::string& s) {
  if (s == "Y") return Family::Y;
  if (s == "Y+") return Family::YPlus;
  if (s == "Y-") return Family::YMinus;
  throw ParseError("unknown algebra family: " + s);
}

ModuleSpecJson module_spec_from_json(const Json& j) {
  ModuleSpecJson spec;
  if (!j.is_object()) throw ParseError("module specification must be an object");
  if (!j.count("family") || !j.count("N") || !j.count("expr"))
    throw ParseError("module specification needs family, N and expr");
  spec.family = family_from_name(j.at("family").get<std::string>());
  spec.N = j.at("N").get<int>();
  if (spec.N < 1) throw ParseError("N must be positive");
  spec.expr = expr_from_json(j.at("expr"));
  return spec;
}

namespace {

bool is_y_expr(const ExprPtr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Eval:
      return true;
    case ExprNode::Kind::Tensor:
      for (const auto& c : e->children)
        if (!is_y_expr(c)) return false;
      return true;
    case ExprNode::Kind::Shift:
    case ExprNode::Kind::Twist:
      return is_y_expr(e->children[0]);
    default:
      return false;
  }
}

Action build_y_expr(const ExprPtr& e, const IndexScheme& scheme) {
  switch (e->kind) {
    case ExprNode::Kind::Eval: {
      if (static_cast<int>(e->weight.size()) != scheme.N)
        throw ParseError("evaluation weight length does not match N");
      if (scheme.N == 2) return eval_module(build_gl2(e->weight[0], e->weight[1]), scheme);
      return eval_module(build_glN(e->weight), scheme);
    }
    case ExprNode::Kind::Tensor: {
      std::vector<Action> factors;
      for (const auto& c : e->children) factors.push_back(build_y_expr(c, scheme));
      return tensor_action(factors);
    }
    case ExprNode::Kind::Shift:
      return shift_action(e->shift_a, build_y_expr(e->children[0], scheme));
    case ExprNode::Kind::Twist:
      return twist_action(e->twist_phi, build_y_expr(e->children[0], scheme));
    default:
      throw ParseError("expression is not a Y(N) construction");
  }
}

Action build_twisted_expr(Family family, int N, const ExprPtr& e) {
  const IndexScheme scheme = symmetric_scheme(N);
  if (is_y_expr(e)) return restrict_S(build_y_expr(e, scheme), family);
  switch (e->kind) {
    case ExprNode::Kind::TwistedEval: {
      const int n = N / 2;
      if (static_cast<int>(e->weight.size()) != n)
        throw ParseError("twisted evaluation weight needs n components");
      LieModule m = [&] {
        if (N == 2)
          return build_g_rank1(twisted_algebra(family), 2, e->weight[0]);
        if (N == 3 && family == Family::YPlus)
          return build_g_rank1(LieAlgebra::O, 3, e->weight[0]);
        for (const auto& w : e->weight)
          if (w != Rat(-1) / 2)
            throw ParseError("only the spin weight is supported for N >= 4");
        if (family != Family::YPlus) throw ParseError("spin modules are orthogonal");
        return build_spin(N);
      }();
      return twisted_eval(m, family, e);
    }
    case ExprNode::Kind::Spin:
      if (family != Family::YPlus) throw ParseError("spin modules are orthogonal");
      return twisted_eval(build_spin(N), family, e);
    case ExprNode::Kind::OneDim:
      if (family != Family::YPlus || N != 2)
        throw ParseError("one-dimensional modules require the orthogonal family, N = 2");
      return onedim_plus(e->gamma);
    case ExprNode::Kind::TensorMixed: {
      if (!is_y_expr(e->children[0]))
        throw ParseError("the left factor of a mixed tensor must be a Y(N) construction");
      Action left = build_y_expr(e->children[0], scheme);
      Action right = build_twisted_expr(family, N, e->children[1]);
      return tensor_mixed(left, right);
    }
    case ExprNode::Kind::Twist:
      return twist_action(e->twist_phi, build_twisted_expr(family, N, e->children[0]));
    case ExprNode::Kind::Shift:
      throw ParseError("the shift automorphism does not preserve twisted families");
    default:
      throw ParseError("unsupported twisted expression");
  }
}

}  // namespace

Action build_from_expr(Family family, int N, const ExprPtr& expr) {
  if (family == Family::Y) return build_y_expr(expr, standard_scheme(N));
  if (family == Family::YMinus && N % 2 == 1)
    throw ParseError("the symplectic family needs even N");
  return build_twisted_expr(family, N, expr);
}

Json lie_module_to_json(const LieModule& m) {
  Json j;
  j["algebra"] = m.algebra == LieAlgebra::GL ? "gl" : (m.algebra == LieAlgebra::O ? "o" : "sp");
  j["N"] = m.N;
  Json hw = Json::array();
  for (const auto& c : m.weights[m.hw_index]) hw.push_back(rat_str(c));
  j["hw"] = hw;
  j["dim"] = m.dim;
  const IndexScheme scheme =
      m.algebra == LieAlgebra::GL ? standard_scheme(m.N) : symmetric_scheme(m.N);
  Json mats = Json::object();
  for (const auto& [key, mat] : m.gens) {
    Json triplets = Json::array();
    for (int r = 0; r < mat.rows(); ++r)
      for (const auto& [c, v] : mat.row(r)) triplets.push_back(Json::array({r, c, rat_str(v)}));
    mats[std::to_string(scheme.index_at(key.first)) + "," +
         std::to_string(scheme.index_at(key.second))] = triplets;
  }
  j["matrices"] = mats;
  return j;
}

Json action_to_json(const Action& x) {
  Json j;
  j["format"] = 1;
  j["family"] = family_name(x.family);
  j["N"] = x.N();
  j["scheme"] = x.scheme.symmetric ? "symmetric" : "standard";
  j["dim"] = x.dim;
  j["degree_bound"] = x.degree_bound;
  if (x.provenance) j["expr"] = expr_to_json(x.provenance);
  Json weights = Json::array();
  for (const auto& w : x.basis_weights) {
    Json row = Json::array();
    for (const auto& c : w) row.push_back(rat_str(c));
    weights.push_back(row);
  }
  j["weights"] = weights;
  Json entries = Json::object();
  for (int pi = 0; pi < x.N(); ++pi)
    for (int pj = 0; pj < x.N(); ++pj) {
      const RatFuncMat& m = x.entry(pi, pj);
      Json triplets = Json::array();
      for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, f] : m.row(r))
          triplets.push_back(Json::array({r, c, ratfunc_to_json(f)}));
      std::string key = std::to_string(x.scheme.index_at(pi)) + "," +
                        std::to_string(x.scheme.index_at(pj));
      entries[key] = triplets;
    }
  j["entries"] = entries;
  return j;
}

Action action_from_json(const Json& j, bool with_underlying) {
  if (!j.is_object() || j.value("format", 0) != 1)
    throw ParseError("unsupported module file format");
  Action x;
  x.family = family_from_name(j.at("family").get<std::string>());
  const int N = j.at("N").get<int>();
  x.scheme = j.at("scheme").get<std::string>() == "symmetric" ? symmetric_scheme(N)
                                                              : standard_scheme(N);
  x.dim = j.at("dim").get<int>();
  x.degree_bound = j.at("degree_bound").get<int>();
  for (const auto& w : j.at("weights")) x.basis_weights.push_back(parse_rat_array(w));
  if (static_cast<int>(x.basis_weights.size()) != x.dim)
    throw ParseError("weight table size does not match the dimension");
  x.entries.assign(N * N, RatFuncMat(x.dim, x.dim));
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      std::string key = std::to_string(x.scheme.index_at(pi)) + "," +
                        std::to_string(x.scheme.index_at(pj));
      const Json& triplets = j.at("entries").at(key);
      RatFuncMat m(x.dim, x.dim);
      for (const auto& t : triplets)
        m.set(t[0].get<int>(), t[1].get<int>(), ratfunc_from_json(t[2]));
      x.entry(pi, pj) = std::move(m);
    }
  if (j.count("expr")) x.provenance = expr_from_json(j.at("expr"));
  if (with_underlying && is_twisted(x.family) && x.provenance) {
    Action rebuilt = build_from_expr(x.family, N, x.provenance);
    x.underlying = rebuilt.underlying;
  }
  return x;
}

Json analysis_to_json(const AnalysisReport& r) {
  Json j;
  j["singular_dim"] = r.singular_dim;
  j["coefficient_bound"] = r.coefficient_bound;
  j["irreducible"] = r.irreducible;
  j["quotient_dim"] = r.quotient_dim;
  Json comps = Json::array(), facs = Json::array();
  for (std::size_t i = 0; i < r.hw.components.size(); ++i) {
    comps.push_back(ratfunc_to_json(r.hw.components[i]));
    facs.push_back(r.hw.factored[i] ? factored_to_json(*r.hw.factored[i]) : Json(nullptr));
  }
  j["hw"] = Json{{"components", comps}, {"factored", facs}};
  Json wm = Json::array();
  for (const auto& [w, count] : r.weight_multiplicities) {
    Json row = Json::array();
    for (const auto& c : w) row.push_back(rat_str(c));
    wm.push_back(Json{{"weight", row}, {"count", count}});
  }
  j["weight_multiplicities"] = wm;
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["samples_used"] = r.samples_used;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item{{"description", c.description}, {"pass", c.pass}};
    if (!c.pass) item["counterexample"] = c.counterexample;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j;
}

Json classification_to_json(const ClassificationResult& r) {
  Json j;
  j["finite_dim"] = r.finite_dim;
  Json ps = Json::array();
  for (const auto& p : r.witnesses) ps.push_back(roots_to_json(p));
  j["P"] = ps;
  if (r.gamma) j["gamma"] = rat_str(*r.gamma);
  if (r.epsilon) j["epsilon"] = *r.epsilon;
  if (r.branch) j["branch"] = *r.branch;
  return j;
}

Json run_classify_json(const Json& input) {
  if (!input.is_object() || !input.count("predicate"))
    throw ParseError("classification input needs a predicate name");
  const std::string pred = input.at("predicate").get<std::string>();
  auto factored_list = [&](const char* key) {
    std::vector<FactoredSeries> out;
    for (const auto& f : input.at(key)) out.push_back(factored_from_json(f));
    return out;
  };
  if (pred == "fd_Y") return classification_to_json(fd_Y(factored_list("lambda")));
  if (pred == "fd_Y-") return classification_to_json(fd_Yminus(factored_list("mu")));
  if (pred == "fd_Y+") return classification_to_json(fd_Yplus_even(factored_list("mu")));
  if (pred == "fd_Y+3")
    return classification_to_json(
        fd_Yplus3(parse_rat_array(input.at("alpha")), parse_rat_array(input.at("beta"))));
  if (pred == "fd_Y+odd")
    return classification_to_json(
        fd_Yplus_odd(factored_from_json(input.at("mu0")), factored_list("mu")));
  if (pred == "arrow") {
    auto p = arrow(factored_from_json(input.at("l1")), factored_from_json(input.at("l2")));
    Json j{{"exists", p.has_value()}};
    if (p) j["P"] = roots_to_json(*p);
    return j;
  }
  if (pred == "sym_arrow") {
    auto p = sym_arrow(factored_from_json(input.at("mu")));
    Json j{{"exists", p.has_value()}};
    if (p) j["P"] = roots_to_json(*p);
    return j;
  }
  if (pred == "gamma_solver") {
    auto p = gamma_solver(factored_from_json(input.at("mu")));
    Json j{{"exists", p.has_value()}};
    if (p) {
      j["P"] = roots_to_json(p->first);
      j["gamma"] = rat_str(p->second);
    }
    return j;
  }
  if (pred == "sharp_weight")
    return factored_to_json(sharp_weight(parse_rat_array(input.at("gammas"))));
  if (pred == "general_position") {
    auto s1 = parse_rat_array(input.at("s1"));
    auto s2 = parse_rat_array(input.at("s2"));
    if (s1.size() != 2 || s2.size() != 2)
      throw ParseError("strings are given as [alpha, beta] pairs");
    return Json{{"general_position",
                 general_position(StringAB(s1[0], s1[1]), StringAB(s2[0], s2[1]))}};
  }
  if (pred == "crit_strings") {
    const std::string variant = input.at("variant").get<std::string>();
    std::vector<std::pair<Rat, Rat>> pairs;
    for (const auto& p : input.at("pairs")) {
      auto v = parse_rat_array(p);
      if (v.size() != 2) throw ParseError("pairs must have two entries");
      pairs.emplace_back(v[0], v[1]);
    }
    std::optional<Rat> gamma;
    if (input.count("gamma")) gamma = parse_rat_json(input.at("gamma"));
    StringCriterion crit;
    if (variant == "2.11")
      crit = StringCriterion::TensorPairs;
    else if (variant == "4.7")
      crit = StringCriterion::SymplecticRestriction;
    else if (variant == "5.6")
      crit = StringCriterion::OrthogonalMixed;
    else
      throw ParseError("unknown criterion variant: " + variant);
    return Json{{"irreducible", crit_strings(crit, pairs, gamma)}};
  }
  if (pred == "reorder") {
    const std::string kind = input.at("kind").get<std::string>();
    ReorderResult r;
    if (kind == "difference")
      r = reorder(ReorderKind::Difference, parse_rat_array(input.at("alpha")),
                  parse_rat_array(input.at("beta")));
    else if (kind == "sum_even")
      r = reorder(ReorderKind::SumEven, parse_rat_array(input.at("gamma")));
    else if (kind == "sum_odd")
      r = reorder(ReorderKind::SumOdd, parse_rat_array(input.at("gamma")));
    else
      throw ParseError("unknown reorder kind: " + kind);
    auto rats = [](const std::vector<Rat>& v) {
      Json arr = Json::array();
      for (const auto& x : v) arr.push_back(rat_str(x));
      return arr;
    };
    Json j{{"first", rats(r.first)}};
    if (kind == "difference") j["second"] = rats(r.second);
    return j;
  }
  throw ParseError("unknown predicate: " + pred);
}

SweepConfig sweep_config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sweep config must be an object");
  if (j.count("grid")) return standard_grid(j.at("grid").get<std::string>());
  SweepConfig cfg;
  if (!j.count("predicate") || !j.count("axes"))
    throw ParseError("sweep config needs predicate and axes");
  cfg.predicate = j.at("predicate").get<std::string>();
  cfg.oracle = j.value("oracle", true);
  for (auto it = j.at("axes").begin(); it != j.at("axes").end(); ++it) {
    std::vector<std::vector<Rat>> vals;
    for (const auto& tuple : it.value()) {
      if (tuple.is_array())
        vals.push_back(parse_rat_array(tuple));
      else
        vals.push_back({parse_rat_json(tuple)});
    }
    cfg.axes[it.key()] = std::move(vals);
  }
  return cfg;
}

SweepConfig standard_grid(const std::string& name) {
  if (name == "tensor_pairs") return grid_tensor_pairs();
  if (name == "symplectic_pairs") return grid_symplectic_pairs();
  if (name == "orthogonal_mixed") return grid_orthogonal_mixed();
  if (name == "plus3_vs_odd") return grid_plus3_vs_odd();
  if (name == "y_witness") return grid_y_witness();
  if (name == "yminus_witness") return grid_yminus_witness();
  if (name == "plus_odd_witness") return grid_plus_odd_witness();
  throw ParseError("unknown standard grid: " + name);
}

}  // namespace yangrep
