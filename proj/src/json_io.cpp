#include <planecert/json_io.hpp>

namespace planecert {

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

Json to_json(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

Json to_json(const ConjugacyClassInfo& info) {
    return Json{{"cycle_type", to_json(info.cycle_type)},
                {"size", info.size.get_str()},
                {"fixed_points", info.fixed_points},
                {"sign", info.sign}};
}

Json to_json(const CharacterTable& t) {
    Json irreps = Json::array();
    for (const auto& mu : t.irreps) irreps.push_back(to_json(mu));
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(to_json(c));
    Json values = Json::array();
    for (const auto& row : t.values) values.push_back(row);
    return Json{{"d", t.d}, {"irreps", irreps}, {"classes", classes}, {"values", values}};
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const ThetaVector& theta) {
    Json entries = Json::array();
    for (const auto& [cls, value] : theta.entries())
        entries.push_back(Json{{"cycle_type", to_json(cls)}, {"value", to_json(value)}});
    return Json{{"d", theta.d()}, {"entries", entries}};
}

namespace {

Json coeffs_json(const std::vector<Rational>& coeffs) {
    Json j = Json::array();
    for (const auto& c : coeffs) j.push_back(to_json(c));
    return j;
}

}  // namespace

Json to_json(const DelsarteSystem& s) {
    Json variables = Json::array();
    for (const auto& v : s.variables) variables.push_back(to_json(v));
    Json equalities = Json::array();
    for (const auto& eq : s.equalities)
        equalities.push_back(
            Json{{"label", eq.label}, {"coeffs", coeffs_json(eq.coeffs)}, {"rhs", to_json(eq.rhs)}});
    Json inequalities = Json::array();
    for (const auto& iq : s.inequalities)
        inequalities.push_back(Json{
            {"label", iq.label},
            {"kind", iq.kind == InequalityKind::variable_nonneg ? "variable_nonneg" : "character"},
            {"coeffs", coeffs_json(iq.coeffs)},
            {"sense", ">="},
            {"rhs", to_json(iq.rhs)}});
    return Json{{"d", s.d},
                {"theta_identity", to_json(s.theta_identity)},
                {"even_constraints", s.even_constraints},
                {"variables", variables},
                {"equalities", equalities},
                {"inequalities", inequalities}};
}

Json to_json(const FeasibilityReport& r, const DelsarteSystem& s) {
    Json j;
    j["status"] = r.status == FeasibilityReport::Status::feasible ? "feasible" : "infeasible";
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    if (r.bounds.empty()) {
        j["bounds"] = Json(nullptr);
    } else {
        Json bounds = Json::array();
        for (std::size_t i = 0; i < r.bounds.size(); ++i)
            bounds.push_back(Json{{"variable", to_json(s.variables[i])},
                                  {"min", to_json(r.bounds[i].min)},
                                  {"max", to_json(r.bounds[i].max)}});
        j["bounds"] = bounds;
    }
    j["unique"] = r.unique ? Json(*r.unique) : Json(nullptr);
    return j;
}

namespace {

const char* reason_kind_name(RefutationReason::Kind kind) {
    switch (kind) {
        case RefutationReason::Kind::none: return "none";
        case RefutationReason::Kind::lp_infeasible: return "lp_infeasible";
        case RefutationReason::Kind::parity_split: return "parity_split";
        case RefutationReason::Kind::parity_divisibility: return "parity_divisibility";
        case RefutationReason::Kind::non_integral_entry: return "non_integral_entry";
        case RefutationReason::Kind::odd_entry: return "odd_entry";
    }
    return "none";
}

}  // namespace

Json to_json(const RefutationReport& r, const DelsarteSystem& s) {
    Json reason;
    reason["kind"] = reason_kind_name(r.reason.kind);
    reason["detail"] = r.reason.detail;
    if (r.reason.kind == RefutationReason::Kind::parity_split ||
        r.reason.kind == RefutationReason::Kind::parity_divisibility ||
        !r.reason.split_set.empty() || r.reason.n_odd != 0) {
        reason["n_odd"] = to_json(r.reason.n_odd);
        reason["split_set"] = r.reason.split_set;
    }
    if (r.reason.offending_class) {
        reason["offending_class"] = to_json(*r.reason.offending_class);
        reason["offending_value"] = to_json(r.reason.offending_value);
    }

    Json j;
    j["d"] = r.d;
    j["outcome"] = r.outcome == RefutationReport::Outcome::refuted ? "refuted" : "inconclusive";
    j["reason"] = reason;
    j["theta_examined"] = r.theta_examined ? to_json(*r.theta_examined) : Json(nullptr);
    j["feasibility"] = r.feasibility ? to_json(*r.feasibility, s) : Json(nullptr);
    return j;
}

Json to_json(const AffineLineSet& plane) {
    Json lines = Json::array();
    for (const auto& line : plane.lines) lines.push_back(line.images());
    return Json{{"d", plane.d}, {"lines", lines}};
}

Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

ThetaVector theta_from_json(const Json& j) {
    ThetaVector theta(j.at("d").get<int>());
    for (const auto& e : j.at("entries")) {
        const auto& v = e.at("value");
        Rational value(v.at("num").get<std::string>() + "/" + v.at("den").get<std::string>());
        value.canonicalize();
        theta.set(partition_from_json(e.at("cycle_type")), value);
    }
    return theta;
}

}  // namespace planecert
