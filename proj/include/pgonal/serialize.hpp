#ifndef PGONAL_SERIALIZE_HPP
#define PGONAL_SERIALIZE_HPP

#include <json.hpp>

#include "descent.hpp"
#include "gallery.hpp"

namespace pgonal {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// emitters: everything is exact rational text, no floating point anywhere

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const FieldElement& x) {
    json a = json::array();
    for (const auto& c : x.coords()) a.push_back(to_string(c));
    return a;
}

inline json field_to_json(const NumberField& f) {
    json mp = json::array();
    for (int i = 0; i <= f.minpoly().degree(); ++i) mp.push_back(to_string(f.minpoly()[i]));
    return json{{"minpoly", mp}, {"label", f.label()}};
}

inline json to_json(const ProjPoint& p) {
    if (p.is_infinity()) return "inf";
    return to_json(p.affine_value());
}

inline json to_json(const Mobius& g) {
    return json::array({json::array({to_json(g.a()), to_json(g.b())}),
                        json::array({to_json(g.c()), to_json(g.d())})});
}

inline json curve_to_json(const PgonalCurve& c) {
    json branch = json::array();
    for (const auto& [pt, w] : c.branch().entries())
        branch.push_back(json{{"point", to_json(pt)}, {"mult", w}});
    return json{{"p", c.p()}, {"field", field_to_json(*c.field())}, {"branch", branch}};
}

// Coefficient list of prod (x - a_j)^(n_j) with the infinity factor dropped.
inline json affine_view_to_json(const PgonalCurve& c) {
    auto f = c.affine_polynomial();
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(to_json(f[i]));
    return a;
}

inline json character_to_json(const PowerCharacter& chi) {
    return json{{"values", chi.values},
                {"valid_units", chi.valid},
                {"kernel", chi.kernel},
                {"unit_stabilizer", chi.unit_stabilizer},
                {"image_order", chi.image_order},
                {"k1_degree", chi.k1_degree()},
                {"trivial", chi.trivial()}};
}

inline json cocycle_to_json(const GaloisCocycle& c) {
    json maps = json::array();
    for (std::size_t s = 0; s < c.maps.size(); ++s)
        maps.push_back(json{{"sigma", s},
                            {"sigma_image", to_json(c.field->automorphism_image(
                                static_cast<int>(s)))},
                            {"matrix", to_json(c.maps[s])}});
    return json{{"field", field_to_json(*c.field)},
                {"maps", maps},
                {"multiple_selections", c.multiple_selections}};
}

inline json outcome_to_json(const DescentOutcome& o) {
    json out;
    out["variant"] = o.variant == DescentVariant::rational_model ? "rational-model"
                                                                 : "quadratic-model";
    if (o.variant == DescentVariant::rational_model) {
        out["field"] = json{{"minpoly", "Q"}, {"disc", nullptr}};
        json m = json::array();
        for (const auto& c : o.model_rational) m.push_back(to_string(c));
        out["model"] = m;
    } else {
        const Int& e = *o.extension_disc;
        out["field"] = json{{"minpoly", json::array({to_string(Rational(-e)), "0", "1"})},
                            {"disc", e.str()}};
        json m = json::array();
        for (const auto& [r, s] : o.model_quadratic)
            m.push_back(json::array({to_string(r), to_string(s)}));
        out["model"] = m;
    }
    out["witness"] = to_json(o.witness);
    out["witness_field"] = field_to_json(*o.ext.field);
    out["obstruction"] =
        o.obstruction ? json{{"place", *o.obstruction}} : json(nullptr);
    return out;
}

inline json verdict_to_json(const UniquenessVerdict& v) {
    return json{{"unique", v.unique}, {"reason", v.reason}};
}

// ---------------------------------------------------------------------------
// curve files

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    require(j.is_string(), where + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const invalid_input& e) {
        throw invalid_input(where + ": " + e.what());
    }
}

inline FieldElement element_from_json(const FieldPtr& F, const json& j,
                                      const std::string& where) {
    require(j.is_array(), where + ": expected a coordinate array");
    require(static_cast<int>(j.size()) == F->degree(),
            where + ": expected " + std::to_string(F->degree()) + " coordinates, got " +
                std::to_string(j.size()));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return F->element(std::move(c));
}

inline FieldPtr field_from_json(const json& j, const std::string& where) {
    require(j.is_object(), where + ": expected a field object");
    require(j.contains("minpoly"), where + ".minpoly: missing");
    const json& mp = j["minpoly"];
    require(mp.is_array() && mp.size() >= 2, where + ".minpoly: expected coefficient array");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < mp.size(); ++i)
        c.push_back(rational_from_json(mp[i], where + ".minpoly[" + std::to_string(i) + "]"));
    std::string label = j.value("label", std::string("K"));
    RatPoly poly(std::move(c));
    require(poly.degree() >= 1, where + ".minpoly: degree must be at least 1");
    return NumberField::create(poly, label);
}

inline ProjPoint point_from_json(const FieldPtr& F, const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return ProjPoint::infinity(F);
    require(j.is_array(), where + ": expected coordinates or \"inf\"");
    if (!j.empty() && j[0].is_array()) {
        require(j.size() == 2, where + ": projective form needs [u, v]");
        FieldElement u = element_from_json(F, j[0], where + "[0]");
        FieldElement v = element_from_json(F, j[1], where + "[1]");
        require(!(u.is_zero() && v.is_zero()), where + ": (0 : 0) is not a point");
        return ProjPoint(u, v);
    }
    return ProjPoint::affine(element_from_json(F, j, where));
}

inline PgonalCurve curve_from_json(const json& j) {
    require(j.is_object(), "curve: expected an object");
    require(j.contains("p"), "curve.p: missing");
    require(j["p"].is_number_integer(), "curve.p: expected an integer");
    int p = j["p"].get<int>();
    require(j.contains("field"), "curve.field: missing");
    FieldPtr F = field_from_json(j["field"], "curve.field");
    require(j.contains("branch"), "curve.branch: missing");
    const json& br = j["branch"];
    require(br.is_array(), "curve.branch: expected an array");
    std::vector<std::pair<ProjPoint, int>> entries;
    for (std::size_t i = 0; i < br.size(); ++i) {
        std::string where = "curve.branch[" + std::to_string(i) + "]";
        require(br[i].is_object(), where + ": expected an object");
        require(br[i].contains("point"), where + ".point: missing");
        require(br[i].contains("mult"), where + ".mult: missing");
        require(br[i]["mult"].is_number_integer(), where + ".mult: expected an integer");
        int w = br[i]["mult"].get<int>();
        require(w >= 1 && w <= p - 1, "weight-out-of-range: " + where + ".mult = " +
                                          std::to_string(w));
        entries.emplace_back(point_from_json(F, br[i]["point"], where + ".point"), w);
    }
    require(p >= 2, "curve.p: must be at least 2");
    return PgonalCurve::validate(p, WeightedPointSet(p, std::move(entries)));
}

inline PgonalCurve parse_curve_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("curve file is not valid JSON: ") + e.what());
    }
    return curve_from_json(j);
}

}  // namespace pgonal

#endif
