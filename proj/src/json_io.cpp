#include "klforge/json_io.hpp"

#include <climits>

#include "klforge/errors.hpp"

namespace klforge {

Json integer_to_json(const Integer& c) {
    if (c.fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_si()));
    return Json(c.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer " + j.dump());
        return out;
    }
    throw InvalidArgument("expected an integer, got " + j.dump());
}

namespace {

Json coeff_map_to_json(const std::map<int, Integer>& m) {
    Json out = Json::object();
    for (const auto& [e, c] : m) out[std::to_string(e)] = integer_to_json(c);
    return out;
}

std::map<int, Integer> coeff_map_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("expected a coefficient object, got " + j.dump());
    std::map<int, Integer> out;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        const int e = std::stoi(k, &used);
        if (used != k.size()) throw InvalidArgument("bad exponent " + k);
        Integer c = integer_from_json(v);
        if (c != 0) out[e] = c;
    }
    return out;
}

}  // namespace

Json qcoeffs_to_json(const QCoeffs& q) { return coeff_map_to_json(q); }
QCoeffs qcoeffs_from_json(const Json& j) { return coeff_map_from_json(j); }

Json poly_to_json(const LaurentPoly& p) {
    try {
        return Json{{"var", "q"}, {"coeffs", qcoeffs_to_json(p.as_q_polynomial())}};
    } catch (const NotAQPolynomial&) {
        return poly_to_json_v(p);
    }
}

Json poly_to_json_v(const LaurentPoly& p) {
    return Json{{"var", "v"}, {"coeffs", coeff_map_to_json(p.coeffs())}};
}

LaurentPoly poly_from_json(const Json& j) {
    const auto var = j.at("var").get<std::string>();
    auto coeffs = coeff_map_from_json(j.at("coeffs"));
    if (var == "q") return LaurentPoly::from_q(coeffs);
    if (var != "v") throw InvalidArgument("unknown variable " + var);
    LaurentPoly p;
    for (const auto& [e, c] : coeffs) p.add_term(e, c);
    return p;
}

Json perm_to_json(const Permutation& w) { return Json(w.word()); }

Permutation perm_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

Json multisegment_to_json(const Multisegment& m) {
    Json out = Json::array();
    for (const auto& [seg, mult] : m.entries())
        for (int i = 0; i < mult; ++i) out.push_back(Json::array({seg.a, seg.b}));
    return out;
}

Multisegment multisegment_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a segment list, got " + j.dump());
    Multisegment out;
    for (const auto& s : j) {
        if (!s.is_array() || s.size() != 2) throw InvalidArgument("expected [a,b], got " + s.dump());
        out.add(Segment(s[0].get<int>(), s[1].get<int>()));
    }
    return out;
}

Json bisequence_to_json(const BiSequence& A) { return Json{{"a", A.a()}, {"b", A.b()}}; }

BiSequence bisequence_from_json(const Json& j) {
    return BiSequence(j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>());
}

Json pbw_to_json(const PBWElement& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back(Json{{"multisegment", multisegment_to_json(m)}, {"coeff", poly_to_json_v(c)}});
    return out;
}

PBWElement pbw_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a term list, got " + j.dump());
    PBWElement out;
    for (const auto& t : j) out.add(multisegment_from_json(t.at("multisegment")), poly_from_json(t.at("coeff")));
    return out;
}

}  // namespace klforge
