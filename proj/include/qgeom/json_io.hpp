#pragma once

#include <string>

#include <json.hpp>

#include "qgeom/fuzzy_sphere.hpp"
#include "qgeom/measurement.hpp"
#include "qgeom/qubit.hpp"
#include "qgeom/rotation.hpp"

namespace qgeom {

// ordered_json keeps field order canonical across parse/serialize round trips
using json = nlohmann::ordered_json;

inline json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline cplx complex_from_json(const json& j, const std::string& field) {
    if (!j.contains(field) || !j.at(field).is_object())
        throw std::invalid_argument("missing or malformed complex field '" + field + "'");
    const json& c = j.at(field);
    if (!c.contains("re") || !c.contains("im") || !c.at("re").is_number() || !c.at("im").is_number())
        throw std::invalid_argument("complex field '" + field + "' needs numeric 're' and 'im'");
    return cplx{c.at("re").get<double>(), c.at("im").get<double>()};
}

inline json to_json(const Qubit& q) {
    return json{{"a", to_json(q.a())}, {"b", to_json(q.b())}};
}

inline Qubit qubit_from_json(const json& j) {
    const cplx a = complex_from_json(j, "a");  // check "a" before "b"
    const cplx b = complex_from_json(j, "b");
    return Qubit(a, b);
}

inline json to_json(const MeasurementOutcome& o) {
    return json{{"outcome", o.outcome},
                {"probability", o.probability},
                {"post_state", to_json(o.post_state)}};
}

inline json to_json(const DiagonalUnitary& u) {
    return json{{"phi", u.phi()}, {"alpha", to_json(u.alpha())}};
}

inline DiagonalUnitary diagonal_unitary_from_json(const json& j) {
    if (!j.contains("phi") || !j.at("phi").is_number())
        throw std::invalid_argument("missing or malformed numeric field 'phi'");
    return DiagonalUnitary(j.at("phi").get<double>(), complex_from_json(j, "alpha"));
}

inline json to_json(const RotationDecomposition& r) {
    return json{{"phi", r.phi},
                {"theta", r.theta},
                {"axis", {r.axis[0], r.axis[1], r.axis[2]}}};
}

inline json to_json(const VerificationReport& rep) {
    json residuals = json::object();
    for (const auto& [name, value] : rep.residuals) residuals[name] = value;
    return json{{"n", rep.n}, {"k", rep.k}, {"residuals", residuals}};
}

}  // namespace qgeom
