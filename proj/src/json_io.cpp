#include "refab/json_io.hpp"

#include <stdexcept>

namespace refab {

namespace {

Json rat_pair(const Rat& r) {
    return Json::array({r.num().get_str(), r.den().get_str()});
}

Rat rat_from_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational: expected [num, den] pair");
    return Rat::from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    if (!p.integral_exponents())
        throw std::invalid_argument("to_json: Laurent polynomial has fractional exponents");
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e.to_long();
        t["num"] = c.num().get_str();
        t["den"] = c.den().get_str();
        terms.push_back(std::move(t));
    }
    Json j;
    j["degree"] = p.is_zero() ? 0 : p.degree().to_long();
    j["terms"] = std::move(terms);
    j["symmetric"] = p.is_symmetric();
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const Json& t : j.at("terms"))
        p += LaurentPoly::monomial(Rat(t.at("exp").get<long>()),
                                   Rat::from_strings(t.at("num").get<std::string>(),
                                                     t.at("den").get<std::string>()));
    return p;
}

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (long k = 0; k <= s.order(); ++k) coeffs.push_back(rat_pair(s[k]));
    Json j;
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Series series_from_json(const Json& j) {
    long order = j.at("order").get<long>();
    const Json& coeffs = j.at("coeffs");
    if (static_cast<long>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series: coefficient count does not match order");
    Series s(order);
    for (long k = 0; k <= order; ++k) s.set(k, rat_from_pair(coeffs[static_cast<std::size_t>(k)]));
    return s;
}

Json to_json(const NPoly& p) {
    Json j = Json::array();
    for (const Rat& c : p.coeffs()) j.push_back(rat_pair(c));
    return j;
}

NPoly npoly_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const Json& c : j) coeffs.push_back(rat_from_pair(c));
    return NPoly(std::move(coeffs));
}

Json to_json(const ArInvariant& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.by_codegree.size(); ++i) {
        Json row;
        row["i"] = i;
        row["npoly"] = to_json(a.by_codegree[i]);
        rows.push_back(std::move(row));
    }
    Json j;
    j["genus"] = a.genus;
    j["imax"] = a.imax;
    j["codegree"] = std::move(rows);
    return j;
}

ArInvariant ar_from_json(const Json& j) {
    ArInvariant a;
    a.genus = j.at("genus").get<long>();
    a.imax = j.at("imax").get<long>();
    a.by_codegree.resize(static_cast<std::size_t>(a.imax) + 1);
    for (const Json& row : j.at("codegree")) {
        long i = row.at("i").get<long>();
        if (i < 0 || i > a.imax) throw std::invalid_argument("ar: codegree index out of range");
        a.by_codegree[static_cast<std::size_t>(i)] = npoly_from_json(row.at("npoly"));
    }
    return a;
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace refab
