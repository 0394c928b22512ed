#include "ggl/json_io.hpp"

#include <fstream>

namespace ggl {

namespace {

std::string coef_str(const Rat& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

Rat coef_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
    Json j;
    j["ring"] = p.ring().name();
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["exp"] = it->first;
        t["coef"] = coef_str(it->second);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    Ring r = Ring::parse(j.at("ring").get<std::string>());
    int nvars = j.at("nvars").get<int>();
    LaurentPoly p(r, nvars);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        p.add_term(e, coef_parse(t.at("coef").get<std::string>()));
    }
    return p;
}

Json fgl_to_json(const TruncatedFGL& f) {
    Json j;
    j["ring"] = f.ring.name();
    j["N"] = f.degree;
    Json a = Json::array();
    std::vector<std::pair<int, int>> keys;
    for (const auto& [ij, c] : f.coeffs) keys.push_back(ij);
    std::sort(keys.begin(), keys.end(), [](auto p, auto q) {
        if (p.first + p.second != q.first + q.second)
            return p.first + p.second < q.first + q.second;
        return p.first < q.first;
    });
    for (auto [i, jj] : keys) {
        Json t;
        t["i"] = i;
        t["j"] = jj;
        t["coef"] = coef_str(f.a(i, jj));
        a.push_back(t);
    }
    j["a"] = a;
    return j;
}

TruncatedFGL fgl_from_json(const Json& j) {
    Ring r = Ring::parse(j.at("ring").get<std::string>());
    TruncatedFGL f(r, j.at("N").get<int>());
    for (const auto& t : j.at("a"))
        f.set(t.at("i").get<int>(), t.at("j").get<int>(),
              coef_parse(t.at("coef").get<std::string>()));
    return f;
}

TruncatedFGL fgl_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j = Json::parse(in);
    return fgl_from_json(j);
}

Json expansion_to_json(const FlagExpansion& e) {
    Json j;
    Json flag = Json::array();
    for (const auto& v : e.flag.chars) flag.push_back(v.e);
    j["flag"] = flag;
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(poly_to_json(c.payload));
    j["coeffs"] = coeffs;
    return j;
}

Json report_to_json(const RegularityReport& r) {
    Json j;
    j["law"] = r.law;
    j["group"] = r.group.str();
    Json chars = Json::array();
    for (const auto& v : r.chars) chars.push_back(v.e);
    j["chars"] = chars;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["certified"] = r.certified;
    if (r.bound > 0) j["bound"] = r.bound;
    if (r.witness) j["witness"] = poly_to_json(r.witness->payload);
    j["detail"] = r.detail;
    return j;
}

}  // namespace ggl
