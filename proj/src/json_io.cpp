#include "isokit/json_io.hpp"

#include <limits>
#include <regex>

namespace isokit::json_io {

Json to_json(const Integer& v)
{
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Integer integer_from_json(const Json& v, const std::string& field)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
        return Integer(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        static const std::regex decimal("-?[0-9]+");
        const auto& s = v.get_ref<const std::string&>();
        if (std::regex_match(s, decimal)) return Integer(s, 10);
        throw DataError(field + ": \"" + s + "\" is not a decimal integer");
    }
    if (v.is_number_float()) {
        throw DataError(field + ": must be an integer (write large values as decimal strings)");
    }
    throw DataError(field + ": expected an integer, got " + std::string(v.type_name()));
}

namespace {

const Json& require(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw DataError(std::string(key) + ": missing");
    return *it;
}

unsigned dimension_from_json(const Json& v)
{
    const Integer n = integer_from_json(v, "n");
    if (n < 0 || n > std::numeric_limits<unsigned>::max()) {
        throw DataError("n: " + n.get_str() + " is not a valid dimension");
    }
    return static_cast<unsigned>(n.get_ui());
}

std::int64_t small_from_json(const Json& v, const std::string& field)
{
    const Integer x = integer_from_json(v, field);
    if (!x.fits_slong_p()) throw DataError(field + ": " + x.get_str() + " is out of range");
    return x.get_si();
}

std::vector<Integer> counts_from_json(const Json& obj, const char* key)
{
    const Json& arr = require(obj, key);
    if (!arr.is_array()) throw DataError(std::string(key) + ": expected an array");
    std::vector<Integer> out;
    out.reserve(arr.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
        out.push_back(integer_from_json(arr[j], std::string(key) + "[" + std::to_string(j) + "]"));
    }
    return out;
}

Json integers_to_json(const std::vector<Integer>& v)
{
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

} // namespace

IsotropyData data_from_json(const Json& v)
{
    if (!v.is_object()) throw DataError("isotropy data: expected a JSON object");
    const unsigned n = dimension_from_json(require(v, "n"));

    const bool has_points = v.contains("points");
    const bool has_table = v.contains("m_plus") || v.contains("m_minus");
    if (has_points && has_table) {
        throw DataError("points: cannot be combined with m_plus/m_minus");
    }
    if (has_table) {
        const auto plus = counts_from_json(v, "m_plus");
        const auto minus = counts_from_json(v, "m_minus");
        return data_from_multiplicities(n, plus, minus);
    }

    const Json& pts = require(v, "points");
    if (!pts.is_array()) throw DataError("points: expected an array");
    std::vector<RawPoint> raw;
    raw.reserve(pts.size());
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
        const std::string where = "points[" + std::to_string(idx) + "]";
        const Json& p = pts[idx];
        if (!p.is_object()) throw DataError(where + ": expected an object with j and sign");
        auto field = [&](const char* key) -> const Json& {
            auto it = p.find(key);
            if (it == p.end()) throw DataError(where + "." + key + ": missing");
            return *it;
        };
        raw.push_back(RawPoint{small_from_json(field("j"), where + ".j"),
                               small_from_json(field("sign"), where + ".sign")});
    }
    return make_data(n, raw);
}

Json to_json(const IsotropyData& d)
{
    if (d.point_count() > kMaxExpandedPoints) {
        const auto t = multiplicities(d);
        return Json{{"n", d.n()}, {"m_plus", integers_to_json(t.m_plus)},
                    {"m_minus", integers_to_json(t.m_minus)}};
    }
    Json pts = Json::array();
    for (const auto& [key, c] : d.runs()) {
        for (Integer k = 0; k < c; ++k) pts.push_back(Json{{"j", key.j}, {"sign", to_int(key.sign)}});
    }
    return Json{{"n", d.n()}, {"points", std::move(pts)}};
}

Json to_json(const MultiplicityTable& t)
{
    return Json{{"m", integers_to_json(t.m)},
                {"m_minus", integers_to_json(t.m_minus)},
                {"m_plus", integers_to_json(t.m_plus)}};
}

Json to_json(const KClass& k)
{
    Json terms = Json::array();
    for (const auto& [m, c] : k.terms()) {
        terms.push_back(Json{{"coeff", to_json(c)}, {"t", m.t}, {"tbar", m.tbar}});
    }
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const BordismPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [deg, c] : p.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"degree", deg}});
    return Json{{"polynomial", std::move(terms)}};
}

Json to_json(const IdentityReport& r)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.residuals.size(); ++i) {
        rows.push_back(Json{{"i", i}, {"value", to_json(r.residuals[i])}});
    }
    return Json{{"n", r.n}, {"residuals", std::move(rows)}, {"satisfied", r.satisfied}};
}

Json to_json(const Witness& w)
{
    return Json{{"m0", to_json(w.m0)},
                {"n", w.n},
                {"realizable", true},
                {"rep_spheres", integers_to_json(w.rep_spheres)}};
}

Json to_json(const NotRealizable& nr)
{
    Json defects = Json::array();
    for (unsigned j : nr.violated()) {
        defects.push_back(Json{{"j", j}, {"residual", to_json(nr.residuals[j])}});
    }
    return Json{{"defects", std::move(defects)}, {"realizable", false}};
}

Json to_json(const Realization& r)
{
    return std::visit([](const auto& x) { return to_json(x); }, r);
}

} // namespace isokit::json_io
