#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp> // nlohmann/json, vendored

#include "kapteyn/closed_forms.hpp"
#include "kapteyn/rational.hpp"
#include "kapteyn/series_eval.hpp"
#include "kapteyn/transform_first.hpp"
#include "kapteyn/transform_second.hpp"

namespace kapteyn
{

using json = nlohmann::json;

/// Malformed input document (bad JSON shape, unparseable number, mixed modes).
class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

using CoeffRecord = std::variant<TaylorCoeffs<Rational>, TaylorCoeffs<double>, KapteynFirstCoeffs<Rational>,
                                 KapteynFirstCoeffs<double>, KapteynSecondCoeffs<Rational>, KapteynSecondCoeffs<double>>;

namespace detail
{

inline Rational rational_from_json(const json& j, const char* field)
{
    try {
        if (j.is_string())
            return Rational::parse(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(field) + ": " + e.what());
    }
    throw ParseError(std::string(field) + ": exact mode expects rational strings \"p/q\", got " + j.dump());
}

inline double real_from_json(const json& j, const char* field)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::size_t used = 0;
        try {
            const double v = std::stod(s, &used);
            if (used == s.size())
                return v;
        } catch (const std::exception&) {
        }
        // Orders may still be written as exact strings in float records.
        try {
            return Rational::parse(s).to_double();
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError(std::string(field) + ": expected a real number, got " + j.dump());
}

template <CoeffScalar S>
S scalar_from_json(const json& j, const char* field)
{
    if constexpr (std::same_as<S, Rational>)
        return rational_from_json(j, field);
    else {
        if (!j.is_number())
            throw ParseError(std::string(field) + ": float mode expects JSON numbers, got " + j.dump());
        return j.get<double>();
    }
}

template <CoeffScalar S>
S order_from_json(const json& j, const char* field)
{
    if constexpr (std::same_as<S, Rational>)
        return rational_from_json(j, field);
    else
        return real_from_json(j, field);
}

template <CoeffScalar S>
std::vector<S> array_from_json(const json& j, const char* field)
{
    if (!j.is_array())
        throw ParseError(std::string(field) + ": expected an array");
    std::vector<S> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(scalar_from_json<S>(e, field));
    return out;
}

inline json scalar_to_json(const Rational& r) { return r.str(); }
inline json scalar_to_json(double d) { return d; }

template <CoeffScalar S>
json array_to_json(const std::vector<S>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(scalar_to_json(x));
    return out;
}

template <CoeffScalar S>
constexpr const char* mode_name()
{
    return std::same_as<S, Rational> ? "exact" : "float";
}

inline const json& require_field(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

// "coeffs" with the conventional single-letter name accepted as an alias.
inline const json& coeff_field(const json& j, const char* alias)
{
    if (auto it = j.find("coeffs"); it != j.end())
        return *it;
    if (auto it = j.find(alias); it != j.end())
        return *it;
    throw ParseError(std::string("missing field \"coeffs\""));
}

template <CoeffScalar S>
CoeffRecord record_from_json(const json& j, const std::string& kind)
{
    if (kind == "taylor")
        return TaylorCoeffs<S>{array_from_json<S>(coeff_field(j, "b"), "coeffs")};
    if (kind == "kapteyn1") {
        const S nu = j.contains("nu") ? order_from_json<S>(j["nu"], "nu") : S(0);
        return KapteynFirstCoeffs<S>{nu, array_from_json<S>(coeff_field(j, "a"), "coeffs")};
    }
    if (kind == "kapteyn2") {
        const S mu = j.contains("mu") ? order_from_json<S>(j["mu"], "mu") : S(0);
        const S nu = j.contains("nu") ? order_from_json<S>(j["nu"], "nu") : S(0);
        KapteynSecondCoeffs<S> r{mu, nu, array_from_json<S>(require_field(j, "a"), "a"),
                                 array_from_json<S>(require_field(j, "c"), "c")};
        if (r.a.size() != r.c.size())
            throw ParseError("kapteyn2 record: \"a\" and \"c\" must have equal length");
        return r;
    }
    throw ParseError("unknown record kind \"" + kind + "\"");
}

} // namespace detail

/// Parses {"kind":"taylor"|"kapteyn1"|"kapteyn2", "mode":"exact"|"float", ...}.
/// Mode defaults to exact; exact records hold rational strings, float records
/// hold JSON numbers, and mixing the two is rejected.
inline CoeffRecord record_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("coefficient record must be a JSON object");
    const auto& kind_j = detail::require_field(j, "kind");
    if (!kind_j.is_string())
        throw ParseError("\"kind\" must be a string");
    const std::string kind = kind_j.get<std::string>();
    std::string mode = "exact";
    if (auto it = j.find("mode"); it != j.end()) {
        if (!it->is_string())
            throw ParseError("\"mode\" must be a string");
        mode = it->get<std::string>();
    }
    if (mode == "exact")
        return detail::record_from_json<Rational>(j, kind);
    if (mode == "float")
        return detail::record_from_json<double>(j, kind);
    throw ParseError("unknown mode \"" + mode + "\"");
}

inline CoeffRecord record_from_string(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return record_from_json(j);
}

template <CoeffScalar S>
json to_json(const TaylorCoeffs<S>& t)
{
    return json{{"kind", "taylor"}, {"mode", detail::mode_name<S>()}, {"coeffs", detail::array_to_json(t.b)}};
}

template <CoeffScalar S>
json to_json(const KapteynFirstCoeffs<S>& k)
{
    return json{{"kind", "kapteyn1"},
                {"nu", detail::scalar_to_json(k.nu)},
                {"mode", detail::mode_name<S>()},
                {"coeffs", detail::array_to_json(k.a)}};
}

template <CoeffScalar S>
json to_json(const KapteynSecondCoeffs<S>& k)
{
    return json{{"kind", "kapteyn2"},
                {"mu", detail::scalar_to_json(k.mu)},
                {"nu", detail::scalar_to_json(k.nu)},
                {"mode", detail::mode_name<S>()},
                {"a", detail::array_to_json(k.a)},
                {"c", detail::array_to_json(k.c)}};
}

inline json to_json(const CoeffRecord& r)
{
    return std::visit([](const auto& x) { return to_json(x); }, r);
}

namespace detail
{
template <CoeffScalar S>
std::string csv_cell(const S& x)
{
    if constexpr (std::same_as<S, Rational>)
        return x.str();
    else
        return json(x).dump();
}
} // namespace detail

/// CSV table "index,value"; second-kind records use "index,a,c".
inline std::string to_csv(const CoeffRecord& r)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& rec) {
            using T = std::decay_t<decltype(rec)>;
            if constexpr (requires { rec.c; }) {
                os << "index,a,c\n";
                for (std::size_t i = 0; i < rec.a.size(); ++i)
                    os << i << ',' << detail::csv_cell(rec.a[i]) << ',' << detail::csv_cell(rec.c[i]) << '\n';
            } else {
                os << "index,value\n";
                const auto& v = [&]() -> const auto& {
                    if constexpr (requires { rec.b; })
                        return rec.b;
                    else
                        return rec.a;
                }();
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << i << ',' << detail::csv_cell(v[i]) << '\n';
            }
            (void)sizeof(T);
        },
        r);
    return os.str();
}

// Closed forms

inline const char* base_name(ClosedFormBase b)
{
    switch (b) {
    case ClosedFormBase::OneMinusZ:
        return "1-z";
    case ClosedFormBase::OneMinusFourZSq:
        return "1-4z^2";
    case ClosedFormBase::OneMinusZSq:
        return "1-a^2";
    }
    return "";
}

inline json to_json(const ClosedForm& cf)
{
    json num = json::array();
    for (const auto& c : cf.numerator.coeffs())
        num.push_back(c.str());
    return json{{"constant", cf.constant.str()},
                {"prefactor", cf.prefactor.str()},
                {"z_power", cf.z_power},
                {"numerator", num},
                {"base", base_name(cf.base)},
                {"exponent", cf.exponent().str()},
                {"variable", cf.variable}};
}

inline ClosedForm closed_form_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("closed form must be a JSON object");
    ClosedForm cf;
    cf.constant = detail::rational_from_json(detail::require_field(j, "constant"), "constant");
    cf.prefactor = detail::rational_from_json(detail::require_field(j, "prefactor"), "prefactor");
    const auto& zp = detail::require_field(j, "z_power");
    if (!zp.is_number_unsigned())
        throw ParseError("z_power must be a nonnegative integer");
    cf.z_power = zp.get<std::size_t>();
    cf.numerator = Polynomial(detail::array_from_json<Rational>(detail::require_field(j, "numerator"), "numerator"));
    const auto base = detail::require_field(j, "base").get<std::string>();
    if (base == "1-z")
        cf.base = ClosedFormBase::OneMinusZ;
    else if (base == "1-4z^2")
        cf.base = ClosedFormBase::OneMinusFourZSq;
    else if (base == "1-a^2" || base == "1-z^2")
        cf.base = ClosedFormBase::OneMinusZSq;
    else
        throw ParseError("unknown base \"" + base + "\"");
    const Rational e = detail::rational_from_json(detail::require_field(j, "exponent"), "exponent");
    if (e.den() != 1 && e.den() != 2)
        throw ParseError("exponent denominator must be 1 or 2");
    cf.exponent_num = e.num().convert_to<long>();
    cf.exponent_den = e.den().convert_to<int>();
    cf.variable = j.value("variable", std::string("z"));
    return cf;
}

namespace detail
{

// Descending-degree rendering such as "9z + 1" or "27a^6 + 472a^4 + 64".
inline std::string render_polynomial(const Polynomial& p, const std::string& var)
{
    std::string out;
    for (long d = p.degree(); d >= 0; --d) {
        const Rational c = p[static_cast<std::size_t>(d)];
        if (c.is_zero())
            continue;
        const Rational mag = abs(c);
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        std::string coeff = mag.str();
        if (mag.den() != 1 && d > 0)
            coeff = "(" + coeff + ")";
        if (d == 0)
            out += coeff;
        else {
            if (mag != Rational(1))
                out += coeff;
            out += var;
            if (d > 1)
                out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

/// Human-readable rendering, e.g. "z (9z + 1) / (2 (1-z)^7)".
inline std::string format_pretty(const ClosedForm& cf)
{
    const std::string& v = cf.variable;
    std::string base = base_name(cf.base);
    if (v != "z" && cf.base == ClosedFormBase::OneMinusZSq)
        base = "1-" + v + "^2";

    std::vector<std::string> top;
    const Integer pnum = boost::multiprecision::abs(cf.prefactor.num());
    if (pnum != 1)
        top.push_back(pnum.str());
    if (cf.z_power == 1)
        top.push_back(v);
    else if (cf.z_power > 1)
        top.push_back(v + "^" + std::to_string(cf.z_power));
    if (cf.numerator.degree() > 0)
        top.push_back("(" + detail::render_polynomial(cf.numerator, v) + ")");
    else if (cf.numerator[0] != Rational(1))
        top.push_back(cf.numerator[0].str());

    std::vector<std::string> bottom;
    if (cf.prefactor.den() != 1)
        bottom.push_back(cf.prefactor.den().str());
    const Rational e = cf.exponent();
    std::string power = "(" + base + ")";
    if (e != Rational(1))
        power += "^" + (e.is_integer() ? e.str() : "(" + e.str() + ")");
    bottom.push_back(power);

    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (const auto& p : parts)
            s += (s.empty() ? "" : " ") + p;
        return s;
    };

    std::string out;
    if (!cf.constant.is_zero())
        out = cf.constant.str() + (cf.prefactor.sign() < 0 ? " - " : " + ");
    else if (cf.prefactor.sign() < 0)
        out = "-";
    if (cf.prefactor.is_zero())
        return cf.constant.str();
    out += top.empty() ? "1" : join(top);
    out += " / ";
    out += bottom.size() > 1 ? "(" + join(bottom) + ")" : join(bottom);
    return out;
}

inline json to_json(const EvalReport& r)
{
    return json{{"value", r.value}, {"terms_used", r.terms_used}, {"last_term", r.last_term}};
}

} // namespace kapteyn
