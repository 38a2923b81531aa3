#include "sscgamma/serialize.hpp"

#include "sscgamma/error.hpp"

#include <cstdio>
#include <sstream>

namespace ssc {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw DomainError("unknown format " + name);
}

namespace {

Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ParseError("expected an integer");
}

Json rational_list(const std::vector<mpq_class>& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(Json::array({integer_json(c.get_num()), integer_json(c.get_den())}));
    return arr;
}

std::vector<mpq_class> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient list");
    std::vector<mpq_class> out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("expected a [num, den] pair");
        mpz_class den = integer_from_json(pair[1]);
        if (den == 0) throw ParseError("zero denominator");
        mpq_class c(integer_from_json(pair[0]), den);
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field ") + key);
    return j.at(key);
}

template <class T>
T scalar(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field ") + key + ": " + e.what());
    }
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string diag_text(const std::vector<int>& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return s;
}

}  // namespace

Json to_json(const CycloNumber& x) {
    CycloNumber r = x.reduce_conductor();
    Json j;
    j["conductor"] = r.conductor();
    j["coeffs"] = rational_list(r.coeffs());
    j["sqrt_part"] = rational_list(r.sqrt_part());
    j["q_tag"] = r.has_sqrt_part() ? r.q_tag() : 0;
    return j;
}

CycloNumber cyclo_from_json(const Json& j) {
    int conductor = scalar<int>(j, "conductor");
    if (conductor < 1) throw ParseError("conductor must be positive");
    auto coeffs = rationals_from_json(field(j, "coeffs"));
    auto sqrt_part = rationals_from_json(field(j, "sqrt_part"));
    int q_tag = scalar<int>(j, "q_tag");
    if (!sqrt_part.empty() && q_tag < 2) throw ParseError("sqrt part without a q tag");
    try {
        return CycloNumber::from_coeffs(conductor, coeffs, sqrt_part, q_tag);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const LaurentPoly& p) {
    Json j;
    j["min_deg"] = p.is_zero() ? 0 : p.min_deg();
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    j["coeffs"] = arr;
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    long min_deg = scalar<long>(j, "min_deg");
    std::vector<CycloNumber> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(cyclo_from_json(c));
    return LaurentPoly(min_deg, coeffs);
}

Json to_json(const RatFun& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

RatFun ratfun_from_json(const Json& j) {
    LaurentPoly num = laurent_from_json(field(j, "num"));
    LaurentPoly den = laurent_from_json(field(j, "den"));
    if (den.is_zero()) throw ParseError("zero denominator");
    return RatFun(num, den);
}

Json to_json(const TameChar& c) {
    Json j;
    j["q"] = c.res.field.q();
    j["res_exponent"] = c.res.exponent;
    j["pi_value"] = to_json(c.pi_value);
    return j;
}

TameChar tame_char_from_json(const Json& j) {
    int q = scalar<int>(j, "q");
    if (!is_prime(q)) throw ParseError("q must be prime");
    PrimeField f(q);
    CycloNumber pi = cyclo_from_json(field(j, "pi_value"));
    if (!pi.root_exponent()) throw ParseError("pi_value must be a root of unity");
    return TameChar{MultChar(f, scalar<long>(j, "res_exponent")), pi};
}

Json to_json(const SscDatum& d) {
    Json j;
    j["n"] = d.n;
    j["q"] = d.q();
    j["omega"] = to_json(d.omega);
    j["t0"] = d.t0;
    j["zeta_index"] = d.zeta_index;
    j["zeta"] = to_json(d.zeta);
    return j;
}

SscDatum datum_from_json(const Json& j) {
    TameChar omega = tame_char_from_json(field(j, "omega"));
    if (scalar<int>(j, "q") != omega.res.field.q()) throw ParseError("q disagrees with omega");
    SscDatum d = make_datum(scalar<int>(j, "n"), omega, scalar<int>(j, "t0"), scalar<int>(j, "zeta_index"));
    if (j.contains("zeta") && cyclo_from_json(j.at("zeta")) != d.zeta)
        throw ParseError("zeta disagrees with zeta_index");
    return d;
}

Json to_json(const LocalFactors& f) {
    Json j;
    j["gamma"] = to_json(f.gamma);
    j["L"] = to_json(f.L);
    j["L_dual"] = to_json(f.L_dual);
    j["epsilon"] = to_json(f.epsilon);
    j["p1"] = to_json(f.p1);
    j["p2"] = to_json(f.p2);
    return j;
}

LocalFactors local_factors_from_json(const Json& j) {
    return LocalFactors{ratfun_from_json(field(j, "gamma")),   ratfun_from_json(field(j, "L")),
                        ratfun_from_json(field(j, "L_dual")),  ratfun_from_json(field(j, "epsilon")),
                        laurent_from_json(field(j, "p1")),     laurent_from_json(field(j, "p2"))};
}

Json to_json(const GammaProfile& p) {
    Json j;
    j["n"] = p.n;
    j["q"] = p.q();
    j["omega"] = to_json(p.omega);
    j["psi_shift"] = p.psi.shift;
    Json entries = Json::array();
    for (size_t a = 0; a < p.entries.size(); ++a) {
        Json e;
        e["mu_exponent"] = a;
        e["gamma"] = to_json(p.entries[a]);
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

GammaProfile profile_from_json(const Json& j) {
    TameChar omega = tame_char_from_json(field(j, "omega"));
    const int q = omega.res.field.q();
    if (scalar<int>(j, "q") != q) throw ParseError("q disagrees with omega");
    GammaProfile p{scalar<int>(j, "n"), omega, AddChar(omega.res.field, scalar<long>(j, "psi_shift")), {}};
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != q - 1)
        throw ParseError("a profile has exactly q-1 entries");
    for (size_t a = 0; a < entries.size(); ++a) {
        if (scalar<size_t>(entries[a], "mu_exponent") != a) throw ParseError("profile entries out of order");
        p.entries.push_back(ratfun_from_json(field(entries[a], "gamma")));
    }
    return p;
}

Json to_json(const RecoveredParams& r) {
    Json j;
    j["t0"] = r.t0;
    j[r.even ? "zeta_squared" : "zeta"] = to_json(r.zeta_value);
    return j;
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["m"] = r.m;
    j["q"] = r.q;
    j["cases_checked"] = r.cases_checked;
    j["violations"] = r.violations;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["kind"] = e.kind;
        x["l"] = e.l;
        x["d"] = e.d;
        x["expected"] = integer_json(e.expected);
        x["actual"] = integer_json(e.actual);
        entries.push_back(x);
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const DistinguishabilityReport& r) {
    Json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["omega"] = to_json(r.omega);
    j["gcd_ok"] = r.gcd_ok;
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json x;
        Json members = Json::array();
        for (const auto& d : c.members) {
            Json mem;
            mem["t0"] = d.t0;
            mem["zeta_index"] = d.zeta_index;
            members.push_back(mem);
        }
        x["members"] = members;
        x["profile_hash"] = c.profile_hash;
        classes.push_back(x);
    }
    j["classes"] = classes;
    j["prediction_matched"] = r.prediction_matched;
    if (!r.gcd_ok) j["note"] = "hypothesis violated";
    return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string to_csv(const std::vector<SscDatum>& data) {
    std::ostringstream os;
    os << "n,q,t0,zeta_index,zeta\n";
    for (const auto& d : data)
        os << d.n << "," << d.q() << "," << d.t0 << "," << d.zeta_index << ","
           << csv_quote(d.zeta.reduce_conductor().to_string()) << "\n";
    return os.str();
}

std::string to_csv(const GammaProfile& p) {
    std::ostringstream os;
    os << "mu_exponent,gamma\n";
    for (size_t a = 0; a < p.entries.size(); ++a) os << a << "," << csv_quote(to_text(p.entries[a])) << "\n";
    return os.str();
}

std::string to_csv(const LemmaReport& r) {
    std::ostringstream os;
    os << "lemma,m,q,kind,l,d,expected,actual\n";
    for (const auto& e : r.entries)
        os << r.lemma << "," << r.m << "," << r.q << "," << e.kind << "," << e.l << "," << csv_quote(diag_text(e.d))
           << "," << e.expected.get_str() << "," << e.actual.get_str() << "\n";
    return os.str();
}

std::string to_csv(const DistinguishabilityReport& r) {
    std::ostringstream os;
    os << "class,size,profile_hash,members\n";
    for (size_t i = 0; i < r.classes.size(); ++i) {
        std::string members;
        for (const auto& d : r.classes[i].members)
            members += (members.empty() ? "" : " ") + std::string("(") + std::to_string(d.t0) + ";" +
                       std::to_string(d.zeta_index) + ")";
        os << i << "," << r.classes[i].members.size() << "," << r.classes[i].profile_hash << "," << csv_quote(members)
           << "\n";
    }
    return os.str();
}

std::string to_text(const RatFun& f) { return f.to_string(); }

std::string to_text(const SscDatum& d) {
    return "n=" + std::to_string(d.n) + " q=" + std::to_string(d.q()) + " t0=" + std::to_string(d.t0) +
           " zeta_index=" + std::to_string(d.zeta_index) + " zeta=" + d.zeta.reduce_conductor().to_string();
}

std::string to_text(const LocalFactors& f) {
    return "gamma: " + f.gamma.to_string() + "\nL: " + f.L.to_string() + "\nL_dual: " + f.L_dual.to_string() +
           "\nepsilon: " + f.epsilon.to_string() + "\n";
}

std::string to_text(const GammaProfile& p) {
    std::string s;
    for (size_t a = 0; a < p.entries.size(); ++a) s += std::to_string(a) + ": " + p.entries[a].to_string() + "\n";
    return s;
}

std::string to_text(const RecoveredParams& r) {
    return "t0=" + std::to_string(r.t0) + (r.even ? " zeta^2=" : " zeta=") + r.zeta_value.reduce_conductor().to_string();
}

std::string to_text(const LemmaReport& r) {
    std::string s = r.lemma + " m=" + std::to_string(r.m) + " q=" + std::to_string(r.q) +
                    " cases=" + std::to_string(r.cases_checked) + " violations=" + std::to_string(r.violations.size()) +
                    "\n";
    for (const auto& v : r.violations) s += "  " + v + "\n";
    return s;
}

std::string to_text(const DistinguishabilityReport& r) {
    std::string s = "n=" + std::to_string(r.n) + " q=" + std::to_string(r.q) +
                    " classes=" + std::to_string(r.classes.size()) + " gcd_ok=" + (r.gcd_ok ? "yes" : "no") +
                    " prediction_matched=" + (r.prediction_matched ? "yes" : "no") + "\n";
    if (!r.gcd_ok) s += "hypothesis violated, partition is descriptive only\n";
    for (const auto& c : r.classes) {
        s += "  " + c.profile_hash + ":";
        for (const auto& d : c.members) s += " (" + std::to_string(d.t0) + "," + std::to_string(d.zeta_index) + ")";
        s += "\n";
    }
    return s;
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ssc
