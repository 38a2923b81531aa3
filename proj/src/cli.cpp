#include "sscgamma/cli.hpp"

#include "sscgamma/error.hpp"
#include "sscgamma/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ssc {

namespace {

struct Params {
    int n = 0;
    int q = 0;
    int m = 0;
    std::vector<int> ns;
    std::vector<int> qs;
    long omega_exponent = 0;
    int omega_pi_order = 1;
    long omega_pi_index = 0;
    int t0 = 1;
    int zeta_index = 0;
    long mu_exponent = 0;
    int mu_pi_order = 1;
    long mu_pi_index = 0;
    long psi_shift = 1;
    std::string format = "json";
    std::string output;
    std::string input;
    bool local_factors = false;
};

Json diagnostic(const std::string& category, const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = category;
    j["kind"] = kind;
    j["message"] = message;
    return j;
}

void require_prime(int q) {
    if (q < 2 || !is_prime(q)) throw DomainError("q must be a prime, got " + std::to_string(q));
}

void require_n(int n) {
    if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
}

void require_root_order(int order, const char* what) {
    if (order < 1) throw DomainError(std::string(what) + " must be positive");
}

TameChar omega_of(const Params& p, const PrimeField& f) {
    require_root_order(p.omega_pi_order, "omega-pi-order");
    return make_tame_char(f, p.omega_exponent, p.omega_pi_order, p.omega_pi_index);
}

TameChar mu_of(const Params& p, const PrimeField& f) {
    require_root_order(p.mu_pi_order, "mu-pi-order");
    return make_tame_char(f, p.mu_exponent, p.mu_pi_order, p.mu_pi_index);
}

SscDatum datum_of(const Params& p) {
    require_n(p.n);
    require_prime(p.q);
    PrimeField f(p.q);
    if (p.t0 < 1 || p.t0 >= p.q) throw DomainError("t0 must lie in 1..q-1");
    if (p.zeta_index < 0 || p.zeta_index >= p.n) throw DomainError("zeta-index must lie in 0..n-1");
    return make_datum(p.n, omega_of(p, f), p.t0, p.zeta_index);
}

AddChar psi_of(const Params& p, const PrimeField& f) {
    if (mod_floor(p.psi_shift, f.q()) == 0) throw DomainError("psi-shift must be nonzero mod q");
    return AddChar(f, p.psi_shift);
}

GammaProfile profile_of(const Params& p) {
    if (!p.input.empty()) {
        std::ifstream in(p.input);
        if (!in) throw ParseError("cannot read " + p.input);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what());
        }
        return profile_from_json(j);
    }
    SscDatum d = datum_of(p);
    return profile(d, psi_of(p, d.field()));
}

[[noreturn]] void not_tabular(const std::string& verb) {
    throw DomainError("csv output is not available for " + verb);
}

struct Outcome {
    std::string body;
    int status = exit_ok;
};

template <class T>
std::string render(const T& value, Format fmt) {
    if (fmt == Format::json) return dump(to_json(value));
    if (fmt == Format::csv) return to_csv(value);
    std::string s = to_text(value);
    return s.empty() || s.back() != '\n' ? s + "\n" : s;
}

Outcome do_gamma(const Params& p, Format fmt) {
    SscDatum d = datum_of(p);
    TameChar mu = mu_of(p, d.field());
    RatFun g = gamma_factor(d, mu, psi_of(p, d.field()));
    if (fmt == Format::csv) not_tabular("gamma");
    if (p.local_factors) {
        LocalFactors lf = extract_l_eps(g, d, mu);
        return {fmt == Format::json ? dump(to_json(lf)) : to_text(lf)};
    }
    return {fmt == Format::json ? dump(to_json(g)) : to_text(g) + "\n"};
}

Outcome do_enumerate(const Params& p, Format fmt) {
    require_n(p.n);
    require_prime(p.q);
    PrimeField f(p.q);
    auto data = enumerate_ssc(p.n, omega_of(p, f));
    if (fmt == Format::csv) return {to_csv(data)};
    if (fmt == Format::text) {
        std::string s;
        for (const auto& d : data) s += to_text(d) + "\n";
        return {s};
    }
    Json arr = Json::array();
    for (const auto& d : data) arr.push_back(to_json(d));
    return {dump(arr)};
}

Outcome do_identify(const Params& p, Format fmt) {
    auto found = identify(profile_of(p));
    if (fmt == Format::csv) return {to_csv(found)};
    if (fmt == Format::text) {
        std::string s;
        for (const auto& d : found) s += to_text(d) + "\n";
        return {s};
    }
    Json arr = Json::array();
    for (const auto& d : found) arr.push_back(to_json(d));
    return {dump(arr)};
}

Outcome do_recover(const Params& p, Format fmt) {
    RecoveredParams r = recover_direct(profile_of(p));
    if (fmt == Format::csv) not_tabular("recover");
    return {fmt == Format::json ? dump(to_json(r)) : to_text(r) + "\n"};
}

Outcome do_verify_lemmas(const Params& p, Format fmt) {
    require_prime(p.q);
    if (p.m < 1) throw DomainError("m must be at least 1");
    std::vector<LemmaReport> reports{verify_cell_counts(p.m, p.q), verify_support_lemma(p.m, p.q)};
    Outcome o;
    Json arr = Json::array();
    for (const auto& r : reports) {
        if (!r.ok()) o.status = exit_verification;
        if (fmt == Format::json) arr.push_back(to_json(r));
        else o.body += fmt == Format::csv ? to_csv(r) : to_text(r);
    }
    if (fmt == Format::json) o.body = dump(arr);
    return o;
}

Outcome do_verify_derivation(const Params& p, Format fmt) {
    std::vector<int> ns = p.ns.empty() ? std::vector<int>{2, 3, 4, 5, 6, 7} : p.ns;
    std::vector<int> qs = p.qs.empty() ? std::vector<int>{2, 3, 5} : p.qs;
    for (int n : ns) require_n(n);
    for (int q : qs) require_prime(q);
    DerivationReport r = verify_derivation(ns, qs, p.psi_shift);
    if (fmt == Format::csv) not_tabular("verify-derivation");
    Outcome o;
    o.status = r.ok() ? exit_ok : exit_verification;
    if (fmt == Format::json) {
        Json j;
        j["n"] = ns;
        j["q"] = qs;
        j["cases_checked"] = r.cases_checked;
        j["mismatches"] = r.mismatches;
        o.body = dump(j);
    } else {
        o.body = "cases=" + std::to_string(r.cases_checked) + " mismatches=" + std::to_string(r.mismatches.size()) + "\n";
        for (const auto& m : r.mismatches) o.body += "  " + m + "\n";
    }
    return o;
}

Outcome do_report(const Params& p, Format fmt) {
    require_n(p.n);
    require_prime(p.q);
    PrimeField f(p.q);
    return {render(distinguishability_report(p.n, omega_of(p, f), psi_of(p, f)), fmt)};
}

void add_omega(CLI::App* app, Params& p) {
    app->add_option("--omega-exponent", p.omega_exponent, "exponent of the central character on units");
    app->add_option("--omega-pi-order", p.omega_pi_order, "order of the root of unity omega(pi)");
    app->add_option("--omega-pi-index", p.omega_pi_index, "omega(pi) = zeta_order^index");
}

void add_datum(CLI::App* app, Params& p) {
    app->add_option("--n", p.n, "rank")->required();
    app->add_option("--q", p.q, "residue field size (prime)")->required();
    add_omega(app, p);
    app->add_option("--t0", p.t0, "t0 in 1..q-1");
    app->add_option("--zeta-index", p.zeta_index, "index of zeta among the n-th roots ordered by angle");
    app->add_option("--psi-shift", p.psi_shift, "additive character psi_b(x) = zeta_q^(b x)");
}

void add_common(CLI::App* app, Params& p) {
    app->add_option("--format", p.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--output", p.output, "write the result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Params p;
    CLI::App app{"Exterior square gamma, L and epsilon factors of simple supercuspidals", "sscgamma"};
    app.require_subcommand(1);

    auto* gamma = app.add_subcommand("gamma", "gamma factor of one twisted class");
    add_datum(gamma, p);
    gamma->add_option("--mu-exponent", p.mu_exponent, "exponent of the twist on units");
    gamma->add_option("--mu-pi-order", p.mu_pi_order, "order of mu(pi)");
    gamma->add_option("--mu-pi-index", p.mu_pi_index, "mu(pi) = zeta_order^index");
    gamma->add_flag("--local-factors", p.local_factors, "also extract L, L_dual and epsilon");
    add_common(gamma, p);

    auto* enumerate = app.add_subcommand("enumerate", "all classes for (n, q, omega)");
    enumerate->add_option("--n", p.n, "rank")->required();
    enumerate->add_option("--q", p.q, "residue field size (prime)")->required();
    add_omega(enumerate, p);
    add_common(enumerate, p);

    auto* prof = app.add_subcommand("profile", "gamma factors over the tame twist family");
    add_datum(prof, p);
    add_common(prof, p);

    auto* ident = app.add_subcommand("identify", "classes sharing a profile");
    auto* recov = app.add_subcommand("recover", "t0 and zeta read directly off a profile");
    for (auto* sub : {ident, recov}) {
        sub->add_option("--input", p.input, "profile JSON file");
        sub->add_option("--n", p.n, "rank");
        sub->add_option("--q", p.q, "residue field size (prime)");
        add_omega(sub, p);
        sub->add_option("--t0", p.t0, "t0 in 1..q-1");
        sub->add_option("--zeta-index", p.zeta_index, "index of zeta among the n-th roots");
        sub->add_option("--psi-shift", p.psi_shift, "additive character shift");
        add_common(sub, p);
    }

    auto* lemmas = app.add_subcommand("verify-lemmas", "brute-force Bruhat cell and support checks");
    lemmas->add_option("--m", p.m, "matrix size")->required();
    lemmas->add_option("--q", p.q, "residue field size (prime)")->required();
    add_common(lemmas, p);

    auto* deriv = app.add_subcommand("verify-derivation", "integral oracle against the closed form");
    deriv->add_option("--n", p.ns, "ranks (default 2..7)");
    deriv->add_option("--q", p.qs, "primes (default 2 3 5)");
    deriv->add_option("--psi-shift", p.psi_shift, "additive character shift");
    add_common(deriv, p);

    auto* report = app.add_subcommand("report", "partition of classes by profile");
    report->add_option("--n", p.n, "rank")->required();
    report->add_option("--q", p.q, "residue field size (prime)")->required();
    add_omega(report, p);
    report->add_option("--psi-shift", p.psi_shift, "additive character shift");
    add_common(report, p);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << dump(diagnostic("validation", "usage", e.what()));
        return exit_validation;
    }

    Outcome o;
    try {
        Format fmt = parse_format(p.format);
        if (*gamma) o = do_gamma(p, fmt);
        else if (*enumerate) o = do_enumerate(p, fmt);
        else if (*prof) {
            GammaProfile gp = profile_of(p);
            o = {render(gp, fmt)};
        } else if (*ident) o = do_identify(p, fmt);
        else if (*recov) o = do_recover(p, fmt);
        else if (*lemmas) o = do_verify_lemmas(p, fmt);
        else if (*deriv) o = do_verify_derivation(p, fmt);
        else o = do_report(p, fmt);
    } catch (const Error& e) {
        bool caller_side = dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
                           dynamic_cast<const HypothesisViolated*>(&e) ||
                           dynamic_cast<const InconsistentProfile*>(&e) || dynamic_cast<const BudgetExceeded*>(&e);
        err << dump(diagnostic(caller_side ? "validation" : "internal", e.kind(), e.what()));
        return caller_side ? exit_validation : exit_internal;
    } catch (const std::exception& e) {
        err << dump(diagnostic("internal", "unexpected", e.what()));
        return exit_internal;
    }

    if (!p.output.empty()) {
        std::ofstream f(p.output, std::ios::binary);
        if (!f || !(f << o.body)) {
            err << dump(diagnostic("validation", "io", "cannot write " + p.output));
            return exit_validation;
        }
    } else {
        out << o.body;
    }
    if (o.status == exit_verification) err << dump(diagnostic("verification", "violations", "verification reported violations"));
    return o.status;
}

}  // namespace ssc
