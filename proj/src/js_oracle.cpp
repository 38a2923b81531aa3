#include "sscgamma/js_oracle.hpp"

#include "sscgamma/error.hpp"
#include "sscgamma/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace ssc {

MatFq interleave_permutation(int m, int q) {
    std::vector<int> perm(2 * m);
    for (int j = 0; j < m; ++j) {
        perm[j] = 2 * j;
        perm[m + j] = 2 * j + 1;
    }
    return MatFq::permutation(perm, q);
}

MatFq shalika_assembly(const MatFq& g, const MatFq& x) {
    const int m = g.rows();
    const int q = g.q();
    MatFq block(2 * m, 2 * m, q);
    // [[I, X], [0, I]] * diag(g, g) = [[g, X g], [0, g]]
    MatFq xg = x * g;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            block.set(i, j, g(i, j));
            block.set(i, m + j, xg(i, j));
            block.set(m + i, m + j, g(i, j));
        }
    MatFq s = interleave_permutation(m, q);
    return s * block * s.transpose();
}

bool in_nilpotent_intersection(const MatFq& x, int l) {
    const int m = x.rows();
    MatFq w = block_antidiag(m, l, x.q());
    auto sigma = *w.as_permutation();
    std::vector<int> sigma_inv(m);
    for (int j = 0; j < m; ++j) sigma_inv[sigma[j]] = j;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (j >= i) {
                if (x(i, j) != 0) return false;
            } else if (sigma_inv[j] < sigma_inv[i] && x(i, j) != 0) {
                return false;
            }
        }
    return true;
}

namespace {

long binom2l(long k) { return k * (k - 1) / 2; }

std::string key_of(int l, const std::vector<int>& d) {
    std::string s = "l=" + std::to_string(l) + " d=(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::vector<int> diag_of(const MatFq& d) {
    std::vector<int> v(d.rows());
    for (int i = 0; i < d.rows(); ++i) v[i] = d(i, i);
    return v;
}

long double_coset_size(const MatFq& wd, const std::vector<MatFq>& unip) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(unip.size() * unip.size());
    for (const auto& a : unip) {
        MatFq left = a * wd;
        for (const auto& b : unip) seen.insert((left * b).encode());
    }
    return static_cast<long>(seen.size());
}

long conjugate_intersection_size(const std::vector<MatFq>& nil, const MatFq& w) {
    MatFq winv = w.transpose();
    long count = 0;
    for (const auto& x : nil)
        if ((winv * x * w).is_strictly_upper()) ++count;
    return count;
}

}  // namespace

LemmaReport verify_cell_counts(int m, int q) {
    if (m < 1) throw DomainError("m must be positive");
    if (!is_prime(q)) throw DomainError("q must be prime");
    LemmaReport rep;
    rep.lemma = "cell_counts";
    rep.m = m;
    rep.q = q;
    auto unip = enumerate_upper_unipotent(m, q);
    check_budget(static_cast<long>(unip.size() * unip.size()), "double coset enumeration");
    auto tori = enumerate_invertible_diagonal(m, q);
    auto nil = enumerate_lower_nilpotent(m, q);
    const mpz_class unip_size = static_cast<long>(unip.size());

    std::map<std::pair<uint64_t, uint64_t>, long> coset_sizes;
    for (int l = 1; l <= m; ++l) {
        MatFq w = block_antidiag(m, l, q);
        long c = binom2l(m) - binom2l(l) - binom2l(m - l);
        mpz_class expected = ipow(q, c);
        for (const auto& d : tori) {
            long actual = double_coset_size(w * d, unip);
            coset_sizes[{w.encode(), d.encode()}] = actual;
            CellCountEntry e{"double_coset", l, diag_of(d), expected * unip_size, actual};
            if (e.expected != e.actual)
                rep.violations.push_back("double coset " + key_of(l, e.d) + " expected " + e.expected.get_str() +
                                         " got " + e.actual.get_str());
            rep.entries.push_back(std::move(e));
            ++rep.cases_checked;
        }
        long by_conjugation = conjugate_intersection_size(nil, w);
        long by_pattern = 0;
        for (const auto& x : nil)
            if (in_nilpotent_intersection(x, l)) ++by_pattern;
        CellCountEntry e{"nilpotent_intersection", l, {}, expected, by_conjugation};
        if (e.expected != e.actual)
            rep.violations.push_back("nilpotent intersection l=" + std::to_string(l) + " expected " +
                                     e.expected.get_str() + " got " + e.actual.get_str());
        if (by_pattern != by_conjugation)
            rep.violations.push_back("nilpotent intersection l=" + std::to_string(l) +
                                     " entry pattern disagrees with conjugation");
        rep.entries.push_back(std::move(e));
        ++rep.cases_checked;
    }

    // Every element lands in exactly one cell; the cells of the w_l must match the
    // double cosets counted above and all cells together must exhaust GL_m.
    auto gl = enumerate_gl(m, q);
    std::map<std::pair<uint64_t, uint64_t>, long> buckets;
    for (const auto& g : gl) {
        auto b = bruhat_decompose(g);
        if (b.u1 * b.w * b.d * b.u2 != g || !b.u1.is_upper_unipotent() || !b.u2.is_upper_unipotent() ||
            !b.w.as_permutation() || !b.d.is_diagonal())
            rep.violations.push_back("invalid Bruhat decomposition of " + g.to_string());
        ++buckets[{b.w.encode(), b.d.encode()}];
        ++rep.cases_checked;
    }
    mpz_class total = 0;
    for (const auto& [key, size] : buckets) total += size;
    if (total != group_orders(m, q).gl || static_cast<long>(gl.size()) != total)
        rep.violations.push_back("cells do not partition GL_m");
    for (const auto& [key, size] : coset_sizes) {
        auto it = buckets.find(key);
        long found = it == buckets.end() ? 0 : it->second;
        if (found != size) rep.violations.push_back("cell size from decomposition disagrees with double coset");
    }
    return rep;
}

LemmaReport verify_support_lemma(int m, int q) {
    if (m < 1) throw DomainError("m must be positive");
    if (!is_prime(q)) throw DomainError("q must be prime");
    LemmaReport rep;
    rep.lemma = "support";
    rep.m = m;
    rep.q = q;
    auto gl = enumerate_gl(m, q);
    auto nil = enumerate_lower_nilpotent(m, q);
    check_budget(static_cast<long>(gl.size() * nil.size()), "support lemma pairs");
    const MatFq id_m = MatFq::identity(m, q);
    const MatFq id_2m = MatFq::identity(2 * m, q);
    std::vector<MatFq> small_w, big_w, big_w_inv, small_w_inv;
    for (int l = 1; l <= m; ++l) {
        small_w.push_back(block_antidiag(m, l, q));
        small_w_inv.push_back(small_w.back().transpose());
        big_w.push_back(block_antidiag(2 * m, 2 * l, q));
        big_w_inv.push_back(big_w.back().transpose());
    }
    long reported = 0;
    auto fail = [&](const std::string& what) {
        if (reported++ < 50) rep.violations.push_back(what);
        else if (reported == 51) rep.violations.push_back("further violations suppressed");
    };
    for (const auto& g : gl) {
        auto gb = bruhat_decompose(g);
        for (const auto& x : nil) {
            MatFq a = shalika_assembly(g, x);
            auto ab = bruhat_decompose(a);
            for (int l = 1; l <= m; ++l) {
                ++rep.cases_checked;
                const MatFq& wl = small_w[l - 1];
                bool g_in_coset = (small_w_inv[l - 1] * g).is_upper_unipotent();
                bool x_in_intersection = in_nilpotent_intersection(x, l);
                if (x_in_intersection != (small_w_inv[l - 1] * x * wl).is_strictly_upper())
                    fail("intersection descriptions disagree at l=" + std::to_string(l) + " X=" + x.to_string());
                bool in_cell = ab.w == big_w[l - 1] && ab.d == id_2m;
                std::string where = " l=" + std::to_string(l) + " g=" + g.to_string() + " X=" + x.to_string();
                if (in_cell) {
                    if (gb.w != wl || gb.d != id_m) fail("g outside N w_l N" + where);
                    if (g_in_coset && !x_in_intersection) fail("X outside the nilpotent intersection" + where);
                }
                if (g_in_coset && x_in_intersection) {
                    MatFq v = big_w_inv[l - 1] * a;
                    bool zero_super = true;
                    for (int i = 0; i + 1 < 2 * m; ++i)
                        if (v(i, i + 1) != 0) zero_super = false;
                    if (!v.is_upper_unipotent() || !zero_super) fail("residual factor has the wrong shape" + where);
                    if (!in_cell) fail("assembled element outside the expected cell" + where);
                }
            }
        }
    }
    return rep;
}

const EvenShellConstants& even_shell_constants(int m, int q) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<EvenShellConstants>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({m, q});
    if (it != cache.end()) return *it->second;

    auto c = std::make_unique<EvenShellConstants>();
    c->m = m;
    c->q = q;
    GroupOrders orders = group_orders(m, q);
    auto unip = enumerate_upper_unipotent(m, q);
    check_budget(static_cast<long>(unip.size() * unip.size()), "double coset enumeration");
    auto tori = enumerate_invertible_diagonal(m, q);
    auto nil = enumerate_lower_nilpotent(m, q);
    const mpq_class qq = q;
    for (int l = 1; l <= m; ++l) {
        MatFq w = block_antidiag(m, l, q);
        // sum over the torus of |N w d N| / |N|
        mpq_class coset_sum = 0;
        for (const auto& d : tori) coset_sum += mpq_class(double_coset_size(w * d, unip), static_cast<long>(unip.size()));
        // modulus character of diag(I_(m-l), pi I_l): pairs i <= m-l < j
        long modulus_exp = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (i <= m - l && j > m - l) ++modulus_exp;
        // lower entries rescaled by pi when conjugating X past the same diagonal
        long measure_exp = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j < i; ++j)
                if (i > m - l && j <= m - l) ++measure_exp;
        mpq_class nil_fraction(conjugate_intersection_size(nil, w), static_cast<long>(nil.size()));
        mpq_class value = coset_sum * nil_fraction;
        value /= mpq_class(ipow(q, modulus_exp + measure_exp));
        value /= static_cast<long>(tori.size());
        value /= mpq_class(orders.index);
        value.canonicalize();
        c->shell.push_back(value);
        c->det_w.push_back(w.det());
    }
    const EvenShellConstants& ref = *c;
    cache.emplace(std::make_pair(m, q), std::move(c));
    return ref;
}

JsPair js_even_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    if (!d.even()) throw DomainError("even oracle needs even n");
    const int q = d.q();
    const int m = d.m();
    const int conductor = twist_conductor(d, mu);
    const EvenShellConstants& consts = even_shell_constants(m, q);

    const CycloNumber zeta = d.zeta.embed(conductor);
    const CycloNumber omega_twisted = d.omega.at_twisted_uniformizer(d.t0, conductor);
    const CycloNumber mu_twisted = mu.at_twisted_uniformizer(d.t0, conductor);
    const mpq_class torus_inv(1, q - 1);

    // unit integrals of omega_0 mu_0^m, with and without psi(-u)
    CycloNumber unit_plain = CycloNumber::rational(0, conductor);
    CycloNumber unit_psi = CycloNumber::rational(0, conductor);
    for (int x = 1; x < q; ++x) {
        CycloNumber v = char_eval(d.omega.res, x, conductor) * char_eval(mu.res, x, conductor).pow(m);
        unit_plain += v;
        unit_psi += v * char_eval(psi, -x, conductor);
    }
    unit_plain = unit_plain * CycloNumber::rational(torus_inv, conductor);
    unit_psi = unit_psi * CycloNumber::rational(torus_inv, conductor);

    // lambda = pi'^j u, |lambda|^(ms) = Z^(jm)
    const RatFun shell_ratio = RatFun::monomial(omega_twisted * mu_twisted.pow(m), m);

    RatFun J;
    for (int l = 1; l <= m; ++l) {
        CycloNumber coeff = CycloNumber::rational(consts.shell[l - 1], conductor) * zeta.pow(2 * l) *
                            mu_twisted.pow(l) * char_eval(mu.res, consts.det_w[l - 1], conductor);
        RatFun series;
        if (l >= 2) {
            series = RatFun(unit_plain) * geometric_series_tail(shell_ratio, -1);
        } else {
            series = RatFun(unit_psi) * shell_ratio.inverse() + RatFun(unit_plain) * geometric_series_tail(shell_ratio, 0);
        }
        J += RatFun::monomial(coeff, l) * series;
    }

    // Only l = m survives, with lambda in pi'^-1 (1 + p): the shell factor Z^m q^m
    // cancels against |lambda|^(-ms) and the unit volume is q^(m/2) / (q - 1).
    CycloNumber tilde = CycloNumber::rational(consts.shell[m - 1], conductor) * zeta.pow(2 * m) * mu_twisted.pow(m) *
                        char_eval(mu.res, consts.det_w[m - 1], conductor) * omega_twisted.inverse() *
                        mu_twisted.pow(-m) * CycloNumber::q_half_power(q, m) *
                        CycloNumber::rational(torus_inv, conductor);
    RatFun J_tilde(tilde);
    return JsPair{J, J_tilde};
}

JsPair js_odd_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    if (d.even()) throw DomainError("odd oracle needs odd n");
    if (!(psi.field == d.field())) throw DomainError("additive character over a different field");
    const int q = d.q();
    const int m = d.m();
    const int conductor = twist_conductor(d, mu);
    GroupOrders orders = group_orders(m, q);
    const long row_count = static_cast<long>(ipow(q, m).get_si());
    const long nil_count = static_cast<long>(enumerate_lower_nilpotent(m, q).size());

    mpq_class base(1);
    base /= mpq_class(orders.index);
    base /= nil_count;
    // Z in M_(1 x m)(p) for J, M_(1 x m)(o) for the dual
    mpq_class j_const = base / row_count;
    j_const.canonicalize();
    base.canonicalize();
    RatFun J(CycloNumber::rational(j_const, conductor));

    const CycloNumber zeta = d.zeta.embed(conductor);
    const CycloNumber mu_twisted = mu.at_twisted_uniformizer(d.t0, conductor);
    CycloNumber coeff = CycloNumber::rational(base, conductor) * CycloNumber::q_half_power(q, -m) * zeta.pow(2 * m) *
                        mu_twisted.pow(m);
    RatFun J_tilde = RatFun::monomial(coeff, m);
    return JsPair{J, J_tilde};
}

JsPair js_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    return d.even() ? js_even_oracle(d, mu, psi) : js_odd_oracle(d, mu, psi);
}

std::vector<TameChar> grid_central_chars(const PrimeField& field) {
    std::vector<TameChar> out;
    std::vector<std::pair<int, int>> seen;
    for (int e : {0, 1})
        for (int pi_index : {0, 1}) {
            int exponent = static_cast<int>(mod_floor(e, field.q() - 1));
            if (std::find(seen.begin(), seen.end(), std::make_pair(exponent, pi_index)) != seen.end()) continue;
            seen.emplace_back(exponent, pi_index);
            out.push_back(make_tame_char(field, exponent, pi_index ? 4 : 1, pi_index));
        }
    return out;
}

DerivationReport verify_derivation(const std::vector<int>& ns, const std::vector<int>& qs, long psi_shift) {
    DerivationReport rep;
    for (int q : qs) {
        if (!is_prime(q)) throw DomainError("q must be prime");
        PrimeField f(q);
        AddChar psi(f, psi_shift);
        for (int n : ns) {
            if (n < 2) throw DomainError("n must be at least 2");
            for (const auto& omega : grid_central_chars(f))
                for (const auto& d : enumerate_ssc(n, omega))
                    for (int a = 0; a < q - 1; ++a) {
                        auto mu = make_tame_char(f, a);
                        ++rep.cases_checked;
                        if (js_oracle(d, mu, psi).ratio() != gamma_factor(d, mu, psi))
                            rep.mismatches.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                                     " omega_exp=" + std::to_string(omega.res.exponent) +
                                                     " omega_pi=" + omega.pi_value.to_string() +
                                                     " t0=" + std::to_string(d.t0) +
                                                     " zeta_index=" + std::to_string(d.zeta_index) +
                                                     " mu_exp=" + std::to_string(a));
                    }
        }
    }
    return rep;
}

}  // namespace ssc
