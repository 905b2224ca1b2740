#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccr/polyring.hpp"

namespace ccr {

namespace {

using boost::multiprecision::cpp_int;

// Code-level dense polynomials over F_q (entries are canonical element
// codes).  This is the hot path for splitting-field arithmetic; the
// public FieldPoly representation is only used at the boundary.
using CPoly = std::vector<int>;

void cp_trim(CPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

CPoly cp_mul(const FieldContext& F, const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = F.addc(out[i + j], F.mulc(a[i], b[j]));
        }
    }
    cp_trim(out);
    return out;
}

// remainder of a modulo monic h
CPoly cp_mod(const FieldContext& F, CPoly a, const CPoly& h) {
    int dh = (int)h.size() - 1;
    cp_trim(a);
    while ((int)a.size() - 1 >= dh) {
        int shift = (int)a.size() - 1 - dh;
        int lead = a.back();
        for (int i = 0; i <= dh; ++i)
            a[i + shift] = F.subc(a[i + shift], F.mulc(lead, h[i]));
        cp_trim(a);
    }
    return a;
}

CPoly cp_gcd(const FieldContext& F, CPoly a, CPoly b) {
    cp_trim(a);
    cp_trim(b);
    while (!b.empty()) {
        CPoly r = cp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int s = F.invc(a.back());
        for (auto& x : a) x = F.mulc(x, s);
    }
    return a;
}

CPoly cp_mulmod(const FieldContext& F, const CPoly& a, const CPoly& b, const CPoly& h) {
    return cp_mod(F, cp_mul(F, a, b), h);
}

CPoly cp_powmod(const FieldContext& F, CPoly base, long long k, const CPoly& h) {
    CPoly acc{1};
    base = cp_mod(F, std::move(base), h);
    while (k > 0) {
        if (k & 1) acc = cp_mulmod(F, acc, base, h);
        k >>= 1;
        if (k) base = cp_mulmod(F, base, base, h);
    }
    return acc;
}

CPoly cp_powmod_big(const FieldContext& F, CPoly base, cpp_int k, const CPoly& h) {
    CPoly acc{1};
    base = cp_mod(F, std::move(base), h);
    while (k > 0) {
        if ((k & 1) != 0) acc = cp_mulmod(F, acc, base, h);
        k >>= 1;
        if (k > 0) base = cp_mulmod(F, base, base, h);
    }
    return acc;
}

// f irreducible over F_q iff x^{q^D} = x mod f and no earlier Frobenius
// power fixes a nontrivial gcd; rejecting at the first gcd hit discards
// most composite candidates after one or two steps.
bool cp_irreducible(const FieldContext& F, const CPoly& h) {
    int D = (int)h.size() - 1;
    if (D <= 0) return false;
    if (D == 1) return true;
    CPoly x{0, 1};
    CPoly y = x;
    for (int k = 1; k <= D; ++k) {
        y = cp_powmod(F, y, F.q, h);
        if (k < D) {
            CPoly diff = y;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = F.subc(diff[1], 1);
            cp_trim(diff);
            CPoly g = cp_gcd(F, h, diff);
            if (!(g.size() == 1 && g[0] == 1)) return false;
        } else {
            return y == x;
        }
    }
    return false;
}

// First monic irreducible of degree D over F_q, scanning non-leading
// coefficient vectors in canonical encoding order.  Cached per field.
CPoly irreducible_of_degree(const FieldContext& F, int D) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>, int>, CPoly> cache;
    auto key = std::make_tuple(F.p, F.r, F.modulus, D);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CPoly h(D + 1, 0);
    h[D] = 1;
    for (unsigned long long code = 0;; ++code) {
        unsigned long long c = code;
        for (int i = 0; i < D; ++i) {
            h[i] = (int)(c % (unsigned long long)F.q);
            c /= (unsigned long long)F.q;
        }
        if (c != 0) throw std::logic_error("irreducible_of_degree: scan exhausted");
        if (cp_irreducible(F, h)) break;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, h);
    return h;
}

std::vector<long long> prime_factors_ll(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

long long mult_order_mod(long long a, long long mod) {
    long long ord = 1, cur = a % mod;
    while (cur != 1) {
        cur = cur * (a % mod) % mod;
        ++ord;
        if (ord > mod) throw std::logic_error("mult_order_mod: not invertible");
    }
    return ord;
}

FieldPoly cp_to_fp(const FieldContext& F, const CPoly& a) {
    FieldPoly out;
    out.c.reserve(a.size());
    for (int code : a) out.c.push_back(F.decode(code));
    return fp_normalize(F, out);
}

CPoly e_add(const FieldContext& F, const CPoly& a, const CPoly& b) {
    CPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = F.addc(out[i], b[i]);
    cp_trim(out);
    return out;
}

CPoly e_neg(const FieldContext& F, CPoly a) {
    for (auto& x : a) x = F.negc(x);
    return a;
}

}  // namespace

Factorization factor_binomial(const FieldContext& F, long long m, const FieldElement& lambda0) {
    if (m <= 0) throw std::invalid_argument("factor_binomial: m must be positive");
    if (m % F.p == 0)
        throw std::invalid_argument("factor_binomial: requires gcd(m, p) = 1");
    if (F.is_zero(lambda0)) throw std::domain_error("factor_binomial: lambda0 must be nonzero");
    if (m > 4096) throw std::domain_error("factor_binomial: m exceeds desk-scale bound");

    Factorization out;
    out.lambda0 = lambda0;
    out.m = m;

    int lam_code = (int)F.encode(lambda0);
    long long ordF = F.q - 1;
    long long w = ordF == 0 ? 1 : ordF / std::gcd(ordF, F.logc(lam_code));  // gcd(x,0) = x
    long long M = m * w;
    if (M > 200000) throw std::domain_error("factor_binomial: splitting order exceeds desk scale");

    long long D = M == 1 ? 1 : mult_order_mod(F.q % M, M);

    std::vector<CPoly> factors_c;  // each as code-poly over F_q

    if (D == 1) {
        // all roots already live in F_q
        for (long long x = 1; x < F.q; ++x) {
            if (F.powc((int)x, m) == lam_code) {
                factors_c.push_back(CPoly{F.negc((int)x), 1});
            }
        }
        if ((long long)factors_c.size() != m)
            throw std::logic_error("factor_binomial: expected m roots in the base field");
    } else {
        if (D > 512) throw std::domain_error("factor_binomial: splitting degree exceeds desk scale");
        CPoly H = irreducible_of_degree(F, D);

        // element of multiplicative order exactly M in F_{q^D}
        cpp_int big_ord = 1;
        for (long long i = 0; i < D; ++i) big_ord *= F.q;
        big_ord -= 1;
        cpp_int exp = big_ord / M;
        auto primes_M = prime_factors_ll(M);
        CPoly delta;
        for (long long cand = 1;; ++cand) {
            if (cand >= (long long)1 << 40) throw std::logic_error("factor_binomial: delta scan failed");
            // decode cand into a polynomial over F_q
            CPoly eps;
            long long c = cand;
            while (c > 0) {
                eps.push_back((int)(c % F.q));
                c /= F.q;
            }
            if ((int)eps.size() > D) throw std::logic_error("factor_binomial: delta scan exhausted");
            CPoly eta = cp_powmod_big(F, eps, exp, H);
            if (eta.empty()) continue;
            bool ok = cp_powmod(F, eta, M, H) == CPoly{1};
            for (long long ell : primes_M) {
                if (!ok) break;
                if (cp_powmod(F, eta, M / ell, H) == CPoly{1}) ok = false;
            }
            if (ok) {
                delta = eta;
                break;
            }
        }

        // root exponents: t with (delta^m)^t = lambda0
        std::vector<CPoly> delta_pow(M);
        delta_pow[0] = CPoly{1};
        for (long long t = 1; t < M; ++t) delta_pow[t] = cp_mulmod(F, delta_pow[t - 1], delta, H);
        CPoly gamma = cp_powmod(F, delta, m, H);
        CPoly lam_hat = lam_code == 0 ? CPoly{} : CPoly{lam_code};
        std::vector<long long> root_exps;
        CPoly cur{1};
        for (long long t = 0; t < M; ++t) {
            if (cur == lam_hat) root_exps.push_back(t);
            cur = cp_mulmod(F, cur, gamma, H);
        }
        if ((long long)root_exps.size() != m)
            throw std::logic_error("factor_binomial: root count mismatch in splitting field");

        // Frobenius orbits t -> t q mod M, one irreducible factor per orbit
        std::vector<bool> in_set(M, false), seen(M, false);
        for (long long t : root_exps) in_set[t] = true;
        for (long long t : root_exps) {
            if (seen[t]) continue;
            std::vector<long long> orbit;
            long long cur_t = t;
            while (!seen[cur_t]) {
                seen[cur_t] = true;
                if (!in_set[cur_t])
                    throw std::logic_error("factor_binomial: orbit left the root set");
                orbit.push_back(cur_t);
                cur_t = cur_t * (F.q % M) % M;
            }
            // expand prod (x - delta^t) over the extension
            std::vector<CPoly> coeffs{CPoly{1}};  // poly in x with E coefficients
            for (long long tt : orbit) {
                std::vector<CPoly> next(coeffs.size() + 1);
                CPoly neg_root = e_neg(F, delta_pow[tt]);
                for (size_t i = 0; i < coeffs.size(); ++i) {
                    next[i + 1] = e_add(F, next[i + 1], coeffs[i]);
                    next[i] = e_add(F, next[i], cp_mulmod(F, coeffs[i], neg_root, H));
                }
                coeffs = std::move(next);
            }
            CPoly f;
            f.reserve(coeffs.size());
            for (const auto& cc : coeffs) {
                if (cc.size() > 1)
                    throw std::logic_error("factor_binomial: orbit factor not over the base field");
                f.push_back(cc.empty() ? 0 : cc[0]);
            }
            cp_trim(f);
            factors_c.push_back(std::move(f));
        }
    }

    for (const auto& f : factors_c) out.factors.push_back(cp_to_fp(F, f));
    std::sort(out.factors.begin(), out.factors.end(),
              [&](const FieldPoly& a, const FieldPoly& b) { return fp_less(F, a, b); });
    out.l = (int)out.factors.size();

    // soundness: the product must reproduce the input exactly
    FieldPoly prod = fp_one(F);
    for (const auto& f : out.factors) prod = fp_mul(F, prod, f);
    if (prod != fp_binomial(F, m, lambda0))
        throw std::logic_error("factor_binomial: product check failed");
    for (size_t i = 0; i + 1 < out.factors.size(); ++i)
        if (out.factors[i] == out.factors[i + 1])
            throw std::logic_error("factor_binomial: repeated factor (input not squarefree?)");
    return out;
}

}  // namespace ccr
