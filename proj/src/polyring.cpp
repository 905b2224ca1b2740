#include "ccr/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccr {

FieldPoly fp_normalize(const FieldContext& F, FieldPoly a) {
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
    return a;
}

FieldPoly fp_from_coeffs(const FieldContext& F, std::vector<FieldElement> cs) {
    for (const auto& x : cs) F.check(x);
    return fp_normalize(F, FieldPoly{std::move(cs)});
}

FieldPoly fp_zero() { return {}; }

FieldPoly fp_one(const FieldContext& F) { return FieldPoly{{F.one()}}; }

FieldPoly fp_x(const FieldContext& F) { return FieldPoly{{F.zero(), F.one()}}; }

FieldPoly fp_binomial(const FieldContext& F, long long n, const FieldElement& lambda) {
    if (n <= 0) throw std::invalid_argument("fp_binomial: n must be positive");
    FieldPoly out;
    out.c.assign(n + 1, F.zero());
    out.c[0] = F.neg(lambda);
    out.c[n] = F.one();
    return fp_normalize(F, out);
}

FieldPoly fp_add(const FieldContext& F, const FieldPoly& a, const FieldPoly& b) {
    FieldPoly out;
    size_t n = std::max(a.c.size(), b.c.size());
    out.c.assign(n, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = F.add(out.c[i], b.c[i]);
    return fp_normalize(F, out);
}

FieldPoly fp_neg(const FieldContext& F, const FieldPoly& a) {
    FieldPoly out = a;
    for (auto& x : out.c) x = F.neg(x);
    return out;
}

FieldPoly fp_sub(const FieldContext& F, const FieldPoly& a, const FieldPoly& b) {
    return fp_add(F, a, fp_neg(F, b));
}

FieldPoly fp_mul(const FieldContext& F, const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FieldPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        int ai = (int)F.encode(a.c[i]);
        if (ai == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            int bj = (int)F.encode(b.c[j]);
            if (bj == 0) continue;
            out.c[i + j] = F.decode(F.addc((int)F.encode(out.c[i + j]), F.mulc(ai, bj)));
        }
    }
    return fp_normalize(F, out);
}

FieldPoly fp_scale(const FieldContext& F, const FieldElement& s, const FieldPoly& a) {
    FieldPoly out = a;
    for (auto& x : out.c) x = F.mul(s, x);
    return fp_normalize(F, out);
}

std::pair<FieldPoly, FieldPoly> fp_divmod(const FieldContext& F, const FieldPoly& a,
                                          const FieldPoly& b) {
    if (b.is_zero()) throw std::domain_error("fp_divmod: division by zero polynomial");
    FieldPoly rem = a;
    if (a.deg() < b.deg()) return {fp_zero(), rem};
    FieldPoly quo;
    quo.c.assign(a.deg() - b.deg() + 1, F.zero());
    FieldElement lead_inv = F.inv(b.c.back());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int shift = rem.deg() - b.deg();
        FieldElement f = F.mul(rem.c.back(), lead_inv);
        quo.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[i + shift] = F.sub(rem.c[i + shift], F.mul(f, b.c[i]));
        rem = fp_normalize(F, rem);
    }
    return {fp_normalize(F, quo), rem};
}

FieldPoly fp_mod(const FieldContext& F, const FieldPoly& a, const FieldPoly& b) {
    return fp_divmod(F, a, b).second;
}

bool fp_divides(const FieldContext& F, const FieldPoly& d, const FieldPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return fp_mod(F, a, d).is_zero();
}

FieldPoly fp_monic(const FieldContext& F, const FieldPoly& a) {
    if (a.is_zero()) return a;
    return fp_scale(F, F.inv(a.c.back()), a);
}

FieldPoly fp_gcd(const FieldContext& F, FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        FieldPoly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

FieldPoly fp_pow(const FieldContext& F, const FieldPoly& a, long long k) {
    if (k < 0) throw std::invalid_argument("fp_pow: negative exponent");
    FieldPoly acc = fp_one(F);
    FieldPoly base = a;
    while (k > 0) {
        if (k & 1) acc = fp_mul(F, acc, base);
        k >>= 1;
        if (k) base = fp_mul(F, base, base);
    }
    return acc;
}

FieldElement fp_eval(const FieldContext& F, const FieldPoly& a, const FieldElement& x) {
    FieldElement acc = F.zero();
    for (int i = a.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

bool fp_less(const FieldContext& F, const FieldPoly& a, const FieldPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        long long ea = F.encode(a.c[i]), eb = F.encode(b.c[i]);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::string fp_to_text(const FieldContext& F, const FieldPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) out.push_back('|');
        out += field_elem_to_text(F, a.c[i]);
    }
    return out;
}

FieldPoly reciprocal(const FieldContext& F, const FieldPoly& f) {
    if (f.is_zero() || F.is_zero(f.c[0]))
        throw std::domain_error("reciprocal: constant term must be nonzero");
    FieldPoly out = f;
    std::reverse(out.c.begin(), out.c.end());
    return out;  // constant term of f is the new leading coefficient, nonzero
}

bool is_self_reciprocal(const FieldContext& F, const FieldPoly& f) {
    return fp_monic(F, reciprocal(F, f)) == fp_monic(F, f);
}

ReciprocalSplit split_reciprocal(const FieldContext& F, const Factorization& fac) {
    ReciprocalSplit out;
    std::vector<bool> used(fac.factors.size(), false);
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        if (used[i]) continue;
        const FieldPoly& f = fac.factors[i];
        if (f.is_zero() || F.is_zero(f.c[0]))
            throw std::logic_error("split_reciprocal: factor with zero constant term");
        FieldPoly star = fp_monic(F, reciprocal(F, f));
        if (star == f) {
            out.selfrec.push_back(f);
            used[i] = true;
            continue;
        }
        bool paired = false;
        for (size_t j = i + 1; j < fac.factors.size(); ++j) {
            if (!used[j] && fac.factors[j] == star) {
                const FieldPoly& h = fp_less(F, f, fac.factors[j]) ? f : fac.factors[j];
                const FieldPoly& hstar = fp_less(F, f, fac.factors[j]) ? fac.factors[j] : f;
                out.pairs.emplace_back(h, hstar);
                used[i] = used[j] = true;
                paired = true;
                break;
            }
        }
        if (!paired)
            throw std::logic_error("split_reciprocal: reciprocal partner missing from factor list");
    }
    out.k = (int)out.selfrec.size();
    out.t = (int)out.pairs.size();
    return out;
}

RepeatedFactorization repeated_factorization(const FieldContext& F, long long m, int s,
                                             const FieldElement& lambda1) {
    if (s < 0) throw std::invalid_argument("repeated_factorization: s must be >= 0");
    FieldElement lambda0 = ps_root(F, lambda1, s);
    RepeatedFactorization out;
    out.base = factor_binomial(F, m, lambda0);
    out.multiplicity = 1;
    for (int i = 0; i < s; ++i) out.multiplicity *= F.p;
    out.lambda1 = lambda1;
    long long n = m * out.multiplicity;
    if (n <= 4096) {
        // (x^m - lambda0)^{p^s} = x^n - lambda1, verified by expansion
        FieldPoly lhs = fp_pow(F, fp_binomial(F, m, lambda0), out.multiplicity);
        if (lhs != fp_binomial(F, n, lambda1))
            throw std::logic_error("repeated_factorization: expansion identity failed");
    }
    return out;
}

long long cyclotomic_class_count(long long q, long long m) {
    if (m <= 0) throw std::invalid_argument("cyclotomic_class_count: m must be positive");
    std::vector<bool> seen(m, false);
    long long count = 0;
    for (long long t = 0; t < m; ++t) {
        if (seen[t]) continue;
        ++count;
        long long cur = t;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = cur * (q % m) % m;
        }
    }
    return count;
}

// --- ring polynomials ---

RingPoly rp_normalize(const RingContext& R, RingPoly a) {
    while (!a.c.empty() && R.is_zero(a.c.back())) a.c.pop_back();
    return a;
}

RingPoly rp_zero() { return {}; }

RingPoly rp_one(const RingContext& R) { return RingPoly{{R.one()}}; }

RingPoly rp_add(const RingContext& R, const RingPoly& a, const RingPoly& b) {
    RingPoly out;
    size_t n = std::max(a.c.size(), b.c.size());
    out.c.assign(n, R.zero());
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = R.add(out.c[i], b.c[i]);
    return rp_normalize(R, out);
}

RingPoly rp_sub(const RingContext& R, const RingPoly& a, const RingPoly& b) {
    RingPoly nb = b;
    for (auto& x : nb.c) x = R.neg(x);
    return rp_add(R, a, nb);
}

RingPoly rp_mul(const RingContext& R, const RingPoly& a, const RingPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RingPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, R.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = R.add(out.c[i + j], R.mul(a.c[i], b.c[j]));
    return rp_normalize(R, out);
}

RingPoly rp_scale(const RingContext& R, const RingElement& s, const RingPoly& a) {
    RingPoly out = a;
    for (auto& x : out.c) x = R.mul(s, x);
    return rp_normalize(R, out);
}

RingPoly rp_mod_binomial(const RingContext& R, RingPoly a, long long n,
                         const RingElement& lambda) {
    while (a.deg() >= n) {
        int d = a.deg();
        RingElement top = a.c[d];
        a.c.pop_back();
        a.c[d - n] = R.add(a.c[d - n], R.mul(lambda, top));
        a = rp_normalize(R, a);
    }
    return a;
}

RingPoly rp_pow_mod_binomial(const RingContext& R, const RingPoly& a, long long k, long long n,
                             const RingElement& lambda) {
    if (k < 0) throw std::invalid_argument("rp_pow_mod_binomial: negative exponent");
    RingPoly acc = rp_one(R);
    RingPoly base = rp_mod_binomial(R, a, n, lambda);
    while (k > 0) {
        if (k & 1) acc = rp_mod_binomial(R, rp_mul(R, acc, base), n, lambda);
        k >>= 1;
        if (k) base = rp_mod_binomial(R, rp_mul(R, base, base), n, lambda);
    }
    return acc;
}

RingPoly rp_lift(const RingContext& R, const FieldPoly& f) {
    RingPoly out;
    out.c.reserve(f.c.size());
    for (const auto& x : f.c) out.c.push_back(R.from_field(x));
    return rp_normalize(R, out);
}

std::string rp_to_text(const RingContext& R, const RingPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) out.push_back('|');
        out += ring_elem_to_text(R, a.c[i]);
    }
    return out;
}

NilpotencyWitness nilpotency_witness(const RingContext& R, long long m, int s,
                                     const RingElement& lambda) {
    R.check(lambda);
    if (!R.is_unit(lambda)) throw std::domain_error("nilpotency_witness: lambda must be a unit");
    if (R.e < 2 || R.field.is_zero(lambda.v[1]))
        throw std::domain_error(
            "nilpotency_witness: hypothesis violated, u^1 part of lambda is zero");
    if (m <= 0 || s < 0) throw std::invalid_argument("nilpotency_witness: bad m or s");

    FieldElement alpha1 = lambda.v[0];
    FieldElement alpha0 = ps_root(R.field, alpha1, s);
    long long ps = 1;
    for (int i = 0; i < s; ++i) ps *= R.field.p;
    long long n = m * ps;

    // g = alpha0^{-1} x^m - 1
    RingPoly g;
    g.c.assign(m + 1, R.zero());
    g.c[0] = R.neg(R.one());
    g.c[m] = R.from_field(R.field.inv(alpha0));

    RingPoly pw = rp_pow_mod_binomial(R, g, ps, n, lambda);
    if (pw.deg() > 0)
        throw std::domain_error("nilpotency_witness: (a0^-1 x^m - 1)^{p^s} is not constant");
    RingElement cst = pw.is_zero() ? R.zero() : pw.c[0];
    if (!R.field.is_zero(cst.v[0]))
        throw std::domain_error("nilpotency_witness: constant is not a multiple of u");
    RingElement rho = R.zero();
    for (int i = 1; i < R.e; ++i) rho.v[i - 1] = cst.v[i];
    if (!R.is_unit(rho)) throw std::domain_error("nilpotency_witness: rho is not a unit");
    return NilpotencyWitness{rho, (long long)R.e * ps};
}

}  // namespace ccr
