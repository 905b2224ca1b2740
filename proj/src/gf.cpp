#include "ccr/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccr {

namespace {

constexpr long long kTableCap = 1LL << 16;

long long mod_pow_ll(long long b, long long e, long long m) {
    long long acc = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

long long mod_inv_ll(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = a % m;
    while (a1 != 0) {
        long long qt = g / a1;
        g -= qt * a1;
        std::swap(g, a1);
        x -= qt * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("mod_inv: not invertible");
    return ((x % m) + m) % m;
}

// --- dense polynomials over Z_p, used only to bootstrap the field ---

using ZpPoly = std::vector<int>;  // constant term first, no trailing zeros

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    zp_trim(out);
    return out;
}

// remainder of a by monic b
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
    zp_trim(a);
    int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db) {
        int shift = (int)a.size() - 1 - db;
        int lead = a.back();
        for (int i = 0; i <= db; ++i) {
            a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p) % p;
        }
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool zp_divides(const ZpPoly& d, const ZpPoly& a, int p) {
    return zp_mod(a, d, p).empty();
}

// trial division; fine for the desk-scale degrees used here
bool zp_irreducible(const ZpPoly& f, int p) {
    int d = (int)f.size() - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        // all monic divisor candidates of degree dd
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            ZpPoly g(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) {
                g[i] = (int)(c % p);
                c /= p;
            }
            g[dd] = 1;
            if (zp_divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldElement FieldContext::zero() const { return FieldElement{std::vector<int>(r, 0)}; }

FieldElement FieldContext::one() const {
    FieldElement a = zero();
    a.c[0] = 1;
    return a;
}

FieldElement FieldContext::from_int(long long v) const {
    FieldElement a = zero();
    a.c[0] = (int)(((v % p) + p) % p);
    return a;
}

bool FieldContext::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](int x) { return x == 0; });
}

void FieldContext::check(const FieldElement& a) const {
    if ((int)a.c.size() != r)
        throw std::invalid_argument("field element does not belong to this field (wrong length)");
    for (int x : a.c)
        if (x < 0 || x >= p)
            throw std::invalid_argument("field element digit out of range for this field");
}

bool FieldContext::same_field(const FieldContext& o) const {
    return p == o.p && r == o.r && modulus == o.modulus;
}

long long FieldContext::encode(const FieldElement& a) const {
    check(a);
    long long code = 0, w = 1;
    for (int i = 0; i < r; ++i) {
        code += a.c[i] * w;
        w *= p;
    }
    return code;
}

FieldElement FieldContext::decode(long long code) const {
    if (code < 0 || code >= q) throw std::invalid_argument("field code out of range");
    FieldElement a = zero();
    for (int i = 0; i < r; ++i) {
        a.c[i] = (int)(code % p);
        code /= p;
    }
    return a;
}

int FieldContext::addc(int a, int b) const {
    if (r == 1) return (int)((a + b) % p);
    int out = 0, w = 1;
    for (int i = 0; i < r; ++i) {
        int da = a % p, db = b % p;
        a /= p;
        b /= p;
        out += ((da + db) % p) * w;
        w *= p;
    }
    return out;
}

int FieldContext::subc(int a, int b) const { return addc(a, negc(b)); }

int FieldContext::negc(int a) const {
    if (r == 1) return (int)((p - a) % p);
    int out = 0, w = 1;
    for (int i = 0; i < r; ++i) {
        int da = a % p;
        a /= p;
        out += ((p - da) % p) * w;
        w *= p;
    }
    return out;
}

int FieldContext::mulc(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_tab[(log_tab[a] + log_tab[b]) % (q - 1)];
}

int FieldContext::invc(int a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
}

int FieldContext::powc(int a, long long k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw std::domain_error("inversion of zero field element");
        return 0;
    }
    long long ord = q - 1;
    long long e = ((k % ord) + ord) % ord;
    return exp_tab[(long long)log_tab[a] * e % ord];
}

long long FieldContext::logc(int a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    return log_tab[a];
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = zero();
    for (int i = 0; i < r; ++i) out.c[i] = (a.c[i] + b.c[i]) % p;
    return out;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldContext::neg(const FieldElement& a) const {
    check(a);
    FieldElement out = zero();
    for (int i = 0; i < r; ++i) out.c[i] = (p - a.c[i]) % p;
    return out;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    return decode(mulc((int)encode(a), (int)encode(b)));
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    return decode(invc((int)encode(a)));
}

FieldElement FieldContext::pow(const FieldElement& a, long long k) const {
    return decode(powc((int)encode(a), k));
}

FieldContext make_field(int p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (r < 1 || r > 6) throw std::invalid_argument("make_field: r out of range [1,6]");
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kTableCap) throw std::invalid_argument("make_field: p^r exceeds table cap 2^16");
    }

    FieldContext F;
    F.p = p;
    F.r = r;
    F.q = q;

    if (r == 1) {
        F.modulus = {0, 1};  // "x", unused for arithmetic; stored by convention
    } else {
        // scan non-leading coefficient vectors in base-p integer order
        bool found = false;
        for (long long code = 0; code < q && !found; ++code) {
            ZpPoly f(r + 1, 0);
            long long c = code;
            for (int i = 0; i < r; ++i) {
                f[i] = (int)(c % p);
                c /= p;
            }
            f[r] = 1;
            if (zp_irreducible(f, p)) {
                F.modulus = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("make_field: no irreducible modulus found");
    }

    // raw multiply (digit vectors, mod modulus) used to bootstrap the tables
    auto raw_mul = [&](long long a, long long b) -> long long {
        if (r == 1) return a * b % p;
        std::vector<int> da(r), db(r);
        long long t = a;
        for (int i = 0; i < r; ++i) {
            da[i] = (int)(t % p);
            t /= p;
        }
        t = b;
        for (int i = 0; i < r; ++i) {
            db[i] = (int)(t % p);
            t /= p;
        }
        ZpPoly prod = zp_mul(da, db, p);
        prod = zp_mod(prod, F.modulus, p);
        long long code = 0, w = 1;
        for (size_t i = 0; i < prod.size(); ++i) {
            code += prod[i] * w;
            w *= p;
        }
        return code;
    };

    auto order_of = [&](long long g) -> long long {
        long long ord = 1, cur = g;
        while (cur != 1) {
            cur = raw_mul(cur, g);
            ++ord;
            if (ord > q) throw std::logic_error("order_of runaway");
        }
        return ord;
    };

    // minimal generator in encoding order
    long long gen = -1;
    for (long long cand = 1; cand < q; ++cand) {
        if (order_of(cand) == q - 1) {
            gen = cand;
            break;
        }
    }
    if (gen < 0) throw std::logic_error("make_field: no primitive element");

    F.exp_tab.assign(q - 1, 0);
    F.log_tab.assign(q, 0);
    long long cur = 1;
    for (long long k = 0; k < q - 1; ++k) {
        F.exp_tab[k] = (int32_t)cur;
        F.log_tab[cur] = (int32_t)k;
        cur = raw_mul(cur, gen);
    }
    F.primitive_ = F.decode(gen);
    return F;
}

FieldElement primitive_element(const FieldContext& F) { return F.primitive(); }

std::optional<FieldElement> nth_root(const FieldContext& F, const FieldElement& lambda,
                                     long long n) {
    if (F.is_zero(lambda)) throw std::domain_error("nth_root: lambda must be nonzero");
    if (n <= 0) throw std::invalid_argument("nth_root: n must be positive");
    long long ord = F.q - 1;
    if (ord == 1) return F.one();  // F_2
    long long L = F.logc((int)F.encode(lambda));
    long long nr = n % ord;
    long long g = std::gcd(nr == 0 ? ord : nr, ord);
    if (L % g != 0) return std::nullopt;
    // solve nr * j = L (mod ord); all solutions j0 + k*(ord/g)
    long long j0;
    if (nr == 0) {
        j0 = 0;  // L == 0 here since g == ord
    } else {
        long long ord_g = ord / g;
        j0 = (L / g) % ord_g * mod_inv_ll((nr / g) % ord_g, ord_g) % ord_g;
    }
    long long best = -1;
    for (long long k = 0; k < g; ++k) {
        long long j = (j0 + k * (ord / g)) % ord;
        long long root = F.exp_tab[j];
        if (best < 0 || root < best) best = root;
    }
    return F.decode(best);
}

bool minus_one_is_square(const FieldContext& F) {
    return nth_root(F, F.neg(F.one()), 2).has_value();
}

FieldElement ps_root(const FieldContext& F, const FieldElement& lambda, int s) {
    if (F.is_zero(lambda)) throw std::domain_error("ps_root: lambda must be nonzero");
    if (s < 0) throw std::invalid_argument("ps_root: s must be >= 0");
    if (F.q == 2 || s == 0) return lambda;
    long long ord = F.q - 1;
    long long ps = mod_pow_ll(F.p % ord, s, ord);
    long long t = mod_inv_ll(ps, ord);  // gcd(p, q-1) = 1
    return F.pow(lambda, t);
}

std::string field_elem_to_text(const FieldContext& F, const FieldElement& a) {
    F.check(a);
    std::string out;
    for (int i = 0; i < F.r; ++i) {
        if (i) out.push_back(',');
        out += std::to_string(a.c[i]);
    }
    return out;
}

FieldElement field_elem_from_text(const FieldContext& F, const std::string& s) {
    FieldElement a = F.zero();
    size_t pos = 0;
    int i = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw std::invalid_argument("bad field element text: " + s);
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad field element text: " + s);
        if (i >= F.r) throw std::invalid_argument("too many digits in field element: " + s);
        if (v < 0 || v >= F.p) throw std::invalid_argument("field digit out of range: " + tok);
        a.c[i++] = (int)v;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (i != F.r) throw std::invalid_argument("too few digits in field element: " + s);
    return a;
}

std::string field_to_text(const FieldContext& F) {
    return std::to_string(F.p) + "^" + std::to_string(F.r);
}

}  // namespace ccr
