#include "projmet/field.hpp"

#include <algorithm>

namespace projmet {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Built-in irreducible moduli, constant term first.
std::vector<int> builtin_modulus(int p, int e) {
    if (p == 2 && e == 2) return {1, 1, 1};       // x^2+x+1
    if (p == 2 && e == 3) return {1, 1, 0, 1};    // x^3+x+1
    if (p == 3 && e == 2) return {1, 0, 1};       // x^2+1
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1}; // x^4+x+1
    if (p == 5 && e == 2) return {1, 1, 1};       // x^2+x+1
    if (p == 3 && e == 3) return {1, 2, 0, 1};    // x^3+2x+1
    return {};
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int pdeg(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of a mod b over F_p; b monic of positive degree.
Poly pmod(Poly a, const Poly& b, int p) {
    int db = pdeg(b);
    for (int da = pdeg(a); da >= db; da = pdeg(a)) {
        int c = a[da];
        for (int i = 0; i <= db; ++i) {
            a[da - db + i] = ((a[da - db + i] - (long long)c * b[i]) % p + p) % p;
        }
    }
    return a;
}

bool divides(const Poly& d, const Poly& f, int p) { return pdeg(pmod(f, d, p)) < 0; }

// Trial search for a monic factor of degree 1..e/2. Sound and complete for
// the checked range (e <= 4, p^e <= 4096).
bool is_irreducible_trial(const Poly& f, int p, int e) {
    for (int deg = 1; 2 * deg <= e; ++deg) {
        std::uint64_t count = pow_u64(p, deg);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly d(deg + 1, 0);
            std::uint64_t v = t;
            for (int i = 0; i < deg; ++i) { d[i] = (int)(v % p); v /= p; }
            d[deg] = 1;
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const FiniteField> FiniteField::make(int p, int e, std::vector<int> modulus) {
    if (!is_prime(p)) throw Error("not prime: p = " + std::to_string(p));
    if (e < 1) throw Error("exponent must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= (std::uint64_t)p;
        if (q > (std::uint64_t(1) << 16))
            throw Error("field too large: p^e exceeds 2^16");
    }

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->e_ = e;
    f->q_ = (int)q;

    if (e == 1) {
        if (!modulus.empty()) throw Error("modulus given for a prime field");
    } else {
        if (modulus.empty()) modulus = builtin_modulus(p, e);
        if (modulus.empty())
            throw Error("no built-in modulus for q = " + std::to_string(q) +
                        "; supply an irreducible degree-" + std::to_string(e) + " polynomial");
        if ((int)modulus.size() != e + 1) throw Error("modulus must have degree e");
        for (int& c : modulus) c = ((c % p) + p) % p;
        if (modulus[e] != 1) throw Error("modulus must be monic");
        if (e <= 4 && q <= 4096 && !is_irreducible_trial(modulus, p, e))
            throw Error("reducible modulus");
        f->modulus_ = std::move(modulus);
    }

    f->build_tables();
    return f;
}

void FiniteField::build_tables() {
    inv_.assign(q_, 0);
    if (e_ == 1) {
        for (int a = 1; a < q_; ++a) {
            // Fermat inverse
            int r = 1, b = a, k = q_ - 2;
            while (k) {
                if (k & 1) r = (int)((long long)r * b % q_);
                b = (int)((long long)b * b % q_);
                k >>= 1;
            }
            inv_[a] = r;
        }
        return;
    }

    // Polynomial product mod modulus, on packed encodings.
    auto decompose = [&](int v, int* d) {
        for (int i = 0; i < e_; ++i) { d[i] = v % p_; v /= p_; }
    };
    auto poly_mul = [&](int a, int b) -> int {
        int da[32], db[32];
        decompose(a, da);
        decompose(b, db);
        int prod[64] = {0};
        for (int i = 0; i < e_; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (int k = 2 * e_ - 2; k >= e_; --k) {
            int c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (int i = 0; i < e_; ++i)
                prod[k - e_ + i] = ((prod[k - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        int v = 0;
        for (int i = e_ - 1; i >= 0; --i) v = v * p_ + prod[i];
        return v;
    };

    // Find a multiplicative generator; if none of order q-1 exists the
    // modulus was reducible (units of F_p[x]/(f) then number fewer than q-1).
    log_.assign(q_, -1);
    antilog_.assign(q_ - 1, 0);
    int gen = -1;
    for (int cand = 2; cand < q_ && gen < 0; ++cand) {
        int x = cand, order = 1;
        while (x != 1) {
            x = poly_mul(x, cand);
            if (x == 0 || ++order > q_ - 1) throw Error("reducible modulus");
        }
        if (order == q_ - 1) gen = cand;
    }
    if (gen < 0) throw Error("reducible modulus");
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        antilog_[k] = x;
        log_[x] = k;
        x = poly_mul(x, gen);
    }
    for (int a = 1; a < q_; ++a)
        inv_[a] = antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    int v = 0, m = 1;
    for (int i = 0; i < e_; ++i) {
        v += ((a % p_ + b % p_) % p_) * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return v;
}

int FiniteField::neg(int a) const {
    if (e_ == 1) return (p_ - a) % p_;
    int v = 0, m = 1;
    for (int i = 0; i < e_; ++i) {
        v += ((p_ - a % p_) % p_) * m;
        a /= p_;
        m *= p_;
    }
    return v;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
    if (e_ == 1) return (int)((long long)a * b % p_);
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

int FiniteField::inv(int a) const {
    if (a == 0) throw Error("division by zero");
    return inv_[a];
}

int FiniteField::div(int a, int b) const { return mul(a, inv(b)); }

int FiniteField::pow(int a, std::uint64_t k) const {
    int r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

} // namespace projmet
