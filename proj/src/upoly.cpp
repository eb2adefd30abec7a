#include "pbw/upoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbw {

UPoly up_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int up_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool up_is_zero(const UPoly& p) { return p.empty(); }

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return up_trim(std::move(r));
}

UPoly up_scale(UPoly a, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& c : a) c *= s;
    return a;
}

UPoly up_monic(UPoly a) {
    if (a.empty()) return a;
    const Rational inv = Rational(1) / a.back();
    return up_scale(std::move(a), inv);
}

void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::domain_error("up_divmod: division by zero polynomial");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational inv = Rational(1) / b.back();
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() * inv;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r = up_trim(std::move(r));
        if (r.empty()) break;
        if (r.size() > shift + b.size() - 1) throw std::logic_error("up_divmod: no progress");
    }
    q = up_trim(std::move(q));
}

bool up_divides(const UPoly& b, const UPoly& a) {
    UPoly q, r;
    up_divmod(a, b, q, r);
    return r.empty();
}

UPoly up_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly q, r;
        up_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(std::move(a));
}

UPoly up_derivative(const UPoly& p) {
    UPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<int>(i)));
    return up_trim(std::move(r));
}

Rational up_eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UPoly up_compose_shift(const UPoly& p, const Rational& a) {
    // Horner in (x + a).
    UPoly acc;
    const UPoly lin = {a, Rational(1)};
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = up_mul(acc, lin);
        acc = up_add(acc, UPoly{p[i]});
    }
    return acc;
}

std::string up_str(const UPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p[i];
        if (c.is_zero()) continue;
        const bool neg = c < 0;
        const Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (ac == 1);
        if (i == 0) {
            out += rat_str(ac);
        } else {
            if (!unit) out += rat_str(ac) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::pair<UPoly, int>> up_squarefree(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = up_monic(p);
    if (up_degree(f) < 1) return out;
    // Yun: a1 = f/gcd(f,f'), iterate.
    UPoly d = up_derivative(f);
    UPoly a = up_gcd(f, d);
    UPoly b, c, q, r;
    up_divmod(f, a, b, r);          // b = f / gcd
    up_divmod(d, a, c, r);          // c = f' / gcd
    c = up_sub(c, up_derivative(b));
    int mult = 1;
    while (up_degree(b) > 0) {
        UPoly g = up_gcd(b, c);
        if (up_degree(g) > 0) out.push_back({g, mult});
        up_divmod(b, g, q, r);
        b = q;
        up_divmod(c, g, q, r);
        c = up_sub(q, up_derivative(b));
        ++mult;
    }
    return out;
}

namespace {

// All positive divisors of |n|, by trial division; empty result if
// factorization gave out (cap guards pathological inputs).
std::vector<Integer> divisors_of(Integer n, bool& complete) {
    complete = true;
    if (n < 0) n = -n;
    if (n == 0) return {};
    std::map<Integer, int> fac;
    Integer d = 2;
    const Integer cap = 1000000;
    while (d * d <= n) {
        if (d > cap) {
            complete = false;
            return {};
        }
        while (n % d == 0) {
            ++fac[d];
            n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) ++fac[n];
    std::vector<Integer> divs = {Integer(1)};
    for (const auto& [prime, e] : fac) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Scales to integer coefficients with content 1.
std::vector<Integer> primitive_integer(const UPoly& p) {
    Integer lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, rat_den(c));
    std::vector<Integer> ip;
    ip.reserve(p.size());
    Integer content = 0;
    for (const auto& c : p) {
        Integer v = rat_num(c) * (lcm_den / rat_den(c));
        ip.push_back(v);
        content = gcd(content, v);
    }
    if (content > 1)
        for (auto& v : ip) v /= content;
    return ip;
}

}  // namespace

std::vector<Rational> up_rational_roots(const UPoly& p, bool& complete) {
    complete = true;
    std::vector<Rational> roots;
    UPoly f = up_trim(p);
    if (up_degree(f) < 1) return roots;
    while (!f.empty() && f.front().is_zero()) {
        // x | f
        if (roots.empty() || roots.front() != 0) roots.push_back(Rational(0));
        f.erase(f.begin());
        f = up_trim(std::move(f));
    }
    if (up_degree(f) >= 1) {
        auto ip = primitive_integer(f);
        bool c1 = true, c2 = true;
        auto ps = divisors_of(ip.front(), c1);
        auto qs = divisors_of(ip.back(), c2);
        complete = c1 && c2;
        for (const auto& pn : ps)
            for (const auto& qn : qs) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * pn, qn);
                    if (up_eval(f, cand).is_zero()) roots.push_back(cand);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// Splits a monic squarefree quartic with no rational roots into two rational
// quadratics if possible.
bool split_quartic(const UPoly& f, UPoly& f1, UPoly& f2) {
    // Depress: x = y - a3/4.
    const Rational a3 = f[3];
    const Rational t = -a3 / 4;
    UPoly g = up_compose_shift(f, t);  // y^4 + p y^2 + q y + r
    const Rational p = g[2], q = g[1], r = g[0];
    auto undepress = [&](const UPoly& h) { return up_compose_shift(h, -t); };
    if (q.is_zero()) {
        // (y^2 + u)(y^2 + w): u + w = p, u w = r.
        Rational s;
        if (rat_sqrt(p * p - 4 * r, s)) {
            const Rational u = (p - s) / 2, w = (p + s) / 2;
            f1 = undepress(UPoly{u, Rational(0), Rational(1)});
            f2 = undepress(UPoly{w, Rational(0), Rational(1)});
            return true;
        }
        // (y^2 + u y + v)(y^2 - u y + v): v^2 = r, u^2 = 2v - p.
        Rational v;
        if (rat_sqrt(r, v)) {
            for (const Rational& vv : {v, Rational(-v)}) {
                Rational u;
                if (rat_sqrt(2 * vv - p, u)) {
                    f1 = undepress(UPoly{vv, u, Rational(1)});
                    f2 = undepress(UPoly{vv, -u, Rational(1)});
                    return true;
                }
            }
        }
        return false;
    }
    // (y^2 + u y + v)(y^2 - u y + w) with u != 0:
    // z = u^2 satisfies z^3 + 2p z^2 + (p^2 - 4r) z - q^2 = 0.
    const UPoly resolvent = {-q * q, p * p - 4 * r, 2 * p, Rational(1)};
    bool complete = true;
    for (const Rational& z : up_rational_roots(resolvent, complete)) {
        if (z <= 0) continue;
        Rational u;
        if (!rat_sqrt(z, u)) continue;
        const Rational w = (p + z + q / u) / 2;
        const Rational v = (p + z - q / u) / 2;
        UPoly c1 = {v, u, Rational(1)}, c2 = {w, -u, Rational(1)};
        if (up_mul(c1, c2) == g) {
            f1 = undepress(c1);
            f2 = undepress(c2);
            return true;
        }
    }
    return false;
}

// Factors a monic squarefree polynomial; certification per the public contract.
void factor_squarefree(const UPoly& f, int mult, std::vector<UFactor>& out) {
    UPoly rem = f;
    bool complete = true;
    for (const Rational& root : up_rational_roots(rem, complete)) {
        UPoly lin = {-root, Rational(1)};
        UPoly q, r;
        up_divmod(rem, lin, q, r);  // squarefree: each root splits off exactly once
        rem = q;
        out.push_back({lin, mult, true});
    }
    const int d = up_degree(rem);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back({up_monic(rem), mult, true});
        return;
    }
    if (d == 2) {
        // The discriminant test is complete even when the divisor search was not.
        const Rational a = rem[2], b = rem[1], c = rem[0];
        Rational s;
        if (rat_sqrt(b * b - 4 * a * c, s)) {
            const Rational r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
            out.push_back({{-r1, Rational(1)}, mult, true});
            out.push_back({{-r2, Rational(1)}, mult, true});
        } else {
            out.push_back({rem, mult, true});
        }
        return;
    }
    if (d == 3) {
        out.push_back({rem, mult, complete});
        return;
    }
    if (d == 4) {
        UPoly f1, f2;
        if (split_quartic(rem, f1, f2)) {
            factor_squarefree(up_monic(f1), mult, out);
            factor_squarefree(up_monic(f2), mult, out);
        } else {
            out.push_back({rem, mult, complete});
        }
        return;
    }
    out.push_back({rem, mult, false});
}

}  // namespace

std::vector<UFactor> up_factor(const UPoly& p) {
    if (up_is_zero(p)) throw std::domain_error("up_factor: zero polynomial");
    std::vector<UFactor> out;
    for (const auto& [sq, mult] : up_squarefree(p)) factor_squarefree(sq, mult, out);
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        return a.poly < b.poly;
    });
    return out;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

UPoly cyclotomic(int n) {
    if (n < 1) throw std::domain_error("cyclotomic: n must be positive");
    static std::map<int, UPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    UPoly xn(static_cast<std::size_t>(n) + 1, Rational(0));
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    UPoly result = xn;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UPoly q, r;
        up_divmod(result, cyclotomic(d), q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic: non-exact division");
        result = q;
    }
    cache[n] = result;
    return result;
}

int root_of_unity_order(const UPoly& p) {
    const int d = up_degree(p);
    if (d < 1) return 0;
    const UPoly f = up_monic(p);
    if (d == 1) {
        const Rational root = -f[0];
        if (root == 1) return 1;
        if (root == -1) return 2;
        return 0;
    }
    // phi(n) = d forces n <= 2 d^2 + 2; scan the finite candidate set.
    for (long long n = 1; n <= 2LL * d * d + 2; ++n) {
        if (euler_phi(n) != d) continue;
        if (f == cyclotomic(static_cast<int>(n))) return static_cast<int>(n);
    }
    return 0;
}

}  // namespace pbw
