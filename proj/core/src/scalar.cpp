#include "hova/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hova {

namespace {

// Dense polynomial helpers over Q, constant term first.
using Poly = std::vector<Rational>;

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Division with remainder; divisor must be nonzero.
void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    int dd = degree(den);
    if (dd < 0) throw ScalarError("polynomial division by zero");
    rem = num;
    trim(rem);
    int dn = degree(rem);
    quot.assign(dn >= dd ? static_cast<size_t>(dn - dd + 1) : 1, Rational(0));
    const Rational& lead = den[static_cast<size_t>(dd)];
    while ((dn = degree(rem)) >= dd) {
        Rational c = rem[static_cast<size_t>(dn)] / lead;
        quot[static_cast<size_t>(dn - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(dn - dd + i)] -= c * den[static_cast<size_t>(i)];
    }
    trim(quot);
    trim(rem);
}

// Extended Euclid: returns g = gcd(a, b) monic, with u*a + v*b = g.
Poly poly_xgcd(Poly a, Poly b, Poly& u, Poly& v) {
    Poly u0 = {Rational(1)}, v0 = {};
    Poly u1 = {}, v1 = {Rational(1)};
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        Poly nu = u0, nv = v0;
        nu.resize(std::max(nu.size(), qu.size()), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        nv.resize(std::max(nv.size(), qv.size()), Rational(0));
        for (size_t i = 0; i < qv.size(); ++i) nv[i] -= qv[i];
        a = b;
        b = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    int d = degree(a);
    if (d >= 0 && a[static_cast<size_t>(d)] != 1) {
        Rational lead = a[static_cast<size_t>(d)];
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    u = u0;
    v = v0;
    trim(a);
    return a;
}

std::vector<long> divisors(long m) {
    std::vector<long> out;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<long, Poly>& cyclotomic_cache() {
    static std::map<long, Poly> cache;
    return cache;
}
std::mutex cyclotomic_mutex;

const Poly& cyclotomic_locked(long m) {
    auto& cache = cyclotomic_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    Poly num(static_cast<size_t>(m + 1), Rational(0));
    num[0] = Rational(-1);
    num[static_cast<size_t>(m)] = Rational(1);
    Poly den = {Rational(1)};
    for (long d : divisors(m)) {
        if (d == m) continue;
        den = poly_mul(den, cyclotomic_locked(d));
    }
    Poly quot, rem;
    poly_divmod(num, den, quot, rem);
    if (degree(rem) >= 0) throw ScalarError("cyclotomic polynomial division failed");
    return cache.emplace(m, std::move(quot)).first->second;
}

}  // namespace

long euler_phi(long m) {
    if (m <= 0) throw ScalarError("conductor must be positive");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(long m) {
    if (m <= 0) throw ScalarError("conductor must be positive");
    std::lock_guard<std::mutex> lock(cyclotomic_mutex);
    return cyclotomic_locked(m);
}

Scalar::Scalar(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor_ <= 0) throw ScalarError("conductor must be positive");
    reduce();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw ScalarError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::root_of_unity(long m, long k) {
    if (m <= 0) throw ScalarError("conductor must be positive");
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> c(static_cast<size_t>(k + 1), Rational(0));
    c[static_cast<size_t>(k)] = Rational(1);
    return Scalar(m, std::move(c));
}

void Scalar::reduce() {
    const Poly& phi = cyclotomic_polynomial(conductor_);
    size_t deg = phi.size() - 1;  // = euler_phi(conductor_)
    if (coeffs_.size() > deg) {
        Poly quot, rem;
        poly_divmod(coeffs_, phi, quot, rem);
        coeffs_ = std::move(rem);
    }
    coeffs_.resize(deg, Rational(0));
    if (deg == 0) coeffs_.resize(1, Rational(0));  // defensive; phi(m) >= 1
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw ScalarError("not a rational scalar: " + str());
    return coeffs_[0];
}

Scalar Scalar::lifted(long M) const {
    if (M == conductor_) return *this;
    if (M % conductor_ != 0) throw ScalarError("lift target must be a multiple of the conductor");
    long step = M / conductor_;
    // zeta_m = zeta_M^step; substitute power by power.
    std::vector<Rational> out(static_cast<size_t>(step) * coeffs_.size() + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        out[static_cast<size_t>(step) * k] = coeffs_[k];
    return Scalar(M, std::move(out));
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) {
    long M = lcm_long(conductor_, rhs.conductor());
    Scalar a = lifted(M), b = rhs.lifted(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return *this = std::move(a);
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    long M = lcm_long(conductor_, rhs.conductor());
    Scalar a = lifted(M), b = rhs.lifted(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return *this = std::move(a);
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (conductor_ == 1 && rhs.conductor() == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    long M = lcm_long(conductor_, rhs.conductor());
    Scalar a = lifted(M), b = rhs.lifted(M);
    return *this = Scalar(M, poly_mul(a.coeffs_, b.coeffs_));
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ScalarError("division by zero");
    if (conductor_ == 1) return Scalar(Rational(1) / coeffs_[0]);
    // Phi_m is irreducible over Q, so gcd(f, Phi_m) = 1 for nonzero f.
    Poly u, v;
    Poly g = poly_xgcd(coeffs_, cyclotomic_polynomial(conductor_), u, v);
    if (degree(g) != 0) throw ScalarError("inverse failed: residue not a unit");
    return Scalar(conductor_, std::move(u));
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    long M = lcm_long(a.conductor(), b.conductor());
    Scalar x = a.lifted(M), y = b.lifted(M);
    return x.coeffs_ == y.coeffs_;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ScalarError("bad rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string Scalar::str() const {
    if (is_rational()) return rational_str(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rational_str(coeffs_[k]);
        if (k == 1)
            os << "*z";
        else if (k > 1)
            os << "*z^" << k;
    }
    return os.str();
}

Scalar Scalar::parse(const std::string& text, long conductor) {
    std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(conductor)), Rational(0));
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ScalarError("empty scalar string");
    bool first_term = true;
    while (pos < text.size()) {
        skip_ws();
        int sign = 1;
        if (!first_term) {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                throw ScalarError("expected '+' or '-' in scalar: '" + text + "'");
            }
            skip_ws();
        }
        first_term = false;
        size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '/' || text[pos] == '-'))
            ++pos;
        if (pos == start) throw ScalarError("expected coefficient in scalar: '" + text + "'");
        Rational coeff = parse_rational(text.substr(start, pos - start));
        if (sign < 0) coeff = -coeff;
        long power = 0;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'z')
                throw ScalarError("expected 'z' in scalar: '" + text + "'");
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == estart) throw ScalarError("expected exponent in scalar: '" + text + "'");
                power = std::stol(text.substr(estart, pos - estart));
            }
        }
        if (power >= static_cast<long>(coeffs.size())) {
            // Powers beyond phi(m) are legal input; route through reduction.
            std::vector<Rational> big(static_cast<size_t>(power + 1), Rational(0));
            big[static_cast<size_t>(power)] = coeff;
            Scalar term(conductor, std::move(big));
            for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += term.coeffs()[i];
        } else {
            coeffs[static_cast<size_t>(power)] += coeff;
        }
        skip_ws();
    }
    return Scalar(conductor, std::move(coeffs));
}

}  // namespace hova
