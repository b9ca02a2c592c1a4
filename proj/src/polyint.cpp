#include "littlewood/polyint.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace littlewood {

namespace {

const mpz_class kZero = 0;

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, mpz_class(0));
        p.coeffs_[k] = c;
    }
    return p;
}

const mpz_class& IntPoly::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : kZero;
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::size_t IntPoly::trailing_zeros() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k == coeffs_.size() ? 0 : k;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = coeff(j) + other.coeff(j);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = coeff(j) - other.coeff(j);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const mpz_class& c = coeffs_[j];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

mpz_class evaluate(const IntPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t j = p.coeffs().size(); j-- > 0;) {
        acc *= x;
        acc += p.coeffs()[j];
    }
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<mpz_class> out(p.coeffs().size() - 1);
    for (std::size_t j = 1; j < p.coeffs().size(); ++j) out[j - 1] = mpz_class(j) * p.coeffs()[j];
    return IntPoly(std::move(out));
}

IntPoly reciprocal(const IntPoly& p) {
    std::vector<mpz_class> out(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(out));
}

namespace {

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly divide_by_integer(const IntPoly& p, const mpz_class& d) {
    std::vector<mpz_class> out(p.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j)
        mpz_divexact(out[j].get_mpz_t(), p.coeffs()[j].get_mpz_t(), d.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly primitive_positive(IntPoly p) {
    if (p.is_zero()) return p;
    mpz_class c = content(p);
    if (p.leading() < 0) c = -c;
    if (c != 1) p = divide_by_integer(p, c);
    return p;
}

// Pseudo-remainder: remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(a.coeffs());
    const auto& bc = b.coeffs();
    const mpz_class& lb = bc.back();
    int db = b.degree();
    int dr = a.degree();
    int steps = dr - db + 1;
    while (dr >= db) {
        mpz_class lead = r[dr];
        for (int j = 0; j <= dr; ++j) r[j] *= lb;
        if (lead != 0) {
            for (int j = 0; j < db; ++j) r[j + dr - db] -= lead * bc[j];
        }
        r[dr] = 0;
        --dr;
        while (dr >= 0 && r[dr] == 0) --dr;
        --steps;
    }
    // Keep the pseudo-remainder scaling uniform regardless of where the
    // degree dropped, so that prem(a,b) = lc(b)^(da-db+1) a mod b exactly.
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(steps, 0)));
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(dr, -1) + 1));
    for (int j = 0; j <= dr; ++j) out[j] = r[j] * scale;
    return IntPoly(std::move(out));
}

// Primitive pseudo-remainder sequence gcd, exact.
IntPoly gcd_exact(IntPoly a, IntPoly b) {
    a = primitive_positive(std::move(a));
    b = primitive_positive(std::move(b));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_positive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_positive(std::move(a));
}

constexpr std::uint64_t kGcdPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                        2147483579ULL, 2147483563ULL};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> reduce_mod(const IntPoly& p, std::uint64_t m) {
    std::vector<std::uint64_t> out(p.coeffs().size());
    mpz_class tmp;
    for (std::size_t j = 0; j < out.size(); ++j) {
        tmp = p.coeffs()[j] % static_cast<unsigned long>(m);
        if (tmp < 0) tmp += static_cast<unsigned long>(m);
        out[j] = tmp.get_ui();
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Degree of gcd of the reductions mod a 31-bit prime, or -1 when the prime
// divides a leading coefficient (unusable witness).
int modular_gcd_degree(const IntPoly& p, const IntPoly& q, std::uint64_t m) {
    std::vector<std::uint64_t> a = reduce_mod(p, m);
    std::vector<std::uint64_t> b = reduce_mod(q, m);
    if (a.size() != p.coeffs().size() || b.size() != q.coeffs().size()) return -1;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::uint64_t inv = mod_pow(b.back(), m - 2, m);
        while (a.size() >= b.size()) {
            std::uint64_t lead = a.back() * inv % m;
            std::size_t off = a.size() - b.size();
            if (lead != 0) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    std::uint64_t s = lead * b[j] % m;
                    a[j + off] = (a[j + off] + m - s) % m;
                }
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

IntPoly gcd_rational(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd undefined for two zero polynomials");
    if (p.is_zero()) return primitive_positive(q);
    if (q.is_zero()) return primitive_positive(p);
    if (p.is_constant() || q.is_constant()) return IntPoly{1};
    for (std::uint64_t m : kGcdPrimes) {
        int d = modular_gcd_degree(p, q, m);
        if (d == 0) return IntPoly{1};
        if (d > 0) break;  // nonconstant witness: settle exactly
    }
    return gcd_exact(p, q);
}

bool divides(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (b.is_zero()) return true;
    if (a.is_constant()) return true;
    if (b.degree() < a.degree()) return false;
    return pseudo_rem(b, a).is_zero();
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& monic_divisor) {
    if (monic_divisor.is_zero() || monic_divisor.leading() != 1)
        throw std::invalid_argument("divide_exact requires a monic divisor");
    if (p.is_zero()) return IntPoly();
    int dq = p.degree() - monic_divisor.degree();
    if (dq < 0) throw std::invalid_argument("exact division impossible: degree too small");
    std::vector<mpz_class> r(p.coeffs());
    std::vector<mpz_class> qc(static_cast<std::size_t>(dq) + 1);
    const auto& dc = monic_divisor.coeffs();
    for (int k = dq; k >= 0; --k) {
        mpz_class lead = r[k + monic_divisor.degree()];
        qc[k] = lead;
        if (lead != 0) {
            for (std::size_t j = 0; j < dc.size(); ++j) r[k + j] -= lead * dc[j];
        }
    }
    for (const auto& c : r)
        if (c != 0) throw std::invalid_argument("exact division left a remainder");
    return IntPoly(std::move(qc));
}

namespace {

IntPoly z_pow_minus_one(unsigned long k) {
    std::vector<mpz_class> c(k + 1, mpz_class(0));
    c[0] = -1;
    c[k] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly cyclotomic(unsigned long k) {
    if (k == 0) throw std::invalid_argument("cyclotomic index must be positive");
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            divisors.push_back(d);
            if (d != k / d) divisors.push_back(k / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    std::vector<IntPoly> phis;  // parallel to divisors
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        IntPoly phi = z_pow_minus_one(divisors[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (divisors[i] % divisors[j] == 0) phi = divide_exact(phi, phis[j]);
        }
        phis.push_back(std::move(phi));
    }
    return phis.back();
}

unsigned long totient(unsigned long k) {
    if (k == 0) throw std::invalid_argument("totient requires k >= 1");
    unsigned long result = k;
    unsigned long m = k;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace littlewood
