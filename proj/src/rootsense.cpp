#include "littlewood/rootsense.hpp"

#include <stdexcept>
#include <utility>

namespace littlewood {

namespace {

void require_nonzero(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("all-zero polynomial has every point as root");
}

IntPoly drop_trailing_zeros(const IntPoly& p, std::size_t t) {
    std::vector<mpz_class> c(p.coeffs().begin() + static_cast<long>(t), p.coeffs().end());
    return IntPoly(std::move(c));
}

}  // namespace

bool has_repeated_root(const IntPoly& p) {
    require_nonzero(p);
    if (p.degree() < 2) return false;
    return !gcd_rational(p, derivative(p)).is_constant();
}

int multiplicity_at(const IntPoly& p, int a) {
    require_nonzero(p);
    if (a == 0) return static_cast<int>(p.trailing_zeros());
    if (a != 1 && a != -1) throw std::invalid_argument("multiplicity point must be -1, 0 or 1");
    IntPoly factor{-static_cast<long>(a), 1};  // z - a
    IntPoly q = p;
    int m = 0;
    while (q.degree() >= 1 && evaluate(q, a) == 0) {
        q = divide_exact(q, factor);
        ++m;
    }
    return m;
}

RootReport classify(const IntPoly& p, unsigned long k_max) {
    require_nonzero(p);
    if (k_max < 2) throw std::invalid_argument("classify requires k_max >= 2");
    RootReport rep;
    rep.mult_at_zero = static_cast<int>(p.trailing_zeros());
    rep.mult_at_plus1 = multiplicity_at(p, 1);
    rep.mult_at_minus1 = multiplicity_at(p, -1);

    if (p.degree() < 2) return rep;
    IntPoly g = gcd_rational(p, derivative(p));
    rep.repeated_part_degree = g.degree() > 0 ? g.degree() : 0;
    if (g.is_constant()) return rep;

    IntPoly r = g;
    std::size_t t = r.trailing_zeros();
    if (t > 0) r = drop_trailing_zeros(r, t);
    IntPoly zm1{-1, 1}, zp1{1, 1};
    while (r.degree() >= 1 && evaluate(r, 1) == 0) r = divide_exact(r, zm1);
    while (r.degree() >= 1 && evaluate(r, -1) == 0) r = divide_exact(r, zp1);
    for (unsigned long k = 3; k <= k_max && r.degree() >= 1; ++k) {
        if (totient(k) > static_cast<unsigned long>(r.degree())) continue;
        IntPoly phi = cyclotomic(k);
        if (!divides(phi, r)) continue;
        rep.cyclotomic_square_indices.insert(k);
        do {
            r = divide_exact(r, phi);
        } while (r.degree() >= phi.degree() && divides(phi, r));
    }
    rep.has_noncyclotomic_repeat = !r.is_constant();
    return rep;
}

RootReport classify(const IntPoly& p) {
    require_nonzero(p);
    unsigned long k_max = p.degree() > 0 ? 2ul * static_cast<unsigned long>(p.degree()) : 2ul;
    return classify(p, k_max);
}

}  // namespace littlewood
