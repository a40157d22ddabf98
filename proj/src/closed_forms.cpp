#include "flowpoly/closed_forms.hpp"

namespace flowpoly {

Int limiting_volume(const Partition& lambda, const NetflowVector& a) {
    if (a.length() < lambda.length())
        throw std::invalid_argument("netflow needs at least l(lambda) entries");
    std::vector<Int> parts;
    parts.reserve(lambda.length());
    for (int p : lambda.parts) parts.emplace_back(p);
    Int result = multinomial(Int(lambda.size()), parts);
    for (int i = 1; i <= lambda.length(); ++i)
        result *= pow_int(a.at(i), static_cast<unsigned long>(lambda.part(i)));
    return result;
}

Int tesler_volume(int n) {
    if (n < 1) throw std::invalid_argument("tesler_volume needs n >= 1");
    const unsigned long b = static_cast<unsigned long>(n) * (n - 1) / 2;
    Int numer = factorial(b) * pow_int(Int(2), b);
    Int denom = 1;
    for (int i = 1; i <= n; ++i) denom *= factorial(static_cast<unsigned long>(i));
    Int result;
    mpz_divexact(result.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return result;
}

Int syt_count(const Partition& lambda) {
    // conjugate part lengths for the leg of each hook
    std::vector<int> conj(lambda.parts[0], 0);
    for (int p : lambda.parts)
        for (int j = 0; j < p; ++j) ++conj[j];
    Int hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks *= Int((lambda.part(i) - j) + (conj[j - 1] - i) + 1);
    Int result;
    Int numer = factorial(static_cast<unsigned long>(lambda.size()));
    mpz_divexact(result.get_mpz_t(), numer.get_mpz_t(), hooks.get_mpz_t());
    return result;
}

Int tesler_volume_catalan_form(int n) {
    if (n < 1) throw std::invalid_argument("tesler_volume_catalan_form needs n >= 1");
    Int cats = 1;
    for (int i = 0; i < n; ++i) cats *= catalan(static_cast<unsigned long>(i));
    if (n == 1) return cats;  // staircase of K_2 is empty, a single tableau
    return syt_count(Partition::staircase(n - 1)) * cats;
}

bool corollary_ratio_check(int n) {
    if (n < 2) throw std::invalid_argument("corollary_ratio_check needs n >= 2");
    const unsigned long b = static_cast<unsigned long>(n) * (n - 1) / 2;
    const Int lhs = tesler_volume(n) * factorial(static_cast<unsigned long>(n));
    const Int rhs =
        pow_int(Int(2), b) * limiting_volume(Partition::staircase(n - 1), NetflowVector::ones(n - 1));
    return lhs == rhs;
}

Polynomial product_ehrhart(const Partition& lambda, const NetflowVector& a) {
    if (a.length() < lambda.length())
        throw std::invalid_argument("netflow needs at least l(lambda) entries");
    Polynomial result = Polynomial::constant(Rat(1));
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int r = 1; r <= lambda.part(i); ++r) {
            // factor (a_i t + r) / r
            Polynomial linear({Rat(Int(r)), Rat(a.at(i))});
            result = result * linear.scaled(Rat(Int(1), Int(r)));
        }
    }
    return result;
}

}  // namespace flowpoly
