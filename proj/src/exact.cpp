#include "flowpoly/exact.hpp"

#include <algorithm>

namespace flowpoly {

Int binomial(const Int& n, const Int& k) {
    if (sgn(k) < 0 || sgn(n) < 0 || k > n) return 0;
    if (!k.fits_ulong_p()) throw std::overflow_error("binomial: k too large");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int multinomial(const Int& total, const std::vector<Int>& parts) {
    Int sum = 0;
    for (const Int& p : parts) {
        if (sgn(p) < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
    Int result = 1;
    Int running = 0;
    for (const Int& p : parts) {
        running += p;
        result *= binomial(running, p);
    }
    return result;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int catalan(unsigned long i) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * i, i);
    Int d(i + 1);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return r;
}

std::string rat_to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

void Polynomial::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& Polynomial::coefficient(std::size_t i) const {
    static const Rat zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rat Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + o.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) - o.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    std::vector<Rat> out(coeffs_);
    for (Rat& v : out) v *= c;
    return Polynomial(std::move(out));
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) out.push_back(rat_to_string(c));
    return out;
}

Polynomial interpolate(const std::vector<std::pair<Int, Int>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[i].first.get_str());
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial numer = Polynomial::constant(Rat(1));
        Rat denom(1);
        const Rat xi(points[i].first);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            // factor (t - x_j)
            numer = numer * Polynomial({Rat(-points[j].first), Rat(1)});
            denom *= xi - Rat(points[j].first);
        }
        result = result + numer.scaled(Rat(points[i].second) / denom);
    }
    return result;
}

int matrix_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rat pv = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            const Rat factor = rows[i][c] / pv;
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int affine_rank(const std::vector<std::vector<Rat>>& points) {
    if (points.size() <= 1) return 0;
    std::vector<std::vector<Rat>> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

}  // namespace flowpoly
