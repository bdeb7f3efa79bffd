#include "formsum/intpoly.hpp"

#include "formsum/detail/polymod.hpp"

#include <algorithm>
#include <sstream>

namespace formsum::intpoly {

const Int IntPolynomial::kZero = 0;

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_minus(const Int& a) {
    return IntPolynomial({-a, 1});
}

const Int& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Int(i) * coeffs_[i]);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

BinaryForm::BinaryForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw ConfigError("binary form needs degree >= 1");
    bool all_zero = std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
    if (all_zero) throw ConfigError("binary form is identically zero");
}

IntPolynomial BinaryForm::dehomogenize() const {
    // F(x,1) = sum_j c_j x^{d-j}: coefficient of x^k is c_{d-k}.
    int d = degree();
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(d - k)];
    return IntPolynomial(std::move(c));
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

Int eval_form(const BinaryForm& F, const Int& s, const Int& t) {
    int d = F.degree();
    Int acc = 0;
    // Horner in s with running powers of t.
    for (int j = 0; j <= d; ++j) acc = acc * s + F.coeffs()[static_cast<size_t>(j)] * pow(t, static_cast<unsigned>(j));
    // acc now equals sum c_j s^{d-j} t^j.
    return acc;
}

namespace {

// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant: zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow(f.coeff(0), static_cast<unsigned>(n));
    if (n == 0) return pow(g.coeff(0), static_cast<unsigned>(m));
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> syl(dim, std::vector<Int>(dim, 0));
    // n rows of f, then m rows of g; row r of f places f_{m-j} at column r+j.
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = g.coeff(n - j);
    return bareiss_det(std::move(syl));
}

Int discriminant(const IntPolynomial& f) {
    if (f.degree() < 2) throw Error("discriminant: degree < 2");
    if (!f.is_monic()) throw Error("discriminant: non-monic input");
    int d = f.degree();
    Int r = resultant(f, f.derivative());
    return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

MonicFormData make_monic_form(const BinaryForm& F) {
    if (F.proportional_to_y()) {
        Int c = F.coeffs()[1];
        // K = Q, theta = -c; ship x + c as the (degree 1) monic companion.
        return MonicFormData{BinaryForm({Int(1), c}), Int(0), true, c};
    }
    Int b = F.b();
    if (b == 0) throw ConfigError("make_monic_form: F(1,0) = 0 but F not proportional to y");
    int d = F.degree();
    std::vector<Int> tilde(static_cast<size_t>(d) + 1);
    // Coefficient of x^{d-j} y^j in b^{d-1} F(x/b, y) is c_j b^{j-1}.
    for (int j = 0; j <= d; ++j) {
        if (j == 0) {
            tilde[0] = 1;
        } else {
            tilde[static_cast<size_t>(j)] = F.coeffs()[static_cast<size_t>(j)] * pow(b, static_cast<unsigned>(j - 1));
        }
    }
    BinaryForm tf(std::move(tilde));
    if (d >= 2) {
        // Witnessed reducibility: a repeated factor or a rational linear
        // factor of tilde F(x,1) certifies that F is reducible.
        IntPolynomial mono = tf.dehomogenize();
        if (discriminant(mono) == 0)
            throw ConfigError("make_monic_form: form has a repeated factor");
        Int c0 = mono.coeff(0);
        Int bound = abs(c0);
        for (Int r = -bound; r <= bound; ++r) {
            if (r == 0 || c0 % r != 0) continue;
            if (mono.eval(r) == 0)
                throw ConfigError("make_monic_form: form is reducible (rational root " + r.str() + ")");
        }
    }
    return MonicFormData{tf, b, false, Int(0)};
}

namespace {

bool irreducible_mod_p(const IntPolynomial& f, int64_t p) {
    polymod::Poly m = polymod::reduce(f, p);
    int d = static_cast<int>(m.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin test: x^{p^d} == x mod f, and gcd(x^{p^{d/q}} - x, f) = 1 for
    // prime divisors q of d.
    polymod::Poly x = polymod::rem({0, 1}, m, p);
    if (polymod::frobenius(m, p, d) != x) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0 || !is_prime(q)) continue;
        polymod::Poly diff = polymod::sub(polymod::frobenius(m, p, d / q), x, p);
        if (polymod::gcd(diff, m, p).size() != 1) return false;
    }
    return true;
}

}  // namespace

IrreducibilityResult irreducibility_witness(const BinaryForm& F, int64_t prime_bound) {
    if (F.degree() == 1) return IrreducibilityResult::Proven;
    if (F.proportional_to_y()) return IrreducibilityResult::Proven;
    if (F.b() == 0) return IrreducibilityResult::Unknown;  // y | F, not the cy case
    Int b = F.b();
    int d = F.degree();
    std::vector<Int> tilde(static_cast<size_t>(d) + 1);
    tilde[0] = 1;
    for (int j = 1; j <= d; ++j)
        tilde[static_cast<size_t>(j)] = F.coeffs()[static_cast<size_t>(j)] * pow(b, static_cast<unsigned>(j - 1));
    IntPolynomial f = BinaryForm(std::move(tilde)).dehomogenize();
    Int disc = discriminant(f);
    for (int64_t p : primes_below(prime_bound + 1)) {
        if (disc % p == 0) continue;
        if (irreducible_mod_p(f, p)) return IrreducibilityResult::Proven;
    }
    return IrreducibilityResult::Unknown;
}

BinaryForm parse_form(const std::string& text) {
    std::vector<Int> coeffs;
    std::string body = text;
    auto l = body.find('[');
    auto r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw ConfigError("form coefficients must look like [c0,c1,...]: " + text);
    body = body.substr(l + 1, r - l - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw ConfigError("empty coefficient in " + text);
        coeffs.emplace_back(item);
    }
    return BinaryForm(std::move(coeffs));
}

bool have_common_factor(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return true;
    return resultant(f, g) == 0;
}

}  // namespace formsum::intpoly
