#include "orthocolour/finite_field.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000;

// Remainder of a modulo the monic polynomial b, over Z_p.  Coefficients are
// stored low degree first; b.back() == 1.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
        int c = a[d];
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) {
            int idx = d - db + i;
            a[idx] = ((a[idx] - c * b[i]) % p + p) % p;
        }
    }
    a.resize(db);
    return a;
}

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

// Monic polynomial of degree >= 2 over Z_p: irreducible iff no monic divisor
// of degree 1..deg/2 divides it.
bool is_irreducible(const std::vector<int>& poly, int p) {
    int deg = static_cast<int>(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        std::vector<int> divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::int64_t m = 0; m < count; ++m) {
            std::int64_t rem = m;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(rem % p);
                rem /= p;
            }
            if (all_zero(poly_rem(poly, divisor, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over Z_p, where
// the comparison reads coefficients low degree first (c0 most significant).
std::vector<int> canonical_modulus(int p, int k) {
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    std::vector<int> cand(k + 1, 0);
    cand[k] = 1;
    for (std::int64_t m = 0; m < total; ++m) {
        std::int64_t rem = m, place = total / p;
        for (int i = 0; i < k; ++i) {
            cand[i] = static_cast<int>(rem / place);
            rem %= place;
            place = place > 1 ? place / p : 1;
        }
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("finite field: no irreducible modulus found");
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> factors;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("field elements belong to different fields");
}

}  // namespace

FieldElement::FieldElement(FieldPtr f, std::vector<int> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {}

std::int64_t FieldElement::index() const {
    std::int64_t idx = 0, place = 1;
    int p = field_->characteristic();
    for (int c : coeffs_) {
        idx += c * place;
        place *= p;
    }
    return idx;
}

bool FieldElement::is_zero() const { return all_zero(coeffs_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    int p = a.field_->characteristic();
    std::vector<int> sum(a.coeffs_.size());
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = (a.coeffs_[i] + b.coeffs_[i]) % p;
    return FieldElement(a.field_, std::move(sum));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    int p = a.field_->characteristic();
    std::vector<int> diff(a.coeffs_.size());
    for (size_t i = 0; i < diff.size(); ++i)
        diff[i] = ((a.coeffs_[i] - b.coeffs_[i]) % p + p) % p;
    return FieldElement(a.field_, std::move(diff));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    int p = a.field_->characteristic();
    std::vector<int> prod(2 * a.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] = (prod[i + j] + a.coeffs_[i] * b.coeffs_[j]) % p;
    }
    return FieldElement(a.field_, a.field_->reduce(std::move(prod)));
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (!field_ || !other.field_) return field_ == other.field_ && coeffs_ == other.coeffs_;
    return *field_ == *other.field_ && coeffs_ == other.coeffs_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("field element: zero has no inverse");
    return pow(field_->order() - 2);
}

FieldElement FieldElement::pow(std::int64_t e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    std::uint64_t exponent = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
    FieldElement result = field_->one();
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= p_;
}

FieldPtr FiniteField::make(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("finite field: characteristic must be prime");
    if (k < 1) throw std::invalid_argument("finite field: degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("finite field: order exceeds enumerable limit");
    }
    std::vector<int> modulus = k == 1 ? std::vector<int>{0, 1} : canonical_modulus(p, k);
    return FieldPtr(new FiniteField(p, k, std::move(modulus)));
}

std::vector<int> FiniteField::reduce(std::vector<int> poly) const {
    if (k_ == 1) {
        poly.resize(1);
        return poly;
    }
    if (static_cast<int>(poly.size()) < k_) poly.resize(k_, 0);
    return poly_rem(std::move(poly), modulus_, p_);
}

FieldElement FiniteField::element(std::int64_t index) const {
    if (index < 0 || index >= q_)
        throw std::invalid_argument("finite field: element index out of range");
    std::vector<int> coeffs(k_);
    for (int i = 0; i < k_; ++i) {
        coeffs[i] = static_cast<int>(index % p_);
        index /= p_;
    }
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FiniteField::from_coefficients(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_)
        throw std::invalid_argument("finite field: coefficient vector has wrong length");
    for (int c : coeffs)
        if (c < 0 || c >= p_)
            throw std::invalid_argument("finite field: coefficient out of range");
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FiniteField::zero() const { return element(0); }

FieldElement FiniteField::one() const { return element(1); }

FieldElement FiniteField::primitive_element() const {
    std::int64_t group_order = q_ - 1;
    auto factors = prime_factors(group_order);
    for (std::int64_t idx = 1; idx < q_; ++idx) {
        FieldElement cand = element(idx);
        bool full_order = true;
        for (std::int64_t f : factors) {
            if (cand.pow(group_order / f) == one()) {
                full_order = false;
                break;
            }
        }
        if (full_order) return cand;
    }
    throw std::logic_error("finite field: no primitive element found");
}

std::vector<FieldElement> FiniteField::quadratic_residues() const {
    if (p_ == 2)
        throw std::invalid_argument(
            "finite field: quadratic residues undefined in characteristic 2");
    std::set<std::int64_t> indices;
    for (std::int64_t i = 1; i < q_; ++i) {
        FieldElement a = element(i);
        indices.insert((a * a).index());
    }
    std::vector<FieldElement> result;
    result.reserve(indices.size());
    for (std::int64_t idx : indices) result.push_back(element(idx));
    return result;
}

}  // namespace orthocolour
