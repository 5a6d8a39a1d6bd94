#include "mvspcurves/gf.hpp"

#include <algorithm>
#include <sstream>

namespace mvsp {

namespace {

// Remainder of num / den over F_p (den monic-normalized inside).
// Both polynomials as coefficient vectors, lowest degree first.
bool divides(const std::vector<uint32_t>& den, std::vector<uint32_t> num, uint32_t p) {
    int dd = static_cast<int>(den.size()) - 1;
    uint64_t lead = den[dd];
    uint64_t inv = 1;
    if (lead != 1) {
        // den is always monic here, but keep the general path
        uint64_t acc = 1, b = lead, k = p - 2;
        while (k) {
            if (k & 1) acc = acc * b % p;
            b = b * b % p;
            k >>= 1;
        }
        inv = acc;
    }
    for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
        uint64_t c = num[k] * inv % p;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            num[k - dd + j] = static_cast<uint32_t>((num[k - dd + j] + p - c * den[j] % p) % p);
    }
    for (int i = 0; i < dd; ++i)
        if (num[i] != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
    uint32_t d = static_cast<uint32_t>(poly.size()) - 1;
    for (uint32_t deg = 1; deg <= d / 2; ++deg) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) count *= p;
        for (uint64_t enc = 0; enc < count; ++enc) {
            std::vector<uint32_t> den(deg + 1);
            uint64_t x = enc;
            for (uint32_t i = 0; i < deg; ++i) {
                den[i] = static_cast<uint32_t>(x % p);
                x /= p;
            }
            den[deg] = 1;
            if (divides(den, poly, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u64(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t i = 2; i * i <= x; ++i)
        if (x % i == 0) return false;
    return true;
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q) {
    if (q < 2) throw InvalidInput("q must be a prime power >= 2");
    uint64_t p = q;
    for (uint64_t i = 2; i * i <= q; ++i)
        if (q % i == 0) {
            p = i;
            break;
        }
    uint32_t e = 0;
    uint64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<uint32_t>(p), e};
}

std::shared_ptr<const FieldSpec> FieldSpec::make(uint32_t p, uint32_t e, uint32_t n, uint64_t max_order) {
    if (!is_prime_u64(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
    if (e == 0 || n == 0) throw InvalidInput("e and n must be positive");
    uint32_t deg = e * n;
    Int order = int_pow(Int(p), deg);
    if (order > Int(max_order))
        throw BoundExceeded("p^(e*n) = " + order.str() + " exceeds the field size bound " + std::to_string(max_order));

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->e_ = e;
    spec->n_ = n;
    spec->deg_ = deg;
    spec->q_ = checked_u64(int_pow(Int(p), e), "q");
    spec->order_ = order.convert_to<uint64_t>();

    // Smallest monic irreducible of degree deg, by integer encoding of the
    // non-leading coefficients.
    uint64_t span = 1;
    for (uint32_t i = 0; i < deg; ++i) span *= p;
    for (uint64_t enc = 0; enc < span; ++enc) {
        std::vector<uint32_t> cand(deg + 1);
        uint64_t x = enc;
        for (uint32_t i = 0; i < deg; ++i) {
            cand[i] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        cand[deg] = 1;
        if (irreducible(cand, p)) {
            spec->modulus_ = std::move(cand);
            break;
        }
    }
    if (spec->modulus_.empty()) throw std::logic_error("no irreducible modulus found");

    if (spec->order_ <= kTableLimit) spec->build_tables();
    return spec;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && e_ == other.e_ && n_ == other.n_ && modulus_ == other.modulus_;
}

std::vector<uint32_t> FieldSpec::add_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> r(deg_);
    for (uint32_t i = 0; i < deg_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

std::vector<uint32_t> FieldSpec::sub_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> r(deg_);
    for (uint32_t i = 0; i < deg_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

std::vector<uint32_t> FieldSpec::neg_raw(const std::vector<uint32_t>& a) const {
    std::vector<uint32_t> r(deg_);
    for (uint32_t i = 0; i < deg_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

std::vector<uint32_t> FieldSpec::mul_basis(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    std::vector<uint64_t> prod(2 * deg_, 0);
    for (uint32_t i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < deg_; ++j)
            if (b[j]) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_;
    }
    for (int k = 2 * static_cast<int>(deg_) - 1; k >= static_cast<int>(deg_); --k) {
        uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t j = 0; j < deg_; ++j)
            prod[k - deg_ + j] = (prod[k - deg_ + j] + (p_ - c * modulus_[j] % p_)) % p_;
    }
    std::vector<uint32_t> r(deg_);
    for (uint32_t i = 0; i < deg_; ++i) r[i] = static_cast<uint32_t>(prod[i]);
    return r;
}

std::vector<uint32_t> FieldSpec::mul_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    if (!exp_.empty()) {
        uint64_t ia = index_of(a);
        if (ia == 0) return std::vector<uint32_t>(deg_, 0);
        uint64_t ib = index_of(b);
        if (ib == 0) return std::vector<uint32_t>(deg_, 0);
        uint64_t k = (static_cast<uint64_t>(log_[ia]) + log_[ib]) % (order_ - 1);
        return coeffs_of(exp_[k]);
    }
    return mul_basis(a, b);
}

uint64_t FieldSpec::index_of(const std::vector<uint32_t>& coeffs) const {
    uint64_t r = 0;
    for (uint32_t i = deg_; i-- > 0;) r = r * p_ + coeffs[i];
    return r;
}

std::vector<uint32_t> FieldSpec::coeffs_of(uint64_t index) const {
    std::vector<uint32_t> c(deg_);
    for (uint32_t i = 0; i < deg_; ++i) {
        c[i] = static_cast<uint32_t>(index % p_);
        index /= p_;
    }
    return c;
}

void FieldSpec::build_tables() {
    // Prime factors of order-1 by trial division, then the first generator
    // in index order.
    uint64_t m = order_ - 1;
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i * i <= m; ++i)
        if (m % i == 0) {
            primes.push_back(i);
            while (m % i == 0) m /= i;
        }
    if (m > 1) primes.push_back(m);

    auto pow_idx = [&](std::vector<uint32_t> base, uint64_t k) {
        std::vector<uint32_t> acc(deg_, 0);
        acc[0] = 1;
        while (k) {
            if (k & 1) acc = mul_basis(acc, base);
            base = mul_basis(base, base);
            k >>= 1;
        }
        return acc;
    };

    uint64_t gen = 0;
    for (uint64_t idx = 2; idx < order_; ++idx) {
        auto g = coeffs_of(idx);
        bool ok = true;
        for (uint64_t ell : primes)
            if (index_of(pow_idx(g, (order_ - 1) / ell)) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = idx;
            break;
        }
    }
    if (gen == 0 && order_ > 2) throw std::logic_error("no multiplicative generator found");

    exp_.assign(order_ - 1, 0);
    log_.assign(order_, 0);
    std::vector<uint32_t> acc(deg_, 0);
    acc[0] = 1;
    auto g = coeffs_of(gen == 0 ? 1 : gen);
    for (uint64_t k = 0; k + 1 < order_; ++k) {
        uint64_t idx = index_of(acc);
        exp_[k] = static_cast<uint32_t>(idx);
        log_[idx] = static_cast<uint32_t>(k);
        acc = mul_basis(acc, g);
    }
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(deg_, 0));
}

FieldElement FieldSpec::one() const {
    std::vector<uint32_t> c(deg_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(uint64_t k) const {
    std::vector<uint32_t> c(deg_, 0);
    c[0] = static_cast<uint32_t>(k % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::element(uint64_t index) const {
    if (index >= order_) throw InvalidInput("element index out of range");
    return FieldElement(shared_from_this(), coeffs_of(index));
}

FieldElement FieldSpec::from_coeffs(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() != deg_) throw InvalidInput("coefficient vector has wrong length");
    for (auto& c : coeffs) c %= p_;
    return FieldElement(shared_from_this(), std::move(coeffs));
}

const FieldSpec& FieldElement::spec() const {
    if (!spec_) throw InvalidInput("uninitialized field element");
    return *spec_;
}

uint64_t FieldElement::index() const { return spec().index_of(c_); }

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t x) { return x == 0; });
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!a.spec().same_field(b.spec())) throw InvalidInput("field elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator-() const {
    return FieldElement(spec_, spec().neg_raw(c_));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same(*this, rhs);
    c_ = spec().add_raw(c_, rhs.c_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same(*this, rhs);
    c_ = spec().sub_raw(c_, rhs.c_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same(*this, rhs);
    c_ = spec().mul_raw(c_, rhs.c_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same(*this, rhs);
    if (rhs.is_zero()) throw InvalidInput("division by zero");
    return *this *= rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same(*this, rhs);
    return c_ == rhs.c_;
}

FieldElement FieldElement::pow(const Int& k) const {
    if (k < 0) throw InvalidInput("negative exponent");
    const auto& sp = spec();
    if (is_zero()) return k == 0 ? sp.one() : sp.zero();
    uint64_t r = (k % (sp.order() - 1)).convert_to<uint64_t>();
    std::vector<uint32_t> acc(sp.degree(), 0);
    acc[0] = 1;
    auto base = c_;
    while (r) {
        if (r & 1) acc = sp.mul_raw(acc, base);
        base = sp.mul_raw(base, base);
        r >>= 1;
    }
    return FieldElement(spec_, std::move(acc));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    return pow(Int(spec().order() - 2));
}

FieldElement frobenius(const FieldElement& a, uint32_t k) {
    const auto& sp = a.spec();
    uint32_t kr = k % sp.n();
    return a.pow(int_pow(Int(sp.q()), kr));
}

FieldElement partial_trace(const FieldElement& a, uint32_t k) {
    const auto& sp = a.spec();
    if (k > sp.n()) throw InvalidInput("partial trace length exceeds n");
    FieldElement acc = sp.zero();
    FieldElement b = a;
    for (uint32_t i = 0; i < k; ++i) {
        acc += b;
        b = frobenius(b, 1);
    }
    return acc;
}

std::vector<FieldElement> subfield_elements(const FieldSpecPtr& spec, uint32_t d) {
    if (d == 0 || spec->n() % d != 0) throw InvalidInput("subfield degree must divide n");
    std::vector<FieldElement> out;
    for (uint64_t idx = 0; idx < spec->order(); ++idx) {
        FieldElement a = spec->element(idx);
        if (frobenius(a, d) == a) out.push_back(std::move(a));
    }
    Int expect = int_pow(Int(spec->q()), d);
    if (Int(out.size()) != expect) throw std::logic_error("subfield has unexpected cardinality");
    return out;
}

std::string to_string(const FieldElement& a) {
    std::ostringstream os;
    os << '[';
    const auto& c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

}  // namespace mvsp
