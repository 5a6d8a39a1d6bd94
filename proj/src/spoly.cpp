#include "mvspcurves/spoly.hpp"

#include <algorithm>
#include <sstream>

namespace mvsp {

namespace {
void require_same(const FieldSpecPtr& a, const FieldSpecPtr& b) {
    if (!a->same_field(*b)) throw InvalidInput("polynomials over different fields");
}

// Renders a coefficient for the text format: prime-subfield scalars print
// as bare integers with 1 elided, everything else as a bracketed vector.
void print_coeff(std::ostream& os, const FieldElement& c, bool has_exp) {
    const auto& cs = c.coeffs();
    bool scalar = std::all_of(cs.begin() + 1, cs.end(), [](uint32_t x) { return x == 0; });
    if (scalar) {
        if (c.is_one() && has_exp) return;
        os << cs[0];
        if (has_exp) os << '*';
        return;
    }
    os << to_string(c);
    if (has_exp) os << '*';
}
}  // namespace

SparsePoly SparsePoly::monomial(FieldSpecPtr spec, Int exp, FieldElement coeff) {
    if (exp < 0) throw InvalidInput("negative exponent");
    SparsePoly P(std::move(spec));
    if (!coeff.is_zero()) P.terms_.emplace(std::move(exp), std::move(coeff));
    return P;
}

SparsePoly SparsePoly::constant(FieldSpecPtr spec, FieldElement coeff) {
    return monomial(std::move(spec), 0, std::move(coeff));
}

SparsePoly SparsePoly::x(FieldSpecPtr spec) {
    FieldElement one = spec->one();
    return monomial(std::move(spec), 1, std::move(one));
}

std::optional<Int> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

FieldElement SparsePoly::coeff(const Int& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? spec_->zero() : it->second;
}

FieldElement SparsePoly::leading_coeff() const {
    if (terms_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

bool SparsePoly::is_monic() const { return !terms_.empty() && leading_coeff().is_one(); }

void SparsePoly::add_term(const Int& exp, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly R(spec_);
    for (const auto& [e, c] : terms_) R.terms_.emplace(e, -c);
    return R;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    require_same(spec_, rhs.spec_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    require_same(spec_, rhs.spec_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require_same(a.spec_, b.spec_);
    SparsePoly R(a.spec_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) R.add_term(e1 + e2, c1 * c2);
    return R;
}

SparsePoly SparsePoly::pow(Int k) const {
    if (k < 0) throw InvalidInput("negative exponent");
    SparsePoly acc = constant(spec_, spec_->one());
    SparsePoly base = *this;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool SparsePoly::operator==(const SparsePoly& rhs) const {
    require_same(spec_, rhs.spec_);
    return terms_ == rhs.terms_;
}

SparsePoly reduce_exponents(const SparsePoly& P) {
    const auto& spec = P.spec_ptr();
    Int m = Int(spec->order()) - 1;
    SparsePoly R(spec);
    for (const auto& [e, c] : P.terms()) {
        Int er = (e == 0) ? Int(0) : ((e - 1) % m) + 1;
        R.add_term(er, c);
    }
    return R;
}

SparsePoly frobenius_power(const SparsePoly& P, uint32_t k, bool reduce) {
    const auto& spec = P.spec_ptr();
    Int qk = int_pow(Int(spec->q()), k);
    SparsePoly R(spec);
    for (const auto& [e, c] : P.terms()) R.add_term(e * qk, frobenius(c, k));
    return reduce ? reduce_exponents(R) : R;
}

SparsePoly trace_compose(const SparsePoly& P, uint32_t k, bool reduce) {
    SparsePoly acc(P.spec_ptr());
    for (uint32_t i = 0; i < k; ++i) acc += frobenius_power(P, i, reduce);
    return acc;
}

FieldElement evaluate(const SparsePoly& P, const FieldElement& a) {
    FieldElement acc = P.spec_ptr()->zero();
    for (const auto& [e, c] : P.terms()) acc += c * a.pow(e);
    return acc;
}

std::string to_string(const SparsePoly& P) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        if (!first) os << '+';
        first = false;
        const Int& e = it->first;
        print_coeff(os, it->second, e != 0);
        if (e == 1)
            os << 'x';
        else if (e != 0)
            os << "x^" << e.str();
    }
    return os.str();
}

BiPoly BiPoly::monomial(FieldSpecPtr spec, Int xe, Int ye, FieldElement coeff) {
    if (xe < 0 || ye < 0) throw InvalidInput("negative exponent");
    BiPoly P(std::move(spec));
    if (!coeff.is_zero()) P.terms_.emplace(Key{std::move(xe), std::move(ye)}, std::move(coeff));
    return P;
}

BiPoly BiPoly::from_x(const SparsePoly& P) {
    BiPoly R(P.spec_ptr());
    for (const auto& [e, c] : P.terms()) R.terms_.emplace(Key{e, 0}, c);
    return R;
}

void BiPoly::add_term(const Key& k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly R(spec_);
    for (const auto& [k, c] : terms_) R.terms_.emplace(k, -c);
    return R;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    require_same(spec_, rhs.spec_);
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    require_same(spec_, rhs.spec_);
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same(a.spec_, b.spec_);
    BiPoly R(a.spec_);
    for (const auto& [k1, c1] : a.terms_)
        for (const auto& [k2, c2] : b.terms_) R.add_term({k1.x + k2.x, k1.y + k2.y}, c1 * c2);
    return R;
}

BiPoly BiPoly::pow(Int k) const {
    if (k < 0) throw InvalidInput("negative exponent");
    BiPoly acc = monomial(spec_, 0, 0, spec_->one());
    BiPoly base = *this;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool BiPoly::operator==(const BiPoly& rhs) const {
    require_same(spec_, rhs.spec_);
    return terms_ == rhs.terms_;
}

BiPoly frobenius_power(const BiPoly& P, uint32_t k) {
    const auto& spec = P.spec_ptr();
    Int qk = int_pow(Int(spec->q()), k);
    BiPoly R(spec);
    for (const auto& [key, c] : P.terms()) R.add_term({key.x * qk, key.y * qk}, frobenius(c, k));
    return R;
}

FieldElement evaluate(const BiPoly& P, const FieldElement& x, const FieldElement& y) {
    FieldElement acc = P.spec_ptr()->zero();
    for (const auto& [k, c] : P.terms()) acc += c * x.pow(k.x) * y.pow(k.y);
    return acc;
}

std::string to_string(const BiPoly& P) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        if (!first) os << '+';
        first = false;
        const auto& k = it->first;
        bool has_exp = k.x != 0 || k.y != 0;
        print_coeff(os, it->second, has_exp);
        if (k.x == 1)
            os << 'x';
        else if (k.x != 0)
            os << "x^" << k.x.str();
        if (k.x != 0 && k.y != 0) os << '*';
        if (k.y == 1)
            os << 'y';
        else if (k.y != 0)
            os << "y^" << k.y.str();
    }
    return os.str();
}

}  // namespace mvsp
