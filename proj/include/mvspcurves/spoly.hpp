#ifndef MVSPCURVES_SPOLY_HPP
#define MVSPCURVES_SPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "mvspcurves/gf.hpp"

namespace mvsp {

/// Sparse univariate polynomial: exponent -> nonzero coefficient.
/// The zero polynomial is the empty map; its degree is nullopt.
class SparsePoly {
  public:
    explicit SparsePoly(FieldSpecPtr spec) : spec_(std::move(spec)) {}
    static SparsePoly monomial(FieldSpecPtr spec, Int exp, FieldElement coeff);
    static SparsePoly constant(FieldSpecPtr spec, FieldElement coeff);
    static SparsePoly x(FieldSpecPtr spec);

    const FieldSpecPtr& spec_ptr() const { return spec_; }
    const std::map<Int, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Int> degree() const;
    FieldElement coeff(const Int& exp) const;
    FieldElement leading_coeff() const;
    bool is_monic() const;
    size_t term_count() const { return terms_.size(); }

    void add_term(const Int& exp, const FieldElement& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly pow(Int k) const;

    bool operator==(const SparsePoly& rhs) const;
    bool operator!=(const SparsePoly& rhs) const { return !(*this == rhs); }

  private:
    FieldSpecPtr spec_;
    std::map<Int, FieldElement> terms_;
};

/// Exponent rule for reduction mod (x^{q^n} - x): 0 stays, e >= 1 maps to
/// ((e-1) mod (q^n - 1)) + 1, so x^{q^n - 1} and 1 stay distinct.  Exact as
/// polynomial division, evaluation-preserving on all of F_{q^n}.
SparsePoly reduce_exponents(const SparsePoly& P);

/// P^{q^k}: coefficients to the q^k, exponents times q^k.
SparsePoly frobenius_power(const SparsePoly& P, uint32_t k, bool reduce);

/// T_k(P) = sum_{i<k} P^{q^i}; the empty sum (k = 0) is 0.
SparsePoly trace_compose(const SparsePoly& P, uint32_t k, bool reduce);

FieldElement evaluate(const SparsePoly& P, const FieldElement& a);

std::string to_string(const SparsePoly& P);

/// Sparse bivariate polynomial in x, y.  Carries no curve relation; any
/// rewriting modulo a relation lives with its user.
class BiPoly {
  public:
    struct Key {
        Int x, y;
        bool operator<(const Key& o) const { return x < o.x || (x == o.x && y < o.y); }
        bool operator==(const Key& o) const { return x == o.x && y == o.y; }
    };

    explicit BiPoly(FieldSpecPtr spec) : spec_(std::move(spec)) {}
    static BiPoly monomial(FieldSpecPtr spec, Int xe, Int ye, FieldElement coeff);
    static BiPoly from_x(const SparsePoly& P);

    const FieldSpecPtr& spec_ptr() const { return spec_; }
    const std::map<Key, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Key& k, const FieldElement& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly pow(Int k) const;

    bool operator==(const BiPoly& rhs) const;
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

  private:
    FieldSpecPtr spec_;
    std::map<Key, FieldElement> terms_;
};

/// P^{q^k} for a bivariate P (no reduction).
BiPoly frobenius_power(const BiPoly& P, uint32_t k);

FieldElement evaluate(const BiPoly& P, const FieldElement& x, const FieldElement& y);

std::string to_string(const BiPoly& P);

}  // namespace mvsp

#endif
