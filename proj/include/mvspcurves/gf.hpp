#ifndef MVSPCURVES_GF_HPP
#define MVSPCURVES_GF_HPP

#include <memory>
#include <vector>

#include "mvspcurves/common.hpp"

namespace mvsp {

class FieldElement;

/// Explicit model of F_{p^{e*n}} with the distinguished subfield tower
/// F_p <= F_q <= F_{q^n}, q = p^e.  Elements are coefficient vectors over
/// F_p relative to a monic irreducible modulus of degree e*n; the modulus
/// is the minimal one in the integer encoding sum(c_i * p^i) of its
/// non-leading part, so construction is reproducible without tables.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    static constexpr uint64_t kDefaultMaxOrder = uint64_t{1} << 26;
    /// Zech/log tables are built below this order; multiplication through
    /// them is bit-identical to the polynomial-basis path.
    static constexpr uint64_t kTableLimit = uint64_t{1} << 20;

    static std::shared_ptr<const FieldSpec> make(uint32_t p, uint32_t e, uint32_t n,
                                                 uint64_t max_order = kDefaultMaxOrder);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t n() const { return n_; }
    uint32_t degree() const { return deg_; }
    uint64_t q() const { return q_; }
    uint64_t order() const { return order_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    FieldElement zero() const;
    FieldElement one() const;
    /// Scalar k mod p embedded into the prime subfield.
    FieldElement from_int(uint64_t k) const;
    /// Decode the canonical index sum(c_i * p^i) in [0, order).
    FieldElement element(uint64_t index) const;
    FieldElement from_coeffs(std::vector<uint32_t> coeffs) const;

    bool same_field(const FieldSpec& other) const;

    // Raw coefficient-vector arithmetic (vectors of length degree()).
    std::vector<uint32_t> add_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
    std::vector<uint32_t> sub_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
    std::vector<uint32_t> neg_raw(const std::vector<uint32_t>& a) const;
    std::vector<uint32_t> mul_raw(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
    /// Polynomial-basis multiplication, bypassing the lookup tables.
    std::vector<uint32_t> mul_basis(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;

    uint64_t index_of(const std::vector<uint32_t>& coeffs) const;
    std::vector<uint32_t> coeffs_of(uint64_t index) const;

  private:
    FieldSpec() = default;
    void build_tables();

    uint32_t p_ = 0, e_ = 0, n_ = 0, deg_ = 0;
    uint64_t q_ = 0, order_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;  // exp_[k] = index of g^k, k in [0, order-1)
    std::vector<uint32_t> log_;  // log_[index] for index != 0
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldElement {
  public:
    FieldElement() = default;

    const FieldSpecPtr& spec_ptr() const { return spec_; }
    const FieldSpec& spec() const;
    const std::vector<uint32_t>& coeffs() const { return c_; }
    uint64_t index() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// a^k for unbounded k >= 0 (0^0 = 1).
    FieldElement pow(const Int& k) const;
    FieldElement inverse() const;

  private:
    friend class FieldSpec;
    FieldElement(FieldSpecPtr spec, std::vector<uint32_t> c) : spec_(std::move(spec)), c_(std::move(c)) {}

    FieldSpecPtr spec_;
    std::vector<uint32_t> c_;
};

/// a^{q^k}, the relative Frobenius iterated k times (base q = p^e).
FieldElement frobenius(const FieldElement& a, uint32_t k);

/// a + a^q + ... + a^{q^{k-1}}; k = 0 gives 0.  Requires 0 <= k <= n.
FieldElement partial_trace(const FieldElement& a, uint32_t k);

/// All elements fixed by the q^d-power map, in canonical index order.
/// Requires d | n; the result has exactly q^d elements.
std::vector<FieldElement> subfield_elements(const FieldSpecPtr& spec, uint32_t d);

/// "[c0,c1,...]" with least-significant basis coordinate first.
std::string to_string(const FieldElement& a);

bool is_prime_u64(uint64_t x);
/// Factor q as p^e with p prime; throws InvalidInput otherwise.
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q);

}  // namespace mvsp

#endif
