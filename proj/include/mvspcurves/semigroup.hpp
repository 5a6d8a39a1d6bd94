#ifndef MVSPCURVES_SEMIGROUP_HPP
#define MVSPCURVES_SEMIGROUP_HPP

#include <vector>

#include "mvspcurves/curve.hpp"

namespace mvsp {

/// Numerical semigroup generated by a sequence of positive integers with
/// gcd 1.  Membership is tabulated up to the conductor; the generator
/// order is preserved because the telescopic test consumes it as given.
class NumericalSemigroup {
  public:
    explicit NumericalSemigroup(std::vector<uint64_t> gens);

    const std::vector<uint64_t>& generators() const { return gens_; }
    uint64_t multiplicity() const { return m2_; }              // least nonzero element
    int64_t frobenius_number() const { return frobenius_; }    // -1 when gap-free
    uint64_t genus() const { return genus_; }                  // number of gaps
    uint64_t conductor() const { return conductor_; }
    bool contains(uint64_t x) const;
    std::vector<uint64_t> gaps() const;

  private:
    std::vector<uint64_t> gens_;
    std::vector<char> member_;  // indices [0, table_size)
    uint64_t m2_ = 0, genus_ = 0, conductor_ = 0;
    int64_t frobenius_ = -1;
};

/// F = 2g - 1, cross-checked against x in S <=> F - x not in S both ways.
bool is_symmetric(const NumericalSemigroup& S);

/// Order-sensitive ladder test: with d_i = gcd(a_1..a_i), every a_i/d_i
/// (i >= 2) must lie in the semigroup generated by a_1/d_{i-1}, ...,
/// a_{i-1}/d_{i-1}.  Callers pass generators in the intended order.
bool is_telescopic(const std::vector<uint64_t>& gens);

/// (sum_i (d_{i-1}/d_i - 1) a_i + 1) / 2 with d_0 = 0, so the first term
/// contributes -a_1.  Requires a telescopic input; equals the gap count.
Int telescopic_genus(const std::vector<uint64_t>& gens);

/// (q^{n-1}, q^{n-1}+q^{r-1}, q^n+q^{n-r}, q^{2r-1}+q^{n-r-1},
///  q^{2r}-q^n+q^r+1) in the order the ladder test needs.
std::vector<uint64_t> weierstrass_generators(uint64_t q, uint32_t n, uint32_t r);

/// Generators expressible from the remaining ones.
std::vector<uint64_t> redundancy_probe(const std::vector<uint64_t>& gens);

/// Symmetric semigroup and an exhaustive count of q^n * m_2 + 1 points.
bool castle_check(const CurveInstance& c, const NumericalSemigroup& S, const EnumBounds& bounds = {});

}  // namespace mvsp

#endif
