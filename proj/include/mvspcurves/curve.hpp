#ifndef MVSPCURVES_CURVE_HPP
#define MVSPCURVES_CURVE_HPP

#include <optional>

#include "mvspcurves/profile.hpp"

namespace mvsp {

/// Size limits for the exhaustive oracles.
struct EnumBounds {
    uint64_t direct_pairs = uint64_t{1} << 26;  // direct count runs when q^{2n} <= this
    uint64_t fiber_elems = uint64_t{1} << 20;   // fiber count / value sets when q^n <= this

    static EnumBounds all(uint64_t m) { return {m, m}; }
};

/// The piecewise rule for the distinguished exponent r(n): the least
/// integer >= n/2 coprime to n.
uint32_t h_family_r(uint32_t n);

struct HParams {
    uint64_t q;
    uint32_t n;
    uint32_t r;
};

/// Validated parameter triple with r = r(n).
HParams h_params(uint64_t q, uint32_t n);

/// A curve T_n(y) = f(x) over F_{q^n} assembled from a Profile, with the
/// closed-form point count and (when gcd(delta, n) = 1) genus.
class CurveInstance {
  public:
    static CurveInstance make(Profile pr);

    const Profile& profile() const { return pr_; }
    const FieldSpecPtr& spec_ptr() const { return pr_.spec_ptr(); }
    const SparsePoly& f() const { return f_; }
    const SparsePoly& u() const { return u_; }
    const SparsePoly& v() const { return v_; }
    const Int& point_count_formula() const { return N_formula_; }
    /// Engaged only when gcd(delta, n) = 1.
    const std::optional<Int>& genus_formula() const { return genus_; }
    uint32_t gcd_cert() const { return gcd_cert_; }

    /// True when deg f > q^{n-1}, so the top-degree form of the defining
    /// polynomial is the single monomial x^{deg f} and (0:1:0) is the
    /// unique point at infinity.
    bool unique_infinite_point() const;
    /// The y-partial of T_n(y) - f(x) collapses to the constant 1.
    bool affine_nonsingular() const;

    /// Set when the profile is (0, r(n)) (for n >= 2).
    std::optional<uint32_t> h_r() const { return h_r_; }
    bool is_h_family() const { return h_r_.has_value(); }
    /// Set for any (0, r) profile with 2r >= n and gcd(r, n) = 1 -- the
    /// class the pole-order machinery covers.
    std::optional<uint32_t> wsg_r() const { return wsg_r_; }

  private:
    Profile pr_;
    SparsePoly f_, u_, v_;
    Int N_formula_;
    std::optional<Int> genus_;
    uint32_t gcd_cert_ = 0;
    std::optional<uint32_t> h_r_, wsg_r_;

    CurveInstance(Profile pr, SparsePoly f, SparsePoly u, SparsePoly v)
        : pr_(std::move(pr)), f_(std::move(f)), u_(std::move(u)), v_(std::move(v)) {}
};

/// Curve for the profile (0, r(n)) over F_{q^n}; q may be any prime power.
CurveInstance make_h_family(uint64_t q, uint32_t n, uint64_t max_order = FieldSpec::kDefaultMaxOrder);

struct PointCountResult {
    Int total;  // affine solutions + 1 (the unique point at infinity)
    bool direct_ran = false;
    bool fiber_ran = false;
    Int affine_direct;
    Int affine_fiber;
    bool methods_agree = true;
    bool matches_formula = false;
};

/// Exhaustive point count by two independent routes: the direct double
/// loop over (alpha, beta), and per-alpha fibers of size q^{n-1} once
/// f(alpha) lands in F_q.  Throws BoundExceeded when neither fits.
PointCountResult count_points_bruteforce(const CurveInstance& c, const EnumBounds& bounds = {});

struct ValueSetReport {
    std::vector<uint64_t> value_indices;  // sorted canonical indices of V_f
    bool equals_base_field = false;
    Int cardinality_bound;  // floor((q^n-1)/deg f) + 1
    bool cardinality_matches = false;
    bool ok() const { return equals_base_field && cardinality_matches; }
};

ValueSetReport value_set_check(const CurveInstance& c, const EnumBounds& bounds = {});

struct FiberRoot {
    uint64_t root_index;
    uint32_t multiplicity;
    bool in_base_field;  // root in F_q
};

struct FiberReport {
    uint64_t gamma_index;
    std::vector<FiberRoot> roots;  // roots found in F_{q^n}
    Int total_multiplicity;
    Int deficit;  // deg f minus mass found in F_{q^n}
    bool has_simple_root() const;
};

/// Roots of f - gamma in F_{q^n} with multiplicities by repeated division
/// by (x - alpha).  gamma must lie in F_q.
FiberReport fiber_analysis(const CurveInstance& c, const FieldElement& gamma, const EnumBounds& bounds = {});

struct FiberSweep {
    std::vector<FiberReport> fibers;
    uint32_t fibers_without_simple_root = 0;
    bool at_most_one_exceptional = false;
    /// Every root found in F_{q^n} has multiplicity coprime to p, and the
    /// degree mass outside F_{q^n} is a multiple of p.
    bool multiplicity_pattern_ok = false;
    bool ok() const { return at_most_one_exceptional && multiplicity_pattern_ok; }
};

FiberSweep fiber_sweep(const CurveInstance& c, const EnumBounds& bounds = {});

struct ReferenceFormulas {
    Int N;     // q^{2n-1}+1, shared by all three families
    Int g_nt;  // norm-trace genus
    Int g_gs;  // (q^{n-1}-1) q^{n-1} / 2
    Int g_h;   // q^{r(n)} (q^{n-1}-1) / 2
    uint32_t r;
};

ReferenceFormulas reference_formulas(uint64_t q, uint32_t n);

}  // namespace mvsp

#endif
