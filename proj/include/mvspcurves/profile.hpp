#ifndef MVSPCURVES_PROFILE_HPP
#define MVSPCURVES_PROFILE_HPP

#include <string>
#include <vector>

#include "mvspcurves/spoly.hpp"

namespace mvsp {

/// A defining tuple r_tuple = (r_0, ..., r_t) with r_0 = 0, strictly
/// increasing, r_t < n, together with everything derived from it: the step
/// sequence delta_i = r_{t+1-i} - r_{t-i} (with r_{t+1} = n), the monomial
/// orbit f_0 = x^{1+q^{r_1}+...+q^{r_t}}, f_i = f_{i-1}^{q^{delta_{i-1}}}
/// mod (x^{q^n}-x), the equality classes of the orbit, and the ladder
/// matrix of cyclic partial step sums that governs degrees.
class Profile {
  public:
    static Profile make(FieldSpecPtr spec, std::vector<uint32_t> r_tuple);

    const FieldSpecPtr& spec_ptr() const { return spec_; }
    uint32_t n() const { return spec_->n(); }
    uint32_t t() const { return static_cast<uint32_t>(r_tuple_.size()) - 1; }
    const std::vector<uint32_t>& r_tuple() const { return r_tuple_; }
    const std::vector<uint32_t>& steps() const { return steps_; }          // delta_i
    uint32_t min_step() const { return min_step_; }                       // delta
    /// ladder(i) = (Delta_{i,0}, ..., Delta_{i,t}), strictly increasing,
    /// final entry n.
    const std::vector<uint32_t>& ladder(uint32_t i) const { return ladders_[i]; }
    const std::vector<std::vector<uint32_t>>& ladders() const { return ladders_; }
    const std::vector<SparsePoly>& orbit() const { return orbit_; }       // f_0..f_t
    const std::vector<std::vector<uint32_t>>& classes() const { return classes_; }  // I_i
    const std::vector<uint32_t>& reps() const { return reps_; }           // I, ascending
    uint32_t orbit_class_size() const { return eta_; }                    // eta
    /// Representative in reps() whose orbit monomial has maximal degree;
    /// its ladder row yields deg f and its monomial degree equals deg u.
    uint32_t lead() const { return lead_; }

  private:
    Profile() = default;
    FieldSpecPtr spec_;
    std::vector<uint32_t> r_tuple_, steps_;
    uint32_t min_step_ = 0, eta_ = 0, lead_ = 0;
    std::vector<std::vector<uint32_t>> ladders_, classes_;
    std::vector<uint32_t> reps_;
    std::vector<SparsePoly> orbit_;
};

/// f = sum_{e in reps} T_{delta_e}(f_e): monic, degree predicted_degree().
SparsePoly build_f(const Profile& pr);

/// T_n(f_0) mod (x^{q^n}-x); equals eta * f in the coefficient field and
/// vanishes when p | eta.
SparsePoly build_f_tilde(const Profile& pr);

struct UVPair {
    SparsePoly u, v;
};

/// The split f = T_delta(u) + v^{q^delta} with u = sum f_e and
/// v = sum T_{delta_e - delta}(f_e) over e in reps.
UVPair uv_decompose(const Profile& pr);

/// sum_j q^{Delta_{M,j}-1} over the lead() ladder row.
Int predicted_degree(const Profile& pr);

struct StructureReport {
    struct Clause {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Clause> clauses;
    bool all_pass() const;
};

/// Certifies on one instance: the per-step degree formula for each orbit
/// element, equal class sizes with eta | n, f_tilde = eta*f, the lead
/// properties delta_M = delta and deg u = deg f_M, the u/v identity with
/// deg u = 1 mod p and deg v < deg u, deg f = predicted_degree, monicity,
/// the sorted-steps degree form when applicable, and orbit cyclicity.
StructureReport check_structure(const Profile& pr);

}  // namespace mvsp

#endif
