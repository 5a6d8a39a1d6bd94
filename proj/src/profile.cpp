#include "mvspcurves/profile.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvsp {

Profile Profile::make(FieldSpecPtr spec, std::vector<uint32_t> r_tuple) {
    uint32_t n = spec->n();
    if (r_tuple.empty()) throw InvalidInput("empty r_list");
    bool shaped = r_tuple[0] == 0;
    for (size_t i = 0; i + 1 < r_tuple.size(); ++i)
        if (r_tuple[i] >= r_tuple[i + 1]) shaped = false;
    if (!shaped) throw InvalidInput("r_list not strictly increasing from 0");
    if (r_tuple.back() >= n) throw InvalidInput("r_list entries must be < n");

    Profile pr;
    pr.spec_ = std::move(spec);
    pr.r_tuple_ = std::move(r_tuple);
    uint32_t t = pr.t();

    std::vector<uint32_t> rr = pr.r_tuple_;
    rr.push_back(n);
    pr.steps_.resize(t + 1);
    for (uint32_t i = 0; i <= t; ++i) pr.steps_[i] = rr[t + 1 - i] - rr[t - i];
    pr.min_step_ = *std::min_element(pr.steps_.begin(), pr.steps_.end());

    pr.ladders_.assign(t + 1, std::vector<uint32_t>(t + 1));
    for (uint32_t i = 0; i <= t; ++i) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j <= t; ++j) {
            // index (i-1-j) mod (t+1)
            uint32_t idx = (i + t - j) % (t + 1);
            acc += pr.steps_[idx];
            pr.ladders_[i][j] = acc;
        }
    }

    Int q(pr.spec_->q());
    Int e0 = 1;
    for (size_t i = 1; i < pr.r_tuple_.size(); ++i) e0 += int_pow(q, pr.r_tuple_[i]);
    pr.orbit_.push_back(reduce_exponents(SparsePoly::monomial(pr.spec_, e0, pr.spec_->one())));
    for (uint32_t i = 1; i <= t; ++i)
        pr.orbit_.push_back(frobenius_power(pr.orbit_[i - 1], pr.steps_[i - 1], true));

    pr.classes_.assign(t + 1, {});
    for (uint32_t i = 0; i <= t; ++i)
        for (uint32_t j = 0; j <= t; ++j)
            if (pr.orbit_[j] == pr.orbit_[i]) pr.classes_[i].push_back(j);
    std::set<uint32_t> reps;
    for (const auto& cls : pr.classes_) reps.insert(cls.front());
    pr.reps_.assign(reps.begin(), reps.end());
    pr.eta_ = static_cast<uint32_t>(pr.classes_[0].size());

    // Lead representative: maximal orbit-monomial degree.  Distinct
    // representatives carry distinct monomials, so the maximum is unique;
    // a tie would mean the orbit bookkeeping is broken.
    Int best;
    bool have_best = false;
    for (uint32_t e : pr.reps_) {
        Int d = pr.orbit_[e].degree().value();
        if (!have_best || d > best) {
            best = std::move(d);
            pr.lead_ = e;
            have_best = true;
        } else if (d == best) {
            throw std::logic_error("orbit degree tie between distinct representatives");
        }
    }
    return pr;
}

SparsePoly build_f(const Profile& pr) {
    SparsePoly f(pr.spec_ptr());
    for (uint32_t e : pr.reps()) f += trace_compose(pr.orbit()[e], pr.steps()[e], true);
    return f;
}

SparsePoly build_f_tilde(const Profile& pr) {
    Int q(pr.spec_ptr()->q());
    Int e0 = 1;
    for (size_t i = 1; i < pr.r_tuple().size(); ++i) e0 += int_pow(q, pr.r_tuple()[i]);
    SparsePoly f0 = reduce_exponents(SparsePoly::monomial(pr.spec_ptr(), e0, pr.spec_ptr()->one()));
    return trace_compose(f0, pr.n(), true);
}

UVPair uv_decompose(const Profile& pr) {
    SparsePoly u(pr.spec_ptr()), v(pr.spec_ptr());
    for (uint32_t e : pr.reps()) {
        u += pr.orbit()[e];
        v += trace_compose(pr.orbit()[e], pr.steps()[e] - pr.min_step(), true);
    }
    return {std::move(u), std::move(v)};
}

Int predicted_degree(const Profile& pr) {
    Int q(pr.spec_ptr()->q());
    Int sum = 0;
    for (uint32_t d : pr.ladder(pr.lead())) sum += int_pow(q, d - 1);
    return sum;
}

bool StructureReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

StructureReport check_structure(const Profile& pr) {
    StructureReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.clauses.push_back({std::move(name), pass, std::move(detail)});
    };
    const auto& spec = *pr.spec_ptr();
    Int q(spec.q());
    uint32_t t = pr.t();

    // (i) deg f_i = 1 + q^{P_1} + ... + q^{P_{i-1}} + q^{P_i}(1 + q^{r_1} + ... + q^{r_{t-i}})
    // with P_k = delta_{i-1} + ... + delta_{i-k}.
    for (uint32_t i = 1; i <= t; ++i) {
        Int expect = 1;
        uint32_t P = 0;
        for (uint32_t k = 1; k + 1 <= i; ++k) {
            P += pr.steps()[i - k];
            expect += int_pow(q, P);
        }
        P += pr.steps()[0];
        Int inner = 1;
        for (uint32_t j = 1; j + i <= t; ++j) inner += int_pow(q, pr.r_tuple()[j]);
        expect += int_pow(q, P) * inner;
        bool ok = pr.orbit()[i].degree() == expect;
        add("orbit_degree[" + std::to_string(i) + "]", ok,
            ok ? "" : "deg f_" + std::to_string(i) + " != " + expect.str());
    }

    bool equal_eta = std::all_of(pr.classes().begin(), pr.classes().end(),
                                 [&](const auto& c) { return c.size() == pr.orbit_class_size(); });
    add("class_sizes_equal", equal_eta);
    add("class_size_divides_n", pr.n() % pr.orbit_class_size() == 0);

    SparsePoly f = build_f(pr);
    SparsePoly ft = build_f_tilde(pr);
    SparsePoly eta_f = f * SparsePoly::constant(pr.spec_ptr(), spec.from_int(pr.orbit_class_size()));
    add("f_tilde_is_eta_f", ft == eta_f);

    UVPair uv = uv_decompose(pr);
    add("lead_step_minimal", pr.steps()[pr.lead()] == pr.min_step());
    add("deg_u_is_lead_degree", uv.u.degree() == pr.orbit()[pr.lead()].degree());

    Int deg_u = uv.u.degree().value();
    add("deg_u_mod_p", deg_u % spec.p() == 1);
    add("deg_v_below_deg_u", !uv.v.degree() || uv.v.degree().value() < deg_u);

    SparsePoly recon = trace_compose(uv.u, pr.min_step(), true) + frobenius_power(uv.v, pr.min_step(), true);
    add("uv_identity", recon == f);

    add("degree_formula", f.degree() == predicted_degree(pr));
    add("monic", f.is_monic());

    if (std::is_sorted(pr.steps().begin(), pr.steps().end())) {
        Int alt = int_pow(q, pr.n() - 1);
        for (size_t i = 1; i < pr.r_tuple().size(); ++i) alt += int_pow(q, pr.r_tuple()[i] - 1);
        add("sorted_steps_degree", f.degree() == alt);
    }

    for (uint32_t i = 0; i <= t; ++i) {
        bool ok = frobenius_power(pr.orbit()[i], pr.steps()[i], true) == pr.orbit()[(i + 1) % (t + 1)];
        add("orbit_cycle[" + std::to_string(i) + "]", ok);
    }
    return rep;
}

}  // namespace mvsp
