#include "mvspcurves/curve.hpp"

#include <algorithm>
#include <numeric>

namespace mvsp {

uint32_t h_family_r(uint32_t n) {
    if (n < 2) throw InvalidInput("h-family requires n >= 2");
    if (n == 2) return 1;
    if (n % 4 == 0) return n / 2 + 1;
    if (n % 2 == 0) return n / 2 + 2;
    return (n + 1) / 2;
}

CurveInstance CurveInstance::make(Profile pr) {
    SparsePoly f = build_f(pr);
    UVPair uv = uv_decompose(pr);
    CurveInstance c(std::move(pr), std::move(f), std::move(uv.u), std::move(uv.v));

    const auto& spec = *c.pr_.spec_ptr();
    uint32_t n = spec.n();
    c.N_formula_ = int_pow(Int(spec.q()), 2 * n - 1) + 1;
    c.gcd_cert_ = std::gcd(c.pr_.min_step(), n);
    if (c.gcd_cert_ == 1) {
        Int num = (int_pow(Int(spec.q()), n - 1) - 1) * (c.u_.degree().value() - 1);
        c.genus_ = num / 2;
    }
    if (c.pr_.t() == 1) {
        uint32_t r = c.pr_.r_tuple()[1];
        if (r == h_family_r(n)) c.h_r_ = r;
        if (2 * r >= n && std::gcd(r, n) == 1) c.wsg_r_ = r;
    }
    return c;
}

bool CurveInstance::unique_infinite_point() const {
    return f_.degree().value() > int_pow(Int(spec_ptr()->q()), spec_ptr()->n() - 1);
}

bool CurveInstance::affine_nonsingular() const {
    // d/dy of T_n(y) - f(x): only the y^1 term has exponent coprime to p.
    const auto& spec = *spec_ptr();
    Int q(spec.q());
    for (uint32_t i = 1; i < spec.n(); ++i) {
        Int e = int_pow(q, i);
        if (e % spec.p() != 0) return false;
    }
    return true;
}

HParams h_params(uint64_t q, uint32_t n) {
    factor_prime_power(q);
    HParams hp{q, n, h_family_r(n)};
    if (std::gcd(hp.r, n) != 1 || 2 * hp.r < n) throw std::logic_error("piecewise rule broke its invariant");
    return hp;
}

CurveInstance make_h_family(uint64_t q, uint32_t n, uint64_t max_order) {
    HParams hp = h_params(q, n);
    auto [p, e] = factor_prime_power(q);
    auto spec = FieldSpec::make(p, e, n, max_order);
    return CurveInstance::make(Profile::make(spec, {0, hp.r}));
}

namespace {

// Canonical index of f(alpha) for every alpha, in index order.
std::vector<uint64_t> evaluation_table(const CurveInstance& c) {
    const auto& spec = c.spec_ptr();
    std::vector<uint64_t> out(spec->order());
    for (uint64_t i = 0; i < spec->order(); ++i) out[i] = evaluate(c.f(), spec->element(i)).index();
    return out;
}

std::vector<uint64_t> trace_table(const FieldSpecPtr& spec) {
    std::vector<uint64_t> out(spec->order());
    for (uint64_t i = 0; i < spec->order(); ++i) out[i] = partial_trace(spec->element(i), spec->n()).index();
    return out;
}

}  // namespace

PointCountResult count_points_bruteforce(const CurveInstance& c, const EnumBounds& bounds) {
    const auto& spec = c.spec_ptr();
    uint64_t order = spec->order();
    bool can_direct = Int(order) * Int(order) <= Int(bounds.direct_pairs);
    bool can_fiber = order <= bounds.fiber_elems;
    if (!can_direct && !can_fiber)
        throw BoundExceeded("field of order " + std::to_string(order) + " exceeds both enumeration bounds");

    PointCountResult res;
    auto fa = evaluation_table(c);

    if (can_direct) {
        auto tr = trace_table(spec);
        Int affine = 0;
        for (uint64_t a = 0; a < order; ++a) {
            uint64_t target = fa[a];
            uint64_t hits = 0;
            for (uint64_t b = 0; b < order; ++b)
                if (tr[b] == target) ++hits;
            affine += hits;
        }
        res.affine_direct = affine;
        res.direct_ran = true;
    }

    if (can_fiber) {
        Int fiber_size = int_pow(Int(spec->q()), spec->n() - 1);
        Int affine = 0;
        std::vector<uint64_t> stray;  // alphas with f(alpha) outside F_q
        for (uint64_t a = 0; a < order; ++a) {
            FieldElement gamma = spec->element(fa[a]);
            if (frobenius(gamma, 1) == gamma) {
                affine += fiber_size;
            } else {
                stray.push_back(a);
            }
        }
        if (!stray.empty()) {
            // f is then not F_q-valued; count those fibers directly.
            auto tr = trace_table(spec);
            for (uint64_t a : stray) {
                uint64_t hits = 0;
                for (uint64_t b = 0; b < order; ++b)
                    if (tr[b] == fa[a]) ++hits;
                affine += hits;
            }
        }
        res.affine_fiber = affine;
        res.fiber_ran = true;
    }

    if (res.direct_ran && res.fiber_ran) res.methods_agree = res.affine_direct == res.affine_fiber;
    res.total = (res.direct_ran ? res.affine_direct : res.affine_fiber) + 1;
    res.matches_formula = res.methods_agree && res.total == c.point_count_formula();
    return res;
}

ValueSetReport value_set_check(const CurveInstance& c, const EnumBounds& bounds) {
    const auto& spec = c.spec_ptr();
    uint64_t order = spec->order();
    if (order > bounds.fiber_elems)
        throw BoundExceeded("value-set enumeration over order " + std::to_string(order) + " exceeds the bound");

    ValueSetReport rep;
    auto fa = evaluation_table(c);
    std::vector<uint64_t> vals(fa);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    rep.value_indices = std::move(vals);

    std::vector<uint64_t> base;
    for (const auto& a : subfield_elements(spec, 1)) base.push_back(a.index());
    std::sort(base.begin(), base.end());
    rep.equals_base_field = rep.value_indices == base;

    rep.cardinality_bound = (Int(order) - 1) / c.f().degree().value() + 1;
    rep.cardinality_matches = Int(rep.value_indices.size()) == rep.cardinality_bound;
    return rep;
}

bool FiberReport::has_simple_root() const {
    return std::any_of(roots.begin(), roots.end(), [](const FiberRoot& r) { return r.multiplicity == 1; });
}

FiberReport fiber_analysis(const CurveInstance& c, const FieldElement& gamma, const EnumBounds& bounds) {
    const auto& spec = c.spec_ptr();
    uint64_t order = spec->order();
    if (order > bounds.fiber_elems)
        throw BoundExceeded("fiber enumeration over order " + std::to_string(order) + " exceeds the bound");
    if (frobenius(gamma, 1) != gamma) throw InvalidInput("gamma must lie in the base field F_q");

    Int deg = c.f().degree().value();
    uint64_t deg_u64 = checked_u64(deg, "deg f");

    // Dense coefficients of f - gamma.
    std::vector<FieldElement> coeffs(deg_u64 + 1, spec->zero());
    for (const auto& [e, coef] : c.f().terms()) coeffs[checked_u64(e, "exponent")] = coef;
    coeffs[0] -= gamma;

    FiberReport rep;
    rep.gamma_index = gamma.index();
    Int total = 0;
    for (uint64_t idx = 0; idx < order; ++idx) {
        FieldElement alpha = spec->element(idx);
        std::vector<FieldElement> cur = coeffs;
        uint32_t mult = 0;
        while (cur.size() > 1) {
            // Horner evaluation; quotient coefficients fall out of the same pass.
            std::vector<FieldElement> quot(cur.size() - 1, spec->zero());
            FieldElement acc = spec->zero();
            for (size_t k = cur.size(); k-- > 0;) {
                acc = acc * alpha + cur[k];
                if (k > 0) quot[k - 1] = acc;
            }
            if (!acc.is_zero()) break;
            cur = std::move(quot);
            ++mult;
        }
        if (mult > 0) {
            rep.roots.push_back({idx, mult, frobenius(alpha, 1) == alpha});
            total += mult;
        }
    }
    rep.total_multiplicity = total;
    rep.deficit = deg - total;
    return rep;
}

FiberSweep fiber_sweep(const CurveInstance& c, const EnumBounds& bounds) {
    const auto& spec = c.spec_ptr();
    FiberSweep sw;
    bool pattern = true;
    for (const auto& gamma : subfield_elements(spec, 1)) {
        FiberReport rep = fiber_analysis(c, gamma, bounds);
        if (!rep.has_simple_root()) ++sw.fibers_without_simple_root;
        for (const auto& root : rep.roots)
            if (root.multiplicity % spec->p() == 0) pattern = false;
        if (rep.deficit % spec->p() != 0) pattern = false;
        sw.fibers.push_back(std::move(rep));
    }
    sw.at_most_one_exceptional = sw.fibers_without_simple_root <= 1;
    sw.multiplicity_pattern_ok = pattern;
    return sw;
}

ReferenceFormulas reference_formulas(uint64_t q, uint32_t n) {
    if (n < 2) throw InvalidInput("reference formulas need n >= 2");
    ReferenceFormulas ref;
    Int Q(q);
    ref.N = int_pow(Q, 2 * n - 1) + 1;
    Int qn1 = int_pow(Q, n - 1);
    Int tail = 0;  // q + q^2 + ... + q^{n-1}
    for (uint32_t i = 1; i < n; ++i) tail += int_pow(Q, i);
    ref.g_nt = (qn1 - 1) * tail / 2;
    ref.g_gs = (qn1 - 1) * qn1 / 2;
    ref.r = h_family_r(n);
    ref.g_h = int_pow(Q, ref.r) * (qn1 - 1) / 2;
    return ref;
}

}  // namespace mvsp
