#include "mvspcurves/certify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>
#include <cstdio>
#include <sstream>

namespace mvsp {

Json json_int(const Int& v) {
    if (v >= Int(INT64_MIN) && v <= Int(INT64_MAX)) return v.convert_to<int64_t>();
    return v.str();
}

Json field_record(const FieldSpec& spec) {
    return Json{{"p", spec.p()}, {"e", spec.e()}, {"n", spec.n()}, {"modulus", spec.modulus()}};
}

Json profile_record(const Profile& pr) {
    UVPair uv = uv_decompose(pr);
    SparsePoly f = build_f(pr);
    Json rec;
    rec["q"] = pr.spec_ptr()->q();
    rec["n"] = pr.n();
    rec["r_list"] = pr.r_tuple();
    rec["delta"] = pr.steps();
    rec["eta"] = pr.orbit_class_size();
    rec["I"] = pr.reps();
    rec["M"] = pr.lead();
    rec["deg_f"] = json_int(f.degree().value());
    rec["deg_u"] = json_int(uv.u.degree().value());
    rec["deg_v"] = uv.v.degree() ? json_int(uv.v.degree().value()) : Json(nullptr);
    return rec;
}

CurveInstance make_instance(uint64_t q, uint32_t n, std::vector<uint32_t> r_tuple, uint64_t max_order) {
    auto [p, e] = factor_prime_power(q);
    auto spec = FieldSpec::make(p, e, n, max_order);
    if (r_tuple.empty()) r_tuple = {0, h_family_r(n)};
    return CurveInstance::make(Profile::make(spec, std::move(r_tuple)));
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string ratio_str(const Int& num, const Int& den) {
    double r = num.convert_to<double>() / den.convert_to<double>();
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", r);
    return buf;
}

}  // namespace

CertOutcome certify_instance(uint64_t q, uint32_t n, std::vector<uint32_t> r_tuple, const CertifyOptions& opt) {
    auto t_start = std::chrono::steady_clock::now();
    CertOutcome out;
    Json& rep = out.report;
    Json checks = Json::object();
    Json timing = Json::object();

    auto record = [&](const std::string& name, bool pass) {
        checks[name] = pass ? "pass" : "fail";
        if (!pass) out.any_fail = true;
    };
    auto record_skip = [&](const std::string& name, const std::string& why) {
        checks[name] = "skipped";
        checks[name + "_reason"] = why;
        out.any_skipped = true;
    };

    CurveInstance c = make_instance(q, n, std::move(r_tuple), opt.max_order);
    const auto& spec = *c.spec_ptr();
    const Profile& pr = c.profile();

    rep["instance"] = Json{{"q", q}, {"n", n}, {"r_list", pr.r_tuple()}, {"h_family", c.is_h_family()}};
    rep["field"] = field_record(spec);
    rep["profile"] = profile_record(pr);
    rep["polynomials"] = Json{{"f", to_string(c.f())}, {"u", to_string(c.u())}, {"v", to_string(c.v())}};

    auto t0 = std::chrono::steady_clock::now();
    StructureReport st = check_structure(pr);
    record("structure", st.all_pass());
    Json failed = Json::array();
    for (const auto& cl : st.clauses)
        if (!cl.pass) failed.push_back(Json{{"clause", cl.name}, {"detail", cl.detail}});
    rep["structure"] = Json{{"pass", st.all_pass()}, {"clauses_checked", st.clauses.size()}, {"failed", failed}};
    timing["structure"] = ms_since(t0);

    Json curve_rec;
    curve_rec["q"] = q;
    curve_rec["n"] = n;
    curve_rec["r_list"] = pr.r_tuple();
    curve_rec["deg_f"] = json_int(c.f().degree().value());
    curve_rec["deg_u"] = json_int(c.u().degree().value());
    curve_rec["N_formula"] = json_int(c.point_count_formula());
    curve_rec["gcd_delta_n"] = c.gcd_cert();
    curve_rec["genus_formula"] = c.genus_formula() ? json_int(*c.genus_formula()) : Json(nullptr);

    t0 = std::chrono::steady_clock::now();
    bool value_set_ok = false;
    try {
        ValueSetReport vs = value_set_check(c, opt.bounds);
        value_set_ok = vs.ok();
        record("value_set", vs.equals_base_field);
        record("mvsp_cardinality", vs.cardinality_matches);
        curve_rec["value_set_size"] = vs.value_indices.size();
    } catch (const BoundExceeded& ex) {
        record_skip("value_set", ex.what());
        record_skip("mvsp_cardinality", ex.what());
    }
    curve_rec["mvsp_ok"] = value_set_ok;
    curve_rec["value_set_ok"] = value_set_ok;
    timing["value_set"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    bool fibers_ok = false;
    try {
        FiberSweep fs = fiber_sweep(c, opt.bounds);
        fibers_ok = fs.ok();
        record("fibers", fibers_ok);
        curve_rec["fibers_without_simple_root"] = fs.fibers_without_simple_root;
    } catch (const BoundExceeded& ex) {
        record_skip("fibers", ex.what());
    }
    curve_rec["fibers_ok"] = fibers_ok;
    timing["fibers"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    try {
        PointCountResult pc = count_points_bruteforce(c, opt.bounds);
        record("point_count", pc.matches_formula);
        curve_rec["N_bruteforce"] = json_int(pc.total);
        curve_rec["point_count_methods"] =
            Json{{"direct", pc.direct_ran}, {"fiber", pc.fiber_ran}, {"agree", pc.methods_agree}};
    } catch (const BoundExceeded& ex) {
        record_skip("point_count", ex.what());
        curve_rec["N_bruteforce"] = nullptr;
    }
    timing["point_count"] = ms_since(t0);

    if (c.gcd_cert() == 1) record("infinity_model", c.unique_infinite_point() && c.affine_nonsingular());
    rep["curve"] = curve_rec;

    bool h_checks = c.is_h_family() && n >= 3;
    if (h_checks) {
        uint32_t r = *c.h_r();

        t0 = std::chrono::steady_clock::now();
        try {
            PoleOrderReport po = verify_pole_orders(c, opt.max_iters);
            record("pole_orders", po.all_ok);
            Json vrep = Json::array();
            for (const auto& e : po.entries)
                vrep.push_back(Json{{"function", e.name},
                                    {"pole_order", json_int(e.pole_order)},
                                    {"expected", json_int(e.expected)},
                                    {"iterations", e.iterations},
                                    {"ok", e.ok}});
            rep["valuation"] = vrep;
        } catch (const AmbiguousValuation& ex) {
            record("pole_orders", false);
            rep["valuation"] = Json{{"error", ex.what()}};
        }
        timing["pole_orders"] = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        record("yqn_identity", check_yqn_identity(c));
        bool snm_ok = true;
        for (uint32_t m = 0; m < n; ++m) snm_ok = snm_ok && check_snm_identity(m, n, q);
        record("snm_identity", snm_ok);
        timing["identities"] = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto gens = weierstrass_generators(q, n, r);
        NumericalSemigroup S(gens);
        bool sym = is_symmetric(S);
        bool tel = is_telescopic(gens);
        Json sg_rec;
        sg_rec["gens"] = gens;
        sg_rec["m_2"] = S.multiplicity();
        sg_rec["frobenius"] = S.frobenius_number();
        sg_rec["genus"] = S.genus();
        sg_rec["symmetric"] = sym;
        sg_rec["telescopic"] = tel;
        sg_rec["redundant_gens"] = redundancy_probe(gens);
        rep["semigroup"] = sg_rec;
        record("symmetric", sym);
        record("telescopic", tel);

        Json genus_rec;
        bool triple = false;
        if (c.genus_formula()) {
            Int from_deg_u = *c.genus_formula();
            Int closed_form = int_pow(Int(q), r) * (int_pow(Int(q), n - 1) - 1) / 2;
            Int gap_count(S.genus());
            genus_rec["from_deg_u"] = json_int(from_deg_u);
            genus_rec["closed_form"] = json_int(closed_form);
            genus_rec["gap_count"] = json_int(gap_count);
            if (tel) genus_rec["telescopic"] = json_int(telescopic_genus(gens));
            triple = from_deg_u == closed_form && closed_form == gap_count &&
                     (!tel || telescopic_genus(gens) == gap_count);
        }
        rep["genus_agreement"] = genus_rec;
        record("genus_agreement", triple);

        try {
            bool castle = castle_check(c, S, opt.bounds);
            record("castle", castle);
            rep["castle"] = castle;
        } catch (const BoundExceeded& ex) {
            record_skip("castle", ex.what());
        }
        timing["semigroup"] = ms_since(t0);
    }

    if (n >= 2) {
        ReferenceFormulas ref = reference_formulas(q, n);
        Json refs;
        refs["N"] = json_int(ref.N);
        refs["g_nt"] = json_int(ref.g_nt);
        refs["g_gs"] = json_int(ref.g_gs);
        refs["g_h"] = json_int(ref.g_h);
        refs["r"] = ref.r;
        refs["ratio_h"] = ratio_str(ref.N, ref.g_h);
        refs["ratio_gs"] = ratio_str(ref.N, ref.g_gs);
        rep["references"] = refs;
    }

    out.pass = !out.any_fail && !out.any_skipped;
    rep["checks"] = checks;
    rep["verdict"] = out.any_fail ? "fail" : (out.any_skipped ? "incomplete" : "pass");
    if (opt.with_timing) {
        timing["total"] = ms_since(t_start);
        rep["timing_ms"] = timing;
    }
    return out;
}

std::string render_text(const Json& j, int indent) {
    std::ostringstream os;
    std::string pad(indent * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
                os << pad << k << ":\n" << render_text(v, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) os << render_text(v, indent) << pad << "-\n";
    }
    return os.str();
}

namespace {

std::string sweep_row(uint64_t q, uint32_t n, const std::vector<uint32_t>& rt, const CertifyOptions& copt) {
    auto render_r = [](const std::vector<uint32_t>& r) {
        std::string s = "[";
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) s += ';';
            s += std::to_string(r[i]);
        }
        return s + "]";
    };
    std::vector<std::string> cells(14, "NA");
    cells[0] = std::to_string(q);
    cells[1] = std::to_string(n);
    cells[2] = render_r(rt);
    try {
        CurveInstance c = make_instance(q, n, rt, copt.max_order);
        cells[3] = c.f().degree().value().str();
        cells[4] = c.u().degree().value().str();
        cells[5] = c.point_count_formula().str();
        Int N_count;
        bool have_count = false;
        try {
            PointCountResult pc = count_points_bruteforce(c, copt.bounds);
            N_count = pc.total;
            have_count = true;
            cells[6] = pc.total.str();
        } catch (const BoundExceeded&) {
            cells[6] = "skipped:bound";
        }
        if (c.genus_formula()) cells[7] = c.genus_formula()->str();
        try {
            ValueSetReport vs = value_set_check(c, copt.bounds);
            cells[9] = vs.ok() ? "1" : "0";
        } catch (const BoundExceeded&) {
            cells[9] = "skipped:bound";
        }
        if (c.is_h_family() && n >= 3) {
            auto gens = weierstrass_generators(q, n, *c.h_r());
            NumericalSemigroup S(gens);
            cells[8] = std::to_string(S.genus());
            cells[10] = is_symmetric(S) ? "1" : "0";
            cells[11] = is_telescopic(gens) ? "1" : "0";
            try {
                cells[12] = castle_check(c, S, copt.bounds) ? "1" : "0";
            } catch (const BoundExceeded&) {
                cells[12] = "skipped:bound";
            }
        }
        if (have_count && c.genus_formula() && *c.genus_formula() > 0)
            cells[13] = ratio_str(N_count, *c.genus_formula());
    } catch (const BoundExceeded&) {
        for (size_t i = 3; i < cells.size(); ++i) cells[i] = "skipped:bound";
    }
    std::string row;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    return row + "\n";
}

}  // namespace

std::string sweep_csv(const SweepOptions& opt) {
    std::vector<uint64_t> qs = opt.q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    // Instance list in output order; rows computed in parallel, emitted by
    // this sort order rather than completion order.
    std::vector<std::tuple<uint64_t, uint32_t, std::vector<uint32_t>>> instances;
    for (uint64_t q : qs) {
        for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
            std::vector<std::vector<uint32_t>> profiles;
            if (opt.all_profiles) {
                for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
                    std::vector<uint32_t> r{0};
                    for (uint32_t b = 1; b < n; ++b)
                        if (mask & (uint64_t{1} << (b - 1))) r.push_back(b);
                    profiles.push_back(std::move(r));
                }
                std::sort(profiles.begin(), profiles.end());
            } else {
                profiles.push_back({0, h_family_r(n)});
            }
            for (auto& rt : profiles) instances.emplace_back(q, n, std::move(rt));
        }
    }

    size_t wave = std::max<size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::string> rows(instances.size());
    for (size_t base = 0; base < instances.size(); base += wave) {
        size_t end = std::min(base + wave, instances.size());
        std::vector<std::future<std::string>> batch;
        for (size_t i = base; i < end; ++i) {
            const auto& [q, n, rt] = instances[i];
            batch.push_back(std::async(std::launch::async, sweep_row, q, n, rt, opt.cert));
        }
        for (size_t i = base; i < end; ++i) rows[i] = batch[i - base].get();
    }

    std::ostringstream os;
    os << "q,n,r_list,deg_f,deg_u,N_formula,N_bruteforce,genus_formula,genus_semigroup,"
          "mvsp_ok,symmetric,telescopic,castle,ratio_N_over_g\n";
    for (const auto& row : rows) os << row;
    return os.str();
}

}  // namespace mvsp
