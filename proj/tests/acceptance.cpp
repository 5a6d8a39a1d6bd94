// Acceptance suite: every top-level claim the library certifies, run at
// full strength with exact integer tolerances.  One line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvspcurves/certify.hpp"

using namespace mvsp;

namespace {

const std::vector<std::pair<uint64_t, uint32_t>> kInstances = {{2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 3}, {4, 3}};

struct Harness {
    int failures = 0;
    void run(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        std::printf("criterion %d [%s] %s%s%s\n", id, ok ? "PASS" : "FAIL", label.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    Harness h;

    h.run(1, "point counts equal q^(2n-1)+1 on all six instances (< 10 s)", [](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (auto [q, n] : kInstances) {
            CurveInstance c = make_h_family(q, n);
            PointCountResult pc = count_points_bruteforce(c);
            Int expect = int_pow(Int(q), 2 * n - 1) + 1;
            if (!(pc.direct_ran && pc.fiber_ran && pc.methods_agree && pc.total == expect)) ok = false;
            if (q == 2 && n == 5 && pc.total != 513) ok = false;
        }
        double secs = seconds_since(t0);
        std::ostringstream os;
        os << "elapsed " << secs << " s";
        detail = os.str();
        return ok && secs < 10.0;
    });

    h.run(2, "genus agreement: curve formula = closed form = gap count", [](std::string& detail) {
        bool ok = true;
        for (auto [q, n] : kInstances) {
            uint32_t r = h_family_r(n);
            CurveInstance c = make_h_family(q, n);
            Int from_deg_u = c.genus_formula().value();
            Int closed = int_pow(Int(q), r) * (int_pow(Int(q), n - 1) - 1) / 2;
            NumericalSemigroup S(weierstrass_generators(q, n, r));
            Int gap(S.genus());
            if (from_deg_u != closed || closed != gap) ok = false;
            if (q == 2 && n == 5 && gap != 60) ok = false;
            if (q == 2 && n == 3 && gap != 6) ok = false;
            // the plus-sign variant of the closed form disagrees; the gap
            // count decides between the two printed expressions
            Int plus_variant = int_pow(Int(q), r) * (int_pow(Int(q), n - 1) + 1) / 2;
            if (plus_variant == gap) ok = false;
        }
        detail = "minus-sign closed form confirmed";
        return ok;
    });

    h.run(3, "minimal value sets: V_f = F_q with the floor cardinality", [](std::string&) {
        std::vector<std::tuple<uint64_t, uint32_t, std::vector<uint32_t>>> cases;
        for (auto [q, n] : kInstances) cases.push_back({q, n, {0, h_family_r(n)}});
        for (uint64_t q : {2, 3}) {
            cases.push_back({q, 2, {0, 1}});
            for (uint32_t n = 2; n <= 4; ++n) {
                std::vector<uint32_t> full(n);
                std::iota(full.begin(), full.end(), 0);
                cases.push_back({q, n, full});
            }
        }
        for (const auto& [q, n, rt] : cases) {
            CurveInstance c = make_instance(q, n, rt);
            ValueSetReport vs = value_set_check(c);
            if (!vs.equals_base_field || !vs.cardinality_matches) return false;
        }
        return true;
    });

    h.run(4, "pole orders of all five witnesses, <= 3 rewriting passes", [](std::string& detail) {
        bool ok = true;
        uint32_t worst = 0;
        for (auto [q, n, r] : {std::tuple<uint64_t, uint32_t, uint32_t>{2, 3, 2}, {2, 5, 3}, {3, 3, 2}}) {
            PoleOrderReport rep = verify_pole_orders(q, n, r, 3);
            if (!rep.all_ok) ok = false;
            for (const auto& e : rep.entries) worst = std::max(worst, e.iterations);
        }
        detail = "max iterations used: " + std::to_string(worst);
        return ok && worst <= 3;
    });

    h.run(5, "trace identities: double-sum grid and the q^n-power rewriting rule", [](std::string&) {
        for (uint64_t q : {2, 3, 4})
            for (uint32_t n = 1; n <= 5; ++n)
                for (uint32_t m = 0; m < n; ++m)
                    if (!check_snm_identity(m, n, q)) return false;
        for (auto [q, n] : kInstances)
            if (!check_yqn_identity(make_h_family(q, n))) return false;
        return true;
    });

    h.run(6, "semigroups: telescopic, symmetric, formula genus, Castle count", [](std::string&) {
        for (auto [q, n] : kInstances) {
            uint32_t r = h_family_r(n);
            auto gens = weierstrass_generators(q, n, r);
            if (!is_telescopic(gens)) return false;
            NumericalSemigroup S(gens);
            if (!is_symmetric(S)) return false;
            if (telescopic_genus(gens) != Int(S.genus())) return false;
            if (!castle_check(make_h_family(q, n), S)) return false;
        }
        return true;
    });

    h.run(7, "structure report on 200 random profiles (< 60 s)", [](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937 rng(987654321);
        int checked = 0;
        while (checked < 200) {
            uint64_t q = (rng() & 1) ? 2 : 3;
            uint32_t n = 2 + rng() % 6;  // n in [2, 7], every t realizable
            std::vector<uint32_t> rt{0};
            for (uint32_t b = 1; b < n; ++b)
                if (rng() & 1) rt.push_back(b);
            auto [p, e] = factor_prime_power(q);
            Profile pr = Profile::make(FieldSpec::make(p, e, n), rt);
            StructureReport rep = check_structure(pr);
            if (!rep.all_pass()) {
                std::ostringstream os;
                os << "q=" << q << " n=" << n << " first failure: ";
                for (const auto& cl : rep.clauses)
                    if (!cl.pass) {
                        os << cl.name;
                        break;
                    }
                detail = os.str();
                return false;
            }
            ++checked;
        }
        double secs = seconds_since(t0);
        std::ostringstream os;
        os << "200 profiles in " << secs << " s";
        detail = os.str();
        return secs < 60.0;
    });

    h.run(8, "telescopic genus formula vs gap count on 100 generated ladders", [](std::string&) {
        std::mt19937 rng(13371337);
        int built = 0;
        while (built < 100) {
            // constructive extension keeps the ladder property by design
            std::vector<uint64_t> gens{2 + rng() % 11};
            uint64_t d = gens[0];
            int steps = 1 + rng() % 4;
            for (int i = 0; i < steps && d > 1; ++i) {
                std::vector<uint64_t> divisors;
                for (uint64_t x = 1; x < d; ++x)
                    if (d % x == 0) divisors.push_back(x);
                uint64_t dn = divisors[rng() % divisors.size()];
                uint64_t s = 0;
                for (uint64_t g : gens) s += (g / d) * (rng() % 5);
                if (s == 0) s = gens[0] / d;
                if (std::gcd(s, d / dn) != 1) continue;
                gens.push_back(dn * s);
                d = dn;
            }
            if (d != 1) continue;
            if (!is_telescopic(gens)) return false;
            NumericalSemigroup S(gens);
            if (telescopic_genus(gens) != Int(S.genus())) return false;
            ++built;
        }
        for (uint64_t q = 2; q <= 9; ++q)
            if (telescopic_genus({q, q + 1}) != Int(q) * (q - 1) / 2) return false;
        return true;
    });

    h.run(9, "sweep row reproduces the reference comparison at (2, 5)", [](std::string& detail) {
        SweepOptions so;
        so.q_list = {2};
        so.n_min = 5;
        so.n_max = 5;
        std::string csv = sweep_csv(so);
        std::istringstream is(csv);
        std::string header, row;
        std::getline(is, header);
        std::getline(is, row);
        ReferenceFormulas ref = reference_formulas(2, 5);
        bool ok = row == "2,5,[0;3],20,9,513,513,60,60,1,1,1,1,8.55" && ref.N == 513 && ref.g_h == 60 &&
                  ref.g_gs == 120;
        detail = "row: " + row + " | g_gs=" + ref.g_gs.str();
        return ok;
    });

    if (h.failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
}
