#ifndef MVSPCURVES_CERTIFY_HPP
#define MVSPCURVES_CERTIFY_HPP

#include <json.hpp>

#include "mvspcurves/semigroup.hpp"
#include "mvspcurves/valuation.hpp"

namespace mvsp {

using Json = nlohmann::ordered_json;

/// JSON value for an unbounded integer: a number when it fits in 64 bits,
/// a decimal string otherwise.
Json json_int(const Int& v);

struct CertifyOptions {
    EnumBounds bounds;
    uint32_t max_iters = 3;
    uint64_t max_order = FieldSpec::kDefaultMaxOrder;
    bool with_timing = true;
};

Json field_record(const FieldSpec& spec);
Json profile_record(const Profile& pr);

/// Resolve (q, n, r_tuple) into a curve instance; r_tuple empty means the
/// (0, r(n)) profile.
CurveInstance make_instance(uint64_t q, uint32_t n, std::vector<uint32_t> r_tuple,
                            uint64_t max_order = FieldSpec::kDefaultMaxOrder);

struct CertOutcome {
    Json report;
    bool pass = false;        // every applicable check ran and passed
    bool any_fail = false;    // some check failed
    bool any_skipped = false; // some check hit a size bound
};

/// Full certification of one instance: profile structure, value set,
/// fibers, point count by both oracles, the model checks, and for the
/// (0, r(n)) instances with n >= 3 the pole orders, the defining
/// identities, and the semigroup battery.
CertOutcome certify_instance(uint64_t q, uint32_t n, std::vector<uint32_t> r_tuple, const CertifyOptions& opt = {});

/// Flat text rendering of a report (derived from the JSON form).
std::string render_text(const Json& report, int indent = 0);

struct SweepOptions {
    std::vector<uint64_t> q_list;
    uint32_t n_min = 2, n_max = 2;
    bool all_profiles = false;  // default: the (0, r(n)) profile per (q, n)
    CertifyOptions cert;
};

/// CSV with one row per instance, lexicographic in (q, n, r_list):
/// q,n,r_list,deg_f,deg_u,N_formula,N_bruteforce,genus_formula,
/// genus_semigroup,mvsp_ok,symmetric,telescopic,castle,ratio_N_over_g.
std::string sweep_csv(const SweepOptions& opt);

}  // namespace mvsp

#endif
