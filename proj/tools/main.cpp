#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "mvspcurves/certify.hpp"

namespace {

std::vector<uint32_t> parse_r_tuple(const std::string& s) {
    std::vector<uint32_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw mvsp::InvalidInput("empty entry in r-tuple '" + s + "'");
        try {
            out.push_back(static_cast<uint32_t>(std::stoul(tok)));
        } catch (const std::exception&) {
            throw mvsp::InvalidInput("bad r-tuple entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::pair<uint32_t, uint32_t> parse_n_range(const std::string& s) {
    size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            uint32_t n = static_cast<uint32_t>(std::stoul(s));
            return {n, n};
        }
        uint32_t lo = static_cast<uint32_t>(std::stoul(s.substr(0, dots)));
        uint32_t hi = static_cast<uint32_t>(std::stoul(s.substr(dots + 2)));
        if (lo > hi) throw mvsp::InvalidInput("empty n-range '" + s + "'");
        return {lo, hi};
    } catch (const mvsp::InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        throw mvsp::InvalidInput("bad n-range '" + s + "'");
    }
}

mvsp::EnumBounds resolve_bounds(uint64_t cli_max_enum) {
    if (cli_max_enum != 0) return mvsp::EnumBounds::all(cli_max_enum);
    if (const char* env = std::getenv("MVSP_MAX_ENUM")) {
        try {
            return mvsp::EnumBounds::all(std::stoull(env));
        } catch (const std::exception&) {
            throw mvsp::InvalidInput(std::string("bad MVSP_MAX_ENUM value '") + env + "'");
        }
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifier for the trace-equation curves attached to minimal-value-set polynomials"};
    app.require_subcommand(1);

    uint64_t q = 0;
    uint32_t n = 0;
    std::string r_tuple_str;
    bool h_family = false;
    uint64_t max_enum = 0;
    std::string out_format = "text";

    auto add_instance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "base prime power q")->required();
        cmd->add_option("--n", n, "extension degree n (field F_{q^n})")->required();
        auto* rt = cmd->add_option("--r-tuple", r_tuple_str, "comma-separated exponent tuple, e.g. 0,2");
        auto* hf = cmd->add_flag("--h-family", h_family, "use the distinguished (0, r(n)) profile");
        rt->excludes(hf);
    };

    CLI::App* construct = app.add_subcommand("construct", "build a profile and print its polynomials");
    add_instance_flags(construct);

    CLI::App* certify = app.add_subcommand("certify", "run the full certification battery on one instance");
    add_instance_flags(certify);
    certify->add_option("--max-enum", max_enum, "override the enumeration bounds");
    certify->add_option("--out", out_format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string q_list_str, n_range_str = "2..2", profiles = "h-family";
    std::string sweep_out = "csv";
    CLI::App* sweep = app.add_subcommand("sweep", "emit a CSV certification table over a parameter range");
    sweep->add_option("--q-list", q_list_str, "comma-separated q values")->required();
    sweep->add_option("--n-range", n_range_str, "n or lo..hi")->required();
    sweep->add_option("--profiles", profiles, "profile family")->check(CLI::IsMember({"all", "h-family"}));
    sweep->add_option("--max-enum", max_enum, "override the enumeration bounds");
    sweep->add_option("--out", sweep_out, "output format")->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed() || certify->parsed()) {
            if (r_tuple_str.empty() && !h_family) {
                std::cerr << "error: exactly one of --r-tuple / --h-family is required\n";
                return 2;
            }
            std::vector<uint32_t> rt = r_tuple_str.empty() ? std::vector<uint32_t>{} : parse_r_tuple(r_tuple_str);

            if (construct->parsed()) {
                mvsp::CurveInstance c = mvsp::make_instance(q, n, rt);
                mvsp::Json rec;
                rec["field"] = mvsp::field_record(*c.spec_ptr());
                rec.update(mvsp::profile_record(c.profile()));
                rec["f"] = to_string(c.f());
                rec["u"] = to_string(c.u());
                rec["v"] = to_string(c.v());
                std::cout << mvsp::render_text(rec);
                return 0;
            }

            mvsp::CertifyOptions opt;
            opt.bounds = resolve_bounds(max_enum);
            mvsp::CertOutcome res = mvsp::certify_instance(q, n, rt, opt);
            if (out_format == "json")
                std::cout << res.report.dump(2) << "\n";
            else
                std::cout << mvsp::render_text(res.report);
            if (res.pass) return 0;
            std::cerr << "certification verdict: " << res.report["verdict"].get<std::string>() << "\n";
            return 3;
        }

        if (sweep->parsed()) {
            mvsp::SweepOptions so;
            for (uint32_t v : parse_r_tuple(q_list_str)) so.q_list.push_back(v);
            std::tie(so.n_min, so.n_max) = parse_n_range(n_range_str);
            so.all_profiles = profiles == "all";
            so.cert.bounds = resolve_bounds(max_enum);
            std::cout << mvsp::sweep_csv(so);
            return 0;
        }
    } catch (const mvsp::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mvsp::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
