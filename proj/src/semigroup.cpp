#include "mvspcurves/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace mvsp {

namespace {

constexpr uint64_t kTableCap = uint64_t{1} << 28;

std::vector<char> reachability(const std::vector<uint64_t>& gens, uint64_t bound) {
    if (bound + 1 > kTableCap) throw BoundExceeded("semigroup membership table too large");
    std::vector<char> memb(bound + 1, 0);
    memb[0] = 1;
    for (uint64_t g : gens) {
        if (g == 0 || g > bound) continue;
        for (uint64_t i = g; i <= bound; ++i)
            if (memb[i - g]) memb[i] = 1;
    }
    return memb;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<uint64_t> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw InvalidInput("empty generator list");
    uint64_t g = 0;
    for (uint64_t a : gens_) {
        if (a == 0) throw InvalidInput("generators must be positive");
        g = std::gcd(g, a);
    }
    if (g != 1) throw InvalidInput("generators have gcd " + std::to_string(g) + ", not 1");

    std::vector<uint64_t> sorted(gens_);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    m2_ = sorted.front();

    if (m2_ == 1) {
        member_ = {1};
        frobenius_ = -1;
        genus_ = 0;
        conductor_ = 0;
        return;
    }

    // Initial bound (a-1)(b-1) for the two smallest coprime generators,
    // else the product of the two smallest; then confirm a full window of
    // length m2 at the top of the table, doubling until it is.
    uint64_t bound = 0;
    for (size_t i = 0; i < sorted.size() && bound == 0; ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (std::gcd(sorted[i], sorted[j]) == 1) {
                bound = (sorted[i] - 1) * (sorted[j] - 1);
                break;
            }
    if (bound == 0) bound = sorted[0] * sorted[1];
    bound = std::max<uint64_t>(bound, m2_);

    for (;;) {
        member_ = reachability(gens_, bound);
        bool window_full = true;
        for (uint64_t i = bound + 1 - m2_; i <= bound && window_full; ++i) window_full = member_[i];
        if (window_full) break;
        bound *= 2;
    }

    for (uint64_t i = 0; i <= bound; ++i)
        if (!member_[i]) {
            ++genus_;
            frobenius_ = static_cast<int64_t>(i);
        }
    conductor_ = static_cast<uint64_t>(frobenius_ + 1);
}

bool NumericalSemigroup::contains(uint64_t x) const {
    if (x >= member_.size()) return true;  // beyond the verified window
    return member_[x];
}

std::vector<uint64_t> NumericalSemigroup::gaps() const {
    std::vector<uint64_t> out;
    for (uint64_t i = 0; i < member_.size(); ++i)
        if (!member_[i]) out.push_back(i);
    return out;
}

bool is_symmetric(const NumericalSemigroup& S) {
    int64_t F = S.frobenius_number();
    if (F != 2 * static_cast<int64_t>(S.genus()) - 1) return false;
    for (int64_t x = 0; x <= F; ++x)
        if (S.contains(static_cast<uint64_t>(x)) == S.contains(static_cast<uint64_t>(F - x))) return false;
    return true;
}

bool is_telescopic(const std::vector<uint64_t>& gens) {
    if (gens.empty()) throw InvalidInput("empty generator list");
    uint64_t g = 0;
    for (uint64_t a : gens) {
        if (a == 0) throw InvalidInput("generators must be positive");
        g = std::gcd(g, a);
    }
    if (g != 1) throw InvalidInput("generators have gcd " + std::to_string(g) + ", not 1");
    if (gens.size() == 1) return gens[0] == 1;

    std::vector<uint64_t> d(gens.size());
    d[0] = gens[0];
    for (size_t i = 1; i < gens.size(); ++i) d[i] = std::gcd(d[i - 1], gens[i]);

    for (size_t i = 1; i < gens.size(); ++i) {
        std::vector<uint64_t> scaled;
        for (size_t j = 0; j < i; ++j) scaled.push_back(gens[j] / d[i - 1]);
        NumericalSemigroup prev(scaled);
        if (!prev.contains(gens[i] / d[i])) return false;
    }
    return true;
}

Int telescopic_genus(const std::vector<uint64_t>& gens) {
    if (!is_telescopic(gens)) throw InvalidInput("generator sequence is not telescopic in the given order");
    std::vector<uint64_t> d(gens.size());
    d[0] = gens[0];
    for (size_t i = 1; i < gens.size(); ++i) d[i] = std::gcd(d[i - 1], gens[i]);

    Int sum = -Int(gens[0]);  // d_0 = 0 convention
    for (size_t i = 1; i < gens.size(); ++i) sum += Int(d[i - 1] / d[i] - 1) * Int(gens[i]);
    Int num = sum + 1;
    if (num % 2 != 0) throw std::logic_error("telescopic genus numerator is odd");
    return num / 2;
}

std::vector<uint64_t> weierstrass_generators(uint64_t q, uint32_t n, uint32_t r) {
    if (n < 3) throw InvalidInput("the generator list needs n >= 3");
    Int Q(q);
    std::vector<Int> gens = {
        int_pow(Q, n - 1),
        int_pow(Q, n - 1) + int_pow(Q, r - 1),
        int_pow(Q, n) + int_pow(Q, n - r),
        int_pow(Q, 2 * r - 1) + int_pow(Q, n - r - 1),
        int_pow(Q, 2 * r) - int_pow(Q, n) + int_pow(Q, r) + 1,
    };
    std::vector<uint64_t> out;
    for (const Int& g : gens) out.push_back(checked_u64(g, "semigroup generator"));
    return out;
}

std::vector<uint64_t> redundancy_probe(const std::vector<uint64_t>& gens) {
    std::vector<uint64_t> redundant;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<uint64_t> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (others.empty()) continue;
        auto memb = reachability(others, gens[i]);
        if (memb[gens[i]]) redundant.push_back(gens[i]);
    }
    return redundant;
}

bool castle_check(const CurveInstance& c, const NumericalSemigroup& S, const EnumBounds& bounds) {
    if (!is_symmetric(S)) return false;
    PointCountResult pc = count_points_bruteforce(c, bounds);
    Int expected = Int(c.spec_ptr()->order()) * S.multiplicity() + 1;
    return pc.methods_agree && pc.total == expected;
}

}  // namespace mvsp
