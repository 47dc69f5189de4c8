#include "bv/weights.hpp"

#include <algorithm>
#include <set>

namespace bv {

const std::vector<WeightRow>& admissible_weight_table() {
    static const std::vector<WeightRow> table = {
        {{3, 1, 1, 1}, 1, 10},  {{5, 2, 2, 1}, 2, 6},   {{15, 10, 3, 2}, 4, 4},
        {{21, 14, 6, 1}, 6, 6}, {{9, 6, 2, 1}, 3, 7},   {{4, 2, 1, 1}, 1, 9},
        {{10, 5, 4, 1}, 2, 6},  {{6, 3, 2, 1}, 1, 7},   {{6, 4, 1, 1}, 2, 10},
        {{12, 8, 3, 1}, 3, 7},
    };
    return table;
}

std::optional<std::pair<int, int>> is_admissible_weight_table(const std::array<int, 4>& w) {
    for (const auto& row : admissible_weight_table())
        if (row.w == w) return std::make_pair(row.N, row.Np);
    return std::nullopt;
}

long OrbifoldSpec::exponent(int k) const {
    return k < 3 ? curve_exponents[k] : k3_exponents[k - 3];
}

Rational OrbifoldSpec::charge(int k) const { return Rational(1) / Rational(exponent(k)); }

OrbifoldSpec OrbifoldSpec::make(Curve curve, const std::array<int, 4>& w) {
    auto nik = is_admissible_weight_table(w);
    if (!nik)
        throw InvalidSpec("K3 weights (" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                          "," + std::to_string(w[2]) + "," + std::to_string(w[3]) +
                          ") are not an admissible Fermat row");
    OrbifoldSpec s;
    s.curve = curve;
    s.k3_weights = w;
    long d = 2L * w[0];
    for (int i = 1; i < 4; ++i) {
        if (d % w[i] != 0) throw InvalidSpec("non-integral K3 exponent");
        s.k3_exponents[i] = d / w[i];
    }
    s.k3_exponents[0] = 2;
    s.nikulin_N = nik->first;
    s.nikulin_Np = nik->second;
    if (curve == Curve::Quartic) {
        s.curve_weights = {2, 1, 1};
        s.curve_exponents = {2, 4, 4};
    } else {
        s.curve_weights = {3, 2, 1};
        s.curve_exponents = {2, 3, 6};
    }
    // Gorenstein: weights sum to the degree in each factor.
    if (w[0] + w[1] + w[2] + w[3] != d) throw InvalidSpec("K3 weights fail the Gorenstein sum");
    return s;
}

std::string OrbifoldSpec::k3_str() const {
    return "(" + std::to_string(k3_weights[0]) + "," + std::to_string(k3_weights[1]) + "," +
           std::to_string(k3_weights[2]) + "," + std::to_string(k3_weights[3]) + ")";
}

GroupElement::GroupElement(std::vector<Rational> theta) : theta_(std::move(theta)) {
    if ((int)theta_.size() != kCoords) throw InvalidSpec("GroupElement needs 7 phases");
    for (auto& t : theta_) t = t.frac();
}

GroupElement GroupElement::compose(const GroupElement& o) const {
    std::vector<Rational> t(kCoords);
    for (int k = 0; k < kCoords; ++k) t[k] = (theta_[k] + o.theta_[k]).frac();
    return GroupElement(std::move(t));
}

GroupElement GroupElement::inverse() const {
    std::vector<Rational> t(kCoords);
    for (int k = 0; k < kCoords; ++k) t[k] = (-theta_[k]).frac();
    return GroupElement(std::move(t));
}

bool GroupElement::is_identity() const {
    for (const auto& t : theta_)
        if (!t.is_zero()) return false;
    return true;
}

bool GroupElement::operator<(const GroupElement& o) const {
    for (int k = 0; k < kCoords; ++k) {
        int c = cmp(theta_[k], o.theta_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

GroupElement GroupElement::J1(const OrbifoldSpec& spec) {
    std::vector<Rational> t(kCoords, Rational(0));
    for (int k = 0; k < 3; ++k) t[k] = spec.charge(k);
    return GroupElement(std::move(t));
}

GroupElement GroupElement::J2(const OrbifoldSpec& spec) {
    std::vector<Rational> t(kCoords, Rational(0));
    for (int k = 3; k < kCoords; ++k) t[k] = spec.charge(k);
    return GroupElement(std::move(t));
}

GroupElement GroupElement::sigma(const OrbifoldSpec&) {
    std::vector<Rational> t(kCoords, Rational(0));
    t[0] = Rational(1, 2);
    t[3] = Rational(1, 2);
    return GroupElement(std::move(t));
}

std::vector<GroupElement> build_group(const OrbifoldSpec& spec) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> frontier{GroupElement()};
    seen.insert(GroupElement());
    const GroupElement gens[3] = {GroupElement::J1(spec), GroupElement::J2(spec),
                                  GroupElement::sigma(spec)};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                GroupElement p = h.compose(g);
                if (seen.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

SectorInfo sector_info(const GroupElement& h, const OrbifoldSpec& spec) {
    SectorInfo s;
    s.element = h;
    s.age = Rational(0);
    s.fix_dim = 0;
    s.narrow = true;
    Rational qsum(0);
    for (int k = 0; k < kCoords; ++k) {
        s.age += h.theta(k);
        if (h.theta(k).is_zero()) {
            ++s.fix_dim;
            s.narrow = false;
        }
        s.i_values[k] = (h.theta(k) - spec.charge(k)).frac();
        qsum += spec.charge(k);
    }
    // Both factors are Calabi-Yau, so the charges sum to 2 overall; the
    // W-degree is N_h + 2(age - sum q). (The per-factor shift by 1 written in
    // some formula displays is inconsistent with the seven-variable tables.)
    s.deg_W = Rational(s.fix_dim) + Rational(2) * (s.age - qsum);
    s.label = element_label(h, spec);
    return s;
}

std::string element_label(const GroupElement& h, const OrbifoldSpec& spec) {
    const GroupElement j1 = GroupElement::J1(spec), j2 = GroupElement::J2(spec),
                       sg = GroupElement::sigma(spec);
    long o1 = spec.d_curve(), o2 = spec.d();
    GroupElement st;
    for (int t = 0; t <= 1; ++t) {
        GroupElement sr = st;
        for (long r = 0; r < o1; ++r) {
            GroupElement cur = sr;
            for (long s = 0; s < o2; ++s) {
                if (cur == h) {
                    std::string out;
                    if (t) out += "s";
                    auto app = [&out](const char* g, long e) {
                        if (e == 0) return;
                        out += g;
                        if (e > 1) out += "^" + std::to_string(e);
                    };
                    app("J1", r);
                    app("J2", s);
                    if (out.empty()) out = "e";
                    return out;
                }
                cur = cur.compose(j2);
            }
            sr = sr.compose(j1);
        }
        st = st.compose(sg);
    }
    return "?";  // not reachable for elements of the generated group
}

std::vector<SectorInfo> narrow_sectors(const OrbifoldSpec& spec) {
    std::vector<SectorInfo> out;
    for (const auto& h : build_group(spec)) {
        SectorInfo s = sector_info(h, spec);
        if (s.narrow) out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const SectorInfo& a, const SectorInfo& b) {
        int c = cmp(a.deg_W, b.deg_W);
        if (c != 0) return c < 0;
        return a.element < b.element;
    });
    return out;
}

}  // namespace bv
