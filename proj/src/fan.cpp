#include "bv/fan.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bv {

namespace {

// Number of coordinates with nonzero phase in the given block.
int count_nonzero(const GroupElement& g, int lo, int hi) {
    int n = 0;
    for (int k = lo; k < hi; ++k)
        if (!g.theta(k).is_zero()) ++n;
    return n;
}

bool word_in_J_subgroup(const GroupElement& h, const OrbifoldSpec& spec) {
    GroupElement a;
    for (long r = 0; r < spec.d_curve(); ++r) {
        GroupElement b = a;
        for (long s = 0; s < spec.d(); ++s) {
            if (b == h) return true;
            b = b.compose(GroupElement::J2(spec));
        }
        a = a.compose(GroupElement::J1(spec));
    }
    return false;
}

BoxElement make_box_element(const GroupElement& h, const OrbifoldSpec& spec) {
    BoxElement b;
    b.element = h;
    for (int k = 0; k < kCoords; ++k) b.coeff[k] = h.theta(k);
    b.coeff[7] = Rational(0);
    int ve = 3 - count_nonzero(h, 0, 3);
    int vk = 4 - count_nonzero(h, 3, 7);
    b.e_dim = ve >= 2 ? ve - 2 : -1;
    b.k_dim = vk >= 2 ? vk - 2 : -1;
    b.y_relevant = b.e_dim >= 0 && b.k_dim >= 0;
    Rational eSum(0), kSum(0);
    for (int k = 0; k < 3; ++k) eSum += h.theta(k);
    for (int k = 3; k < kCoords; ++k) kSum += h.theta(k);
    // Age on the hypersurface: subtract the phases on the two bundle factors
    // O(d_E, 0) and O(0, d_K); those phases equal <2 Theta_X> and <2 Theta_x>.
    b.age_E = eSum - (Rational(2) * h.theta(0)).frac();
    b.age_K = kSum - (Rational(2) * h.theta(3)).frac();
    b.sigma_twisted = !word_in_J_subgroup(h, spec);
    b.label = element_label(h, spec);
    return b;
}

}  // namespace

std::vector<BoxElement> enumerate_box(const OrbifoldSpec& spec, bool full_ambient) {
    std::vector<BoxElement> out;
    for (const auto& h : build_group(spec)) {
        BoxElement b = make_box_element(h, spec);
        if (full_ambient) {
            // ambient sectors: the fractional support must fit in a maximal
            // cone (at most two twisted curve rays, three twisted K3 rays)
            if (count_nonzero(h, 0, 3) > 2 || count_nonzero(h, 3, 7) > 3) continue;
        } else if (!b.y_relevant) {
            continue;
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const BoxElement& x, const BoxElement& y) {
        if (x.is_identity() != y.is_identity()) return x.is_identity();
        return x.element < y.element;
    });
    return out;
}

bool StackyFanData::in_N(const std::array<Rational, 5>& v) const {
    std::array<Rational, 5> f;
    for (int i = 0; i < 5; ++i) f[i] = v[i].frac();
    return std::find(n_cosets.begin(), n_cosets.end(), f) != n_cosets.end();
}

std::optional<int> StackyFanData::find_box(const GroupElement& g) const {
    for (size_t i = 0; i < box.size(); ++i)
        if (box[i].element == g) return (int)i;
    return std::nullopt;
}

StackyFanData build_fan(const OrbifoldSpec& spec) {
    if (spec.curve != Curve::Quartic)
        throw UnsupportedCurve("stacky fan data is only pinned down for the quartic curve");
    StackyFanData fan;
    fan.spec = spec;
    const long w0 = spec.k3_weights[0], w1 = spec.k3_weights[1], w2 = spec.k3_weights[2],
               w3 = spec.k3_weights[3];

    for (auto& row : fan.rho)
        for (auto& v : row) v = Rational(0);
    // columns rho_1 .. rho_8 of the displayed matrix
    fan.rho[0][0] = Rational(-1, 2);
    fan.rho[1][0] = Rational(-1, 2);
    fan.rho[0][1] = Rational(1);
    fan.rho[1][2] = Rational(1);
    fan.rho[2][3] = Rational(-w1, w0);
    fan.rho[3][3] = Rational(-w2, w0);
    fan.rho[4][3] = Rational(-w3, w0);
    fan.rho[2][4] = Rational(1);
    fan.rho[3][5] = Rational(1);
    fan.rho[4][6] = Rational(1);
    fan.rho[0][7] = Rational(1, 4);
    fan.rho[1][7] = Rational(1, 4);
    fan.rho[2][7] = Rational(w1, 2 * w0);
    fan.rho[3][7] = Rational(w2, 2 * w0);
    fan.rho[4][7] = Rational(w3, 2 * w0);

    fan.alpha = {{{2, 1, 1, 0, 0, 0, 0, 0},
                  {0, 0, 0, w0, w1, w2, w3, 0},
                  {1, 0, 0, 1, 0, 0, 0, 2}}};
    fan.kernelQ = {{{2, 0, 1},
                    {1, 0, 0},
                    {1, 0, 0},
                    {0, w0, 1},
                    {0, w1, 0},
                    {0, w2, 0},
                    {0, w3, 0},
                    {0, 0, 2}}};

    // rho annihilates the kernel basis exactly.
    for (int r = 0; r < 5; ++r)
        for (int j = 0; j < 3; ++j) {
            Rational s(0);
            for (int i = 0; i < kRays; ++i) s += fan.rho[r][i] * Rational(fan.kernelQ[i][j]);
            if (!s.is_zero()) throw InternalInconsistency("rho * Q != 0");
        }

    fan.n_generators = {
        {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(w1, w0), Rational(w2, w0), Rational(w3, w0)},
        {Rational(1, 4), Rational(1, 4), Rational(w1, 2 * w0), Rational(w2, 2 * w0),
         Rational(w3, 2 * w0)}};
    // closure under addition mod 1: the cosets of N / Z^5
    std::set<std::array<Rational, 5>> cosets;
    std::vector<std::array<Rational, 5>> frontier{
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}};
    cosets.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::array<Rational, 5>> next;
        for (const auto& v : frontier)
            for (const auto& g : fan.n_generators) {
                std::array<Rational, 5> s;
                for (int i = 0; i < 5; ++i) s[i] = (v[i] + g[i]).frac();
                if (cosets.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    fan.n_cosets.assign(cosets.begin(), cosets.end());

    fan.box = enumerate_box(spec, false);
    for (size_t i = 0; i < fan.box.size(); ++i) {
        const BoxElement& b = fan.box[i];
        fan.box_y.push_back((int)i);
        // validate the group-side sector against the fan
        std::array<Rational, 5> v{Rational(0), Rational(0), Rational(0), Rational(0),
                                  Rational(0)};
        for (int col = 0; col < kRays; ++col)
            for (int r = 0; r < 5; ++r) v[r] += b.coeff[col] * fan.rho[r][col];
        if (!fan.in_N(v))
            throw InternalInconsistency("box element " + b.label + " is not an N-point");
        // S-extension: the degree-2 twisted sectors other than sigma itself
        if (!b.is_identity() && !(b.element == GroupElement::sigma(spec)) &&
            b.class_degree(0, 0) == Rational(2))
            fan.extension.push_back({(int)i, b.coeff});
    }
    return fan;
}

bool mori_contains(const Rational& a, const Rational& b, const Rational& c,
                   const OrbifoldSpec& spec) {
    if (c.sign() < 0) return false;
    if ((Rational(2) * a + c).sign() < 0) return false;
    if ((Rational(spec.k3_weights[0]) * b + c).sign() < 0) return false;
    return true;
}

bool LatticePoint::operator<(const LatticePoint& o) const {
    int t = cmp(a, o.a);
    if (t != 0) return t < 0;
    t = cmp(b, o.b);
    if (t != 0) return t < 0;
    t = cmp(c, o.c);
    if (t != 0) return t < 0;
    return k < o.k;
}

Rational LatticePoint::novikov_degree() const {
    Rational d = a + b + c;
    for (long kj : k) d += Rational(kj);
    return d;
}

std::string LatticePoint::str() const {
    std::string s = "(" + a.str() + "," + b.str() + "," + c.str();
    for (long kj : k) s += "," + std::to_string(kj);
    return s + ")";
}

std::array<Rational, kRays> lambda_coords(const LatticePoint& p, const StackyFanData& fan) {
    const long w0 = fan.spec.k3_weights[0];
    std::array<Rational, kRays> l;
    l[0] = Rational(2) * p.a + p.c;
    l[1] = p.a;
    l[2] = p.a;
    l[3] = Rational(w0) * p.b + p.c;
    for (int nu = 1; nu <= 3; ++nu) l[3 + nu] = Rational(fan.spec.k3_weights[nu]) * p.b;
    l[7] = Rational(2) * p.c;
    for (size_t j = 0; j < p.k.size(); ++j) {
        if (p.k[j] == 0) continue;
        const auto& s = fan.extension.at(j).s;
        for (int i = 0; i < kRays; ++i) l[i] -= Rational(p.k[j]) * s[i];
    }
    return l;
}

bool in_lambda_S(const LatticePoint& p, const StackyFanData& fan) {
    if (p.k.size() > fan.extension.size()) return false;
    for (long kj : p.k)
        if (kj < 0) return false;
    auto l = lambda_coords(p, fan);
    if (!l[7].is_integer()) return false;
    if (!l[1].is_integer() && !l[0].is_integer()) return false;
    bool k3_ok = false;
    for (int i = 3; i < 7; ++i)
        if (l[i].is_integer()) {
            k3_ok = true;
            break;
        }
    return k3_ok;
}

int valuation(const LatticePoint& p, const StackyFanData& fan) {
    if (!in_lambda_S(p, fan)) throw NotInLambdaS("point " + p.str() + " not in Lambda^S");
    auto l = lambda_coords(p, fan);
    std::vector<Rational> theta(kCoords);
    for (int i = 0; i < kCoords; ++i) theta[i] = (-l[i]).frac();
    GroupElement g(std::move(theta));
    auto idx = fan.find_box(g);
    if (!idx)
        throw InternalInconsistency("valuation of " + p.str() + " matches no Box(Y) sector");
    return *idx;
}

namespace {

std::vector<LatticePoint> lambda_E_slice(int box_index, const Rational& c,
                                         const Rational& bound, const StackyFanData& fan) {
    std::vector<LatticePoint> out;
    const long w0 = fan.spec.k3_weights[0];
    const int m = (int)fan.extension.size();

    std::vector<long> k(m, 0);
    long kmax = (bound - c).floor();
    if (kmax < 0) return out;
    auto next_k = [&]() {
        long sum = 0;
        for (long v : k) sum += v;
        for (int i = 0; i < m; ++i) {
            ++k[i];
            ++sum;
            if (sum <= kmax) return true;
            sum -= k[i];
            k[i] = 0;
        }
        return false;
    };

    do {
        long ksum = 0;
        for (long v : k) ksum += v;
        if (Rational(ksum) + c > bound) continue;
        LatticePoint p;
        p.c = c;
        p.k = k;
        // residues that can satisfy the Lambda^S integrality options
        std::set<Rational> a_res{Rational(0)};
        {
            Rational shift(0);  // lambda_1 = 2a + c - shift must be integral
            for (int j = 0; j < m; ++j) shift += Rational(k[j]) * fan.extension[j].s[0];
            a_res.insert(((shift - c) / Rational(2)).frac());
            a_res.insert(((shift - c) / Rational(2) + Rational(1, 2)).frac());
        }
        std::set<Rational> b_res;
        for (int i = 3; i < 7; ++i) {
            Rational coeff(i == 3 ? w0 : fan.spec.k3_weights[i - 3]);
            Rational shift(0);
            for (int j = 0; j < m; ++j) shift += Rational(k[j]) * fan.extension[j].s[i];
            Rational base = i == 3 ? (shift - c) / coeff : shift / coeff;
            long cl = coeff.to_long();
            for (long n = 0; n < cl; ++n) b_res.insert((base + Rational(n) / coeff).frac());
        }

        Rational a_min = -c / Rational(2);
        Rational b_min = -c / Rational(w0);
        for (const Rational& ra : a_res) {
            for (Rational a = ra + Rational(a_min.floor() - 1); a <= bound; a += Rational(1)) {
                if (a < a_min) continue;
                if (a + c + Rational(ksum) + b_min > bound) break;
                for (const Rational& rb : b_res) {
                    for (Rational b = rb + Rational(b_min.floor() - 1);
                         a + b + c + Rational(ksum) <= bound; b += Rational(1)) {
                        if (b < b_min) continue;
                        p.a = a;
                        p.b = b;
                        if (!in_lambda_S(p, fan)) continue;
                        if (!mori_contains(p.a, p.b, p.c, fan.spec)) continue;
                        if (valuation(p, fan) != box_index) continue;
                        out.push_back(p);
                    }
                }
            }
        }
    } while (next_k());
    return out;
}

}  // namespace

std::vector<LatticePoint> enumerate_lambda_E(int box_index, const Rational& bound,
                                             const StackyFanData& fan, bool serial) {
    const long w0 = fan.spec.k3_weights[0];
    // degree = (a + c/2) + (b + c/w0) + c(1/2 - 1/w0) + sum k with every
    // bracket non-negative, so c is bounded once the degree is.
    Rational c_coeff = Rational(1, 2) - Rational(1, w0);
    long c_steps;
    if (c_coeff.is_zero())
        c_steps = 2 * bound.floor() + 2;
    else
        c_steps = (bound / c_coeff * Rational(2)).floor() + 2;
    if (c_steps < 0) c_steps = 0;

    std::vector<std::vector<LatticePoint>> slices((size_t)c_steps);
#ifdef _OPENMP
    if (!serial) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < c_steps; ++i)
            slices[i] = lambda_E_slice(box_index, Rational(i, 2), bound, fan);
    } else
#endif
    {
        for (long i = 0; i < c_steps; ++i)
            slices[i] = lambda_E_slice(box_index, Rational(i, 2), bound, fan);
    }
    std::vector<LatticePoint> out;
    for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](const LatticePoint& x, const LatticePoint& y) {
        int t = cmp(x.novikov_degree(), y.novikov_degree());
        if (t != 0) return t < 0;
        return x < y;
    });
    return out;
}

}  // namespace bv
