#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bv/rational.hpp"

namespace bv {

struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& w) : std::invalid_argument(w) {}
};

enum class Curve { Quartic, CubicSextic };  // X^2+Y^4+Z^4 in P(2,1,1) / X^2+Y^3+Z^6 in P(3,2,1)

constexpr int kCoords = 7;  // X, Y, Z, x, y, z, w

// The admissible Fermat K3 rows: weights and Nikulin invariants (N, N').
struct WeightRow {
    std::array<int, 4> w;
    int N, Np;
};
const std::vector<WeightRow>& admissible_weight_table();
std::optional<std::pair<int, int>> is_admissible_weight_table(const std::array<int, 4>& w);

struct OrbifoldSpec {
    Curve curve = Curve::Quartic;
    std::array<int, 4> k3_weights{};    // (w0, w1, w2, w3)
    std::array<long, 4> k3_exponents{}; // (2, d/w1, d/w2, d/w3), d = 2*w0
    int nikulin_N = 0, nikulin_Np = 0;

    std::array<int, 3> curve_weights{};   // P(2,1,1) or P(3,2,1)
    std::array<long, 3> curve_exponents{};

    long d() const { return 2L * k3_weights[0]; }          // K3 Fermat degree
    long d_curve() const { return curve == Curve::Quartic ? 4 : 6; }

    // Fermat exponent of coordinate k (order X,Y,Z,x,y,z,w).
    long exponent(int k) const;
    // Charge q_k = weight/degree of coordinate k.
    Rational charge(int k) const;

    static OrbifoldSpec make(Curve curve, const std::array<int, 4>& k3_weights);
    std::string k3_str() const;
};

// Diagonal symmetry as its tuple of phases in [0,1); the canonical identity
// of a group element (generator words are only derived labels).
class GroupElement {
public:
    GroupElement() : theta_(kCoords, Rational(0)) {}
    explicit GroupElement(std::vector<Rational> theta);

    const std::vector<Rational>& theta() const { return theta_; }
    const Rational& theta(int k) const { return theta_[k]; }

    GroupElement compose(const GroupElement& o) const;
    GroupElement inverse() const;
    bool is_identity() const;

    bool operator==(const GroupElement& o) const { return theta_ == o.theta_; }
    bool operator<(const GroupElement& o) const;

    static GroupElement J1(const OrbifoldSpec& spec);
    static GroupElement J2(const OrbifoldSpec& spec);
    static GroupElement sigma(const OrbifoldSpec& spec);

private:
    std::vector<Rational> theta_;
};

// Closure of {J1, J2, sigma} under the group law, sorted lexicographically
// by theta tuple. Contains the identity.
std::vector<GroupElement> build_group(const OrbifoldSpec& spec);

struct SectorInfo {
    GroupElement element;
    int fix_dim = 0;          // N_h: number of coordinates with zero phase
    Rational age;             // sum of phases
    Rational deg_W;           // N_h + 2(age - sum of charges)
    bool narrow = false;
    std::array<Rational, kCoords> i_values{};  // i_k(h) = <Theta_k - q_k>
    std::string label;        // derived sigma^t J1^r J2^s word
};

SectorInfo sector_info(const GroupElement& h, const OrbifoldSpec& spec);

// Narrow sectors ordered by (degree, theta tuple).
std::vector<SectorInfo> narrow_sectors(const OrbifoldSpec& spec);

// Derived word label for h, smallest (t, r, s) with sigma^t J1^r J2^s = h.
std::string element_label(const GroupElement& h, const OrbifoldSpec& spec);

}  // namespace bv
