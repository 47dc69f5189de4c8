#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bv/weights.hpp"

namespace bv {

struct UnsupportedCurve : std::invalid_argument {
    explicit UnsupportedCurve(const std::string& w) : std::invalid_argument(w) {}
};
struct NotInLambdaS : std::domain_error {
    explicit NotInLambdaS(const std::string& w) : std::domain_error(w) {}
};
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& w) : std::logic_error(w) {}
};

constexpr int kRays = 8;

// One inertia sector of the ambient quotient stack, restricted to the
// Borcea-Voisin hypersurface when y_relevant is set. Ray coefficients are
// the fractional box coordinates; rays 1..7 carry the coordinate phases.
struct BoxElement {
    GroupElement element;                  // phases on (X,Y,Z,x,y,z,w)
    std::array<Rational, kRays> coeff{};   // box coordinates over the rays
    bool y_relevant = false;               // meets E x K (both factors fix something)
    int e_dim = -1;                        // dim of the E-factor fixed locus (-1: empty)
    int k_dim = -1;                        // dim of the K-factor fixed locus
    Rational age_E, age_K;                 // age split between the two factors
    bool sigma_twisted = false;            // phase 1/2 on X (and x)
    std::string label;

    Rational age() const { return age_E + age_K; }
    // Degree of the class D_E^e D_K^k 1_b.
    Rational class_degree(int e, int k) const {
        return Rational(2) * age() + Rational(2 * (e + k));
    }
    bool is_identity() const { return element.is_identity(); }
};

struct StackyFanData {
    OrbifoldSpec spec;
    // rho: 5 x 8 matrix over Q, columns are the rays.
    std::array<std::array<Rational, kRays>, 5> rho;
    // Gale-dual weight matrix alpha: 3 x 8 over Z.
    std::array<std::array<long, kRays>, 3> alpha;
    // Kernel basis Q: 8 x 3 (columns span ker rho).
    std::array<std::array<long, 3>, kRays> kernelQ;
    // Fractional generators of N beyond Z^5.
    std::vector<std::array<Rational, 5>> n_generators;
    // All cosets of N / Z^5 as fractional 5-vectors (for membership tests).
    std::vector<std::array<Rational, 5>> n_cosets;
    // Box of the ambient stack; y_relevant entries form Box(Y).
    std::vector<BoxElement> box;
    // Indices into `box` of the Y-relevant elements, identity first.
    std::vector<int> box_y;
    // S-extension: y-relevant twisted sectors of the K3 factor that are not
    // the sigma sector itself, with their ray coefficient vectors.
    struct ExtensionSector {
        int box_index;                      // into `box`
        std::array<Rational, kRays> s;      // box coefficients s_{j,i}
    };
    std::vector<ExtensionSector> extension;

    bool in_N(const std::array<Rational, 5>& v) const;
    const BoxElement& box_at(int i) const { return box[i]; }
    std::optional<int> find_box(const GroupElement& g) const;
};

// Builds the stacky fan for the quartic elliptic curve and validates the Box
// obtained from the group side against it. Throws UnsupportedCurve for the
// (3,2,1) curve, whose fan the source material never pins down.
StackyFanData build_fan(const OrbifoldSpec& spec);

// Sector enumeration from the group side; works for both curves and is the
// authority for Box(Y). `full_ambient` keeps sectors that miss E x K.
std::vector<BoxElement> enumerate_box(const OrbifoldSpec& spec, bool full_ambient = false);

// Mori cone test for the class (a, b, c).
bool mori_contains(const Rational& a, const Rational& b, const Rational& c,
                   const OrbifoldSpec& spec);

// One S-extended lattice point (a, b, c, k_1..k_m).
struct LatticePoint {
    Rational a, b, c;
    std::vector<long> k;

    bool operator==(const LatticePoint& o) const {
        return a == o.a && b == o.b && c == o.c && k == o.k;
    }
    bool operator<(const LatticePoint& o) const;
    // theta-weighted Novikov degree a + b + c + sum k_j used for truncation.
    Rational novikov_degree() const;
    std::string str() const;
};

// lambda_i pairings of the point against the 8 rays (plus k entries beyond).
std::array<Rational, kRays> lambda_coords(const LatticePoint& p, const StackyFanData& fan);

bool in_lambda_S(const LatticePoint& p, const StackyFanData& fan);

// Valuation: the Box element with coefficients <-lambda_i>. Throws
// NotInLambdaS when p fails membership, InternalInconsistency when the
// fractional vector matches no enumerated sector.
int valuation(const LatticePoint& p, const StackyFanData& fan);

// All points of Lambda E_b with Novikov degree <= bound, lexicographic order.
// OpenMP-parallel over the c-slices; `serial` forces the reference path.
std::vector<LatticePoint> enumerate_lambda_E(int box_index, const Rational& bound,
                                             const StackyFanData& fan, bool serial = false);

}  // namespace bv
