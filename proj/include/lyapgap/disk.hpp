#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "lyapgap/error.hpp"

namespace lyapgap::hyp {

using cplx = std::complex<double>;

struct DiskPoint {
    cplx z{0.0, 0.0}; // |z| < 1
};

struct UnitTangent {
    cplx base{0.0, 0.0};
    cplx dir{1.0, 0.0}; // |dir| = 1
};

inline cplx unit(cplx v) {
    double n = std::abs(v);
    if (n == 0.0) throw Error("hyperbolic", "degenerate_input", "cannot normalize zero vector");
    return v / n;
}

/// hyperbolic distance from the origin
inline double dist0(cplx z) {
    double r = std::abs(z);
    return std::log((1.0 + r) / (1.0 - r));
}

inline double dist(cplx z, cplx w) {
    return dist0((w - z) / (1.0 - std::conj(z) * w));
}

/// Orientation-preserving disk isometry as a det-1 complex 2x2 matrix
/// z -> (a z + b) / (c z + d). For isometries of the disk the matrix is
/// SU(1,1)-shaped (c = conj(b), d = conj(a)) up to a unimodular factor.
struct Mobius {
    Eigen::Matrix2cd m;

    static Mobius identity() {
        Mobius g;
        g.m = Eigen::Matrix2cd::Identity();
        return g;
    }

    cplx apply(cplx z) const {
        return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
    }

    /// derivative of the Mobius map at z (det assumed 1)
    cplx deriv(cplx z) const {
        cplx den = m(1, 0) * z + m(1, 1);
        return 1.0 / (den * den);
    }

    UnitTangent apply(const UnitTangent& u) const {
        return UnitTangent{apply(u.base), unit(deriv(u.base) * u.dir)};
    }

    Mobius inverse() const {
        Mobius g;
        g.m << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0); // adjugate; det = 1
        return g;
    }

    Mobius operator*(const Mobius& o) const {
        Mobius g;
        g.m = m * o.m;
        return g;
    }
};

/// Disk isometry sending `from` to 0 with tangent `dir` mapped onto the
/// positive real axis: z -> conj(dir) (z - from) / (1 - conj(from) z),
/// rescaled to det 1.
Mobius frame_map(cplx from, cplx dir);

/// Flow time t along the geodesic from a unit tangent; returns endpoint
/// tangent. Exact Mobius formula, no stepping.
UnitTangent geodesic_flow(const UnitTangent& u, double t);

/// Boundary point reached as t -> +infinity.
inline cplx forward_endpoint(const UnitTangent& u) {
    return (u.base + u.dir) / (1.0 + std::conj(u.base) * u.dir);
}

/// Unit tangent at z of the geodesic aimed at target w (or a boundary point).
inline cplx direction_toward(cplx z, cplx w) {
    return unit((w - z) / (1.0 - std::conj(z) * w));
}

/// Geodesic segment lying on a circle orthogonal to the unit circle.
struct GeodesicArc {
    cplx a, b;   // endpoints in the open disk
    cplx center; // Euclidean center of the carrying circle
    double radius;
};

/// Carrying circle of the geodesic through two disk points; throws if the
/// geodesic is (numerically) a diameter.
GeodesicArc geodesic_arc(cplx a, cplx b);

// --- Cayley conjugation between SL(2,R) on the half-plane and the disk ---

using Sl2 = Eigen::Matrix2d; // det = 1 expected

/// disk form C g C^{-1} with C(w) = (w - i)/(w + i); det is preserved
Mobius to_disk(const Sl2& g);

/// inverse conversion; throws if the result is not real within 1e-9
Sl2 to_sl2(const Mobius& g);

inline double det_defect(const Sl2& g) { return std::abs(g.determinant() - 1.0); }

/// 2 acosh(|tr|/2); throws "non_hyperbolic_element" when |tr| <= 2
double translation_length_sl2(const Sl2& g);

/// attracting and repelling fixed points on the unit circle
struct AxisEndpoints {
    cplx attracting;
    cplx repelling;
};
AxisEndpoints axis_endpoints(const Mobius& g);

} // namespace lyapgap::hyp
