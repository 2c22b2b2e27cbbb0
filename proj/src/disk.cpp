#include "lyapgap/disk.hpp"

namespace lyapgap::hyp {

Mobius frame_map(cplx from, cplx dir) {
    // z -> conj(dir) (z - from) / (1 - conj(from) z), det-normalized
    Mobius g;
    g.m << std::conj(dir), -std::conj(dir) * from, -std::conj(from), 1.0;
    cplx d = g.m.determinant(); // conj(dir) (1 - |from|^2)
    g.m /= std::sqrt(d);
    return g;
}

UnitTangent geodesic_flow(const UnitTangent& u, double t) {
    double tau = std::tanh(0.5 * t);
    cplx den = 1.0 + std::conj(u.base) * u.dir * tau;
    cplx z = (u.base + u.dir * tau) / den;
    cplx dir = unit(u.dir / (den * den));
    return UnitTangent{z, dir};
}

GeodesicArc geodesicArc_impl(cplx a, cplx b) {
    // circle orthogonal to the unit circle: 2 Re(conj(z) c) = |z|^2 + 1
    double a11 = 2 * a.real(), a12 = 2 * a.imag();
    double a21 = 2 * b.real(), a22 = 2 * b.imag();
    double r1 = std::norm(a) + 1.0, r2 = std::norm(b) + 1.0;
    double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-13)
        throw Error("hyperbolic", "degenerate_input", "geodesic through given points is a diameter");
    cplx c((a22 * r1 - a12 * r2) / det, (-a21 * r1 + a11 * r2) / det);
    double radius = std::sqrt(std::norm(c) - 1.0);
    return GeodesicArc{a, b, c, radius};
}

GeodesicArc geodesic_arc(cplx a, cplx b) { return geodesicArc_impl(a, b); }

Mobius to_disk(const Sl2& g) {
    Eigen::Matrix2cd C, Cinv;
    const cplx i(0.0, 1.0);
    C << 1.0, -i, 1.0, i;
    Cinv << i, i, -1.0, 1.0;
    Cinv /= (2.0 * i);
    Mobius u;
    u.m = C * g.cast<cplx>() * Cinv;
    return u;
}

Sl2 to_sl2(const Mobius& g) {
    Eigen::Matrix2cd C, Cinv;
    const cplx i(0.0, 1.0);
    C << 1.0, -i, 1.0, i;
    Cinv << i, i, -1.0, 1.0;
    Cinv /= (2.0 * i);
    Eigen::Matrix2cd h = Cinv * g.m * C;
    if (h.imag().cwiseAbs().maxCoeff() > 1e-9)
        throw Error("hyperbolic", "conversion", "disk isometry does not correspond to a real matrix");
    Sl2 out = h.real();
    return out;
}

double translation_length_sl2(const Sl2& g) {
    double tr = std::abs(g.trace());
    if (tr <= 2.0 + 1e-12)
        throw Error("hyperbolic", "non_hyperbolic_element", "element has |trace| <= 2");
    return 2.0 * std::acosh(0.5 * tr);
}

AxisEndpoints axis_endpoints(const Mobius& g) {
    // fixed points of (az+b)/(cz+d): c z^2 + (d-a) z - b = 0
    cplx a = g.m(0, 0), b = g.m(0, 1), c = g.m(1, 0), d = g.m(1, 1);
    cplx p, q;
    if (std::abs(c) < 1e-14) {
        // fixes infinity; on the disk this cannot occur for hyperbolic elements
        throw Error("hyperbolic", "degenerate_input", "isometry fixes no pair of circle points");
    }
    cplx disc = std::sqrt((d - a) * (d - a) + 4.0 * c * b);
    p = (-(d - a) + disc) / (2.0 * c);
    q = (-(d - a) - disc) / (2.0 * c);
    // attracting fixed point has |g'| < 1
    double dp = std::abs(g.deriv(p));
    AxisEndpoints e;
    if (dp < 1.0) {
        e.attracting = p;
        e.repelling = q;
    } else {
        e.attracting = q;
        e.repelling = p;
    }
    if (std::abs(std::abs(e.attracting) - 1.0) > 1e-6 || std::abs(g.deriv(e.attracting)) > 1.0 - 1e-12)
        throw Error("hyperbolic", "non_hyperbolic_element", "isometry has no axis (not hyperbolic)");
    e.attracting = unit(e.attracting);
    e.repelling = unit(e.repelling);
    return e;
}

} // namespace lyapgap::hyp
