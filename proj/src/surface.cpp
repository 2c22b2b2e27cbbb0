#include "lyapgap/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace lyapgap::hyp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVertexTangencyTol = 1e-9; // Euclidean, in the disk
constexpr double kMinCrossingTime = 1e-9;

/// interior angle at vertex v between geodesics toward p and q
double corner_angle(cplx v, cplx p, cplx q) {
    cplx d1 = direction_toward(v, p);
    cplx d2 = direction_toward(v, q);
    double a = std::abs(std::arg(d2 / d1));
    return a;
}

} // namespace

SurfaceModel SurfaceModel::bolza() {
    SurfaceModel s;

    // Regular octagon with interior angles pi/4: vertices at Euclidean
    // radius 2^(-1/4), angles (2k+1) pi/8. The radius comes from
    // cosh(R) = cot^2(pi/8) for the hyperbolic vertex distance R;
    // validate() re-checks the angle condition numerically.
    s.vertex_radius_ = std::pow(2.0, -0.25);
    for (int k = 0; k < 8; ++k) {
        double th = (2 * k + 1) * kPi / 8.0;
        s.vertices_[k] = s.vertex_radius_ * cplx(std::cos(th), std::sin(th));
    }

    // Boundary word a b A B c d C D (side k from vertex k-1 to vertex k).
    // The pairing generator of side i maps its partner side j onto side i
    // reversing the boundary orientation: g(v_j) = v_{i-1}, g(v_{j-1}) = v_i.
    struct PairSpec {
        int i, j;
        Letter gen;
    };
    const PairSpec pairs[4] = {{0, 2, 0}, {1, 3, 1}, {4, 6, 2}, {5, 7, 3}};

    auto vert = [&](int k) { return s.vertices_[((k % 8) + 8) % 8]; };

    for (const auto& p : pairs) {
        cplx P = vert(p.i - 1), Q = vert(p.i);
        cplx R = vert(p.j - 1), S = vert(p.j);
        Mobius at_S = frame_map(S, direction_toward(S, R));
        Mobius at_P = frame_map(P, direction_toward(P, Q));
        Mobius g = at_P.inverse() * at_S; // g(S) = P, g(R) = Q
        s.disk_[p.gen] = g;
    }

    s.finish_setup();
    return s;
}

SurfaceModel build_bolza_surface() { return SurfaceModel::bolza(); }

void SurfaceModel::finish_setup() {
    // inverses, SL(2,R) forms, side table
    for (Letter l = 0; l < 4; ++l) disk_[l + 4] = disk_[l].inverse();
    for (Letter l = 0; l < 8; ++l) {
        Sl2 g = to_sl2(disk_[l]);
        g /= std::sqrt(g.determinant());
        sl2_[l] = g;
        disk_[l] = to_disk(g); // re-derive so both forms match exactly
    }

    const Letter side_letter[8] = {0, 1, 4, 5, 2, 3, 6, 7}; // a b A B c d C D
    const int partner_of[8] = {2, 3, 0, 1, 6, 7, 4, 5};
    for (int k = 0; k < 8; ++k) {
        cplx a = vertices_[(k + 7) % 8];
        cplx b = vertices_[k];
        sides_[k] = Side{geodesic_arc(a, b), partner_of[k], side_letter[k]};
    }

    validate();
}

bool SurfaceModel::contains(cplx z, double slack) const {
    for (const Side& s : sides_)
        if (std::abs(z - s.arc.center) < s.arc.radius - slack) return false;
    return true;
}

Sl2 SurfaceModel::evaluate_sl2(const Word& w) const {
    Sl2 g = Sl2::Identity();
    for (Letter l : w.letters()) g = g * sl2_[l];
    return g;
}

Mobius SurfaceModel::evaluate_disk(const Word& w) const {
    Mobius g = Mobius::identity();
    for (Letter l : w.letters()) g = g * disk_[l];
    return g;
}

double SurfaceModel::angle_sum() const {
    double sum = 0.0;
    for (int k = 0; k < 8; ++k)
        sum += corner_angle(vertices_[k], vertices_[(k + 7) % 8], vertices_[(k + 1) % 8]);
    return sum;
}

double SurfaceModel::area() const { return 6.0 * kPi - angle_sum(); }

void SurfaceModel::validate() const {
    auto fail = [](const std::string& what) {
        throw Error("hyperbolic", "construction_failure", what);
    };

    for (Letter l = 0; l < 8; ++l) {
        if (det_defect(sl2_[l]) > 1e-12) fail("generator determinant defect");
        Sl2 prod = sl2_[l] * sl2_[inverse_letter(l)];
        if ((prod - Sl2::Identity()).cwiseAbs().maxCoeff() > 1e-11)
            fail("generator/inverse mismatch");
    }

    Sl2 rel = evaluate_sl2(genus2_relator());
    if ((rel - Sl2::Identity()).cwiseAbs().maxCoeff() > 1e-9)
        fail("relator does not evaluate to the identity");

    for (int i = 0; i < 8; ++i) {
        const Side& si = sides_[i];
        const Side& sj = sides_[si.partner];
        const Mobius& g = disk_[si.letter];
        // side i runs a -> b; its partner maps onto it with orientation flip
        if (std::abs(g.apply(sj.arc.b) - si.arc.a) > 1e-9 ||
            std::abs(g.apply(sj.arc.a) - si.arc.b) > 1e-9)
            fail("pairing generator does not map its partner side onto the side");
    }

    if (std::abs(angle_sum() - 2.0 * kPi) > 1e-6) fail("interior angle sum is not 2 pi");
}

// --- tracking ---

GeodesicTracker::GeodesicTracker(const SurfaceModel& s, const UnitTangent& start)
    : surf_(&s), state_(start) {
    if (!s.contains(start.base, -1e-9))
        throw Error("hyperbolic", "precondition", "start point is outside the fundamental polygon");
    state_.dir = unit(state_.dir);
}

namespace {

struct NextCrossing {
    int side = -1;
    double dt = 0.0;
    double tau = 0.0;
};

/// earliest forward crossing of any side circle; closed-form quadratic in
/// tau = tanh(t/2) along e(tau) = (z + phi tau) / (1 + conj(z) phi tau)
NextCrossing find_crossing(const SurfaceModel& surf, const UnitTangent& u) {
    NextCrossing best;
    best.dt = std::numeric_limits<double>::infinity();
    const cplx z = u.base, phi = u.dir;
    for (int k = 0; k < 8; ++k) {
        const GeodesicArc& arc = surf.sides()[k].arc;
        const cplx A = z - arc.center;
        const cplx B = phi * (1.0 - arc.center * std::conj(z));
        const cplx Bp = std::conj(z) * phi;
        const double R2 = arc.radius * arc.radius;
        const double qa = std::norm(B) - R2 * std::norm(Bp);
        const double qb = 2.0 * (std::real(std::conj(A) * B) - R2 * std::real(Bp));
        const double qc = std::norm(A) - R2;

        double roots[2];
        int nroots = 0;
        if (std::abs(qa) < 1e-15 * (std::abs(qb) + std::abs(qc))) {
            if (qb != 0.0) roots[nroots++] = -qc / qb;
        } else {
            double disc = qb * qb - 4.0 * qa * qc;
            if (disc >= 0.0) {
                double sq = std::sqrt(disc);
                double q = -0.5 * (qb + (qb >= 0 ? sq : -sq));
                if (qa != 0.0) roots[nroots++] = q / qa;
                if (q != 0.0) roots[nroots++] = qc / q;
            }
        }
        for (int r = 0; r < nroots; ++r) {
            double tau = roots[r];
            if (tau <= 0.0 || tau >= 1.0) continue;
            double t = 2.0 * std::atanh(tau);
            if (t <= kMinCrossingTime) continue;
            if (t < best.dt) best = NextCrossing{k, t, tau};
        }
    }
    return best;
}

} // namespace

GeodesicTracker::Crossing GeodesicTracker::step() {
    NextCrossing nc = find_crossing(*surf_, state_);
    if (nc.side < 0)
        throw Error("hyperbolic", "tangency", "no forward side crossing found");

    UnitTangent at = geodesic_flow(state_, nc.dt);
    const Side& side = surf_->sides()[nc.side];
    if (std::abs(at.base - side.arc.a) < kVertexTangencyTol ||
        std::abs(at.base - side.arc.b) < kVertexTangencyTol)
        throw Error("hyperbolic", "tangency", "crossing within tolerance of a polygon vertex");

    state_ = surf_->disk_generator(inverse_letter(side.letter)).apply(at);
    if (!surf_->contains(state_.base, -1e-6))
        throw Error("hyperbolic", "tangency", "re-entered point drifted outside the polygon");
    elapsed_ += nc.dt;
    word_.push(side.letter);
    return Crossing{side.letter, elapsed_};
}

TrackResult track_geodesic(const SurfaceModel& s, const UnitTangent& start, double horizon) {
    if (horizon < 0.0)
        throw Error("hyperbolic", "precondition", "horizon must be nonnegative");
    GeodesicTracker tr(s, start);
    while (true) {
        NextCrossing nc = find_crossing(s, tr.state());
        if (nc.side < 0) throw Error("hyperbolic", "tangency", "no forward side crossing found");
        if (tr.elapsed() + nc.dt > horizon) {
            UnitTangent end = geodesic_flow(tr.state(), horizon - tr.elapsed());
            return TrackResult{tr.word(), horizon, end};
        }
        tr.step();
    }
}

UnitTangent sample_liouville(const SurfaceModel& s, std::uint64_t seed) {
    Rng rng(seed);
    return sample_liouville(s, rng);
}

UnitTangent sample_liouville(const SurfaceModel& s, Rng& rng) {
    const double rmax = s.vertex_radius();
    const double env = 1.0 - rmax * rmax; // density majorant factor
    for (;;) {
        double r = rmax * std::sqrt(rng.uniform());
        double th = 2.0 * kPi * rng.uniform();
        cplx z = r * cplx(std::cos(th), std::sin(th));
        double accept = rng.uniform();
        double ratio = env / (1.0 - std::norm(z));
        if (accept > ratio * ratio) continue;
        if (!s.contains(z)) continue;
        double phi = 2.0 * kPi * rng.uniform();
        return UnitTangent{z, cplx(std::cos(phi), std::sin(phi))};
    }
}

double translation_length(const SurfaceModel& s, const Word& w) {
    return translation_length_sl2(s.evaluate_sl2(w));
}

UnitTangent periodic_ray(const SurfaceModel& s, const Word& w) {
    Mobius g = s.evaluate_disk(w);
    AxisEndpoints ax = axis_endpoints(g);
    cplx p = ax.attracting, q = ax.repelling;

    UnitTangent u;
    if (std::abs(p + q) < 1e-12) {
        u = UnitTangent{cplx(0.0, 0.0), p}; // axis is a diameter
    } else {
        // carrying circle: Re(conj(p) c) = Re(conj(q) c) = 1
        double a11 = p.real(), a12 = p.imag();
        double a21 = q.real(), a22 = q.imag();
        double det = a11 * a22 - a12 * a21;
        cplx c((a22 - a12) / det, (a11 - a21) / det);
        double radius = std::sqrt(std::norm(c) - 1.0);
        cplx z0 = c * (1.0 - radius / std::abs(c)); // point of the axis nearest 0
        u = UnitTangent{z0, direction_toward(z0, p)};
    }

    // pull the base point into the fundamental polygon
    for (int iter = 0; iter < 128 && !s.contains(u.base); ++iter) {
        int worst = -1;
        double worst_gap = 0.0;
        for (int k = 0; k < 8; ++k) {
            const GeodesicArc& arc = s.sides()[k].arc;
            double gap = arc.radius - std::abs(u.base - arc.center);
            if (gap > worst_gap) {
                worst_gap = gap;
                worst = k;
            }
        }
        if (worst < 0) break;
        u = s.disk_generator(inverse_letter(s.sides()[worst].letter)).apply(u);
    }
    if (!s.contains(u.base, -1e-9))
        throw Error("hyperbolic", "construction_failure", "could not move axis point into the polygon");
    return u;
}

// --- serialization ---

std::string SurfaceModel::to_json() const {
    nlohmann::ordered_json j;
    j["model"] = "disk";
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (Letter l = 0; l < 8; ++l)
        gens.push_back({sl2_[l](0, 0), sl2_[l](0, 1), sl2_[l](1, 0), sl2_[l](1, 1)});
    j["generators"] = gens;
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    for (const Side& s : sides_)
        poly.push_back({{s.arc.a.real(), s.arc.a.imag()}, {s.arc.b.real(), s.arc.b.imag()}});
    j["polygon"] = poly;
    j["relator"] = genus2_relator().str();
    return j.dump(2);
}

SurfaceModel SurfaceModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error("hyperbolic", "parse", e.what());
    }
    SurfaceModel s;
    try {
        if (j.at("model").get<std::string>() != "disk")
            throw Error("hyperbolic", "parse", "unsupported model");
        auto gens = j.at("generators");
        if (gens.size() != 8) throw Error("hyperbolic", "parse", "need 8 generators");
        for (Letter l = 0; l < 8; ++l) {
            auto g = gens.at(l);
            Sl2 m;
            m << g.at(0).get<double>(), g.at(1).get<double>(), g.at(2).get<double>(),
                g.at(3).get<double>();
            s.disk_[l] = to_disk(m);
        }
        auto poly = j.at("polygon");
        if (poly.size() != 8) throw Error("hyperbolic", "parse", "need 8 polygon sides");
        for (int k = 0; k < 8; ++k) {
            auto side = poly.at(k);
            s.vertices_[k] =
                cplx(side.at(1).at(0).get<double>(), side.at(1).at(1).get<double>());
        }
        if (j.at("relator").get<std::string>() != genus2_relator().str())
            throw Error("hyperbolic", "parse", "unexpected relator");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("hyperbolic", "parse", e.what());
    }
    s.vertex_radius_ = std::abs(s.vertices_[0]);
    s.finish_setup();
    return s;
}

} // namespace lyapgap::hyp
