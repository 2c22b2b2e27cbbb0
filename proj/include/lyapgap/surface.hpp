#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lyapgap/disk.hpp"
#include "lyapgap/rng.hpp"
#include "lyapgap/word.hpp"

namespace lyapgap::hyp {

/// One geodesic side of the fundamental octagon together with its gluing
/// data: exiting through this side appends `letter` to the tracked word and
/// re-enters through side `partner`.
struct Side {
    GeodesicArc arc; // from vertex k-1 to vertex k (ccw)
    int partner;
    Letter letter;   // pairing generator of this side (maps partner onto it)
};

/// Compact genus-2 surface: fundamental octagon in the Poincare disk with
/// side pairings and the SL(2,R) generators of the Fuchsian group. The
/// SL(2,R) matrices act on the disk through a Cayley conjugation computed
/// once at construction. Immutable and shareable across threads.
class SurfaceModel {
public:
    static SurfaceModel bolza();

    /// generator images; letters 0..3 are a1,b1,a2,b2 and 4..7 the inverses
    const Sl2& generator(Letter l) const { return sl2_[l]; }
    const Mobius& disk_generator(Letter l) const { return disk_[l]; }

    const std::array<Side, 8>& sides() const { return sides_; }
    const std::array<cplx, 8>& vertices() const { return vertices_; }

    bool contains(cplx z, double slack = 1e-12) const;

    Sl2 evaluate_sl2(const Word& w) const;
    Mobius evaluate_disk(const Word& w) const;

    double vertex_radius() const { return vertex_radius_; }

    /// interior angle sum of the polygon (Gauss-Bonnet: area = 6 pi - sum)
    double angle_sum() const;
    double area() const;

    /// runs all construction invariants; throws construction_failure
    void validate() const;

    std::string to_json() const;
    static SurfaceModel from_json(const std::string& text);

private:
    SurfaceModel() = default;
    void finish_setup(); // derive disk forms, sides, inverses; validate

    std::array<Sl2, 8> sl2_;
    std::array<Mobius, 8> disk_;
    std::array<Side, 8> sides_;
    std::array<cplx, 8> vertices_;
    double vertex_radius_ = 0.0;
};

SurfaceModel build_bolza_surface();

/// Event-driven geodesic tracking: flows to the next polygon-side crossing
/// in closed form, applies the pairing to re-center, and records the letter.
class GeodesicTracker {
public:
    struct Crossing {
        Letter letter;
        double time; // absolute hyperbolic time of the crossing
    };

    GeodesicTracker(const SurfaceModel& s, const UnitTangent& start);

    /// advance to the next side crossing; throws hyperbolic.tangency when the
    /// crossing is within tolerance of a polygon vertex
    Crossing step();

    const UnitTangent& state() const { return state_; }
    double elapsed() const { return elapsed_; }
    const Word& word() const { return word_; }

private:
    const SurfaceModel* surf_;
    UnitTangent state_;
    double elapsed_ = 0.0;
    Word word_;
};

struct TrackResult {
    Word word;
    double elapsed;
    UnitTangent end;
};

/// Tracks until hyperbolic time `horizon`; the returned end state is at time
/// exactly `horizon` (inside the polygon), and the word collects the letters
/// of all crossings in (0, horizon].
TrackResult track_geodesic(const SurfaceModel& s, const UnitTangent& start, double horizon);

/// Base point by hyperbolic area on the polygon (rejection sampling),
/// direction uniform and independent.
UnitTangent sample_liouville(const SurfaceModel& s, std::uint64_t seed);
UnitTangent sample_liouville(const SurfaceModel& s, Rng& rng);

/// translation length of j_X(w); throws non_hyperbolic_element
double translation_length(const SurfaceModel& s, const Word& w);

/// Unit tangent on the axis of j_X(w) (based inside the polygon), pointing
/// toward the attracting fixed point. Used for periodic-orbit rays.
UnitTangent periodic_ray(const SurfaceModel& s, const Word& w);

} // namespace lyapgap::hyp
