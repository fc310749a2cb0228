#pragma once

#include "pdm/types.hpp"

namespace pdm {

/// Symmetric tracked-vehicle dimensions. All lengths are half-dimensions:
/// the track footprint is [-L, L] x [-T, T] around each track centerline,
/// and the centerlines sit at body-frame y = +/-W.
struct VehicleGeometry {
    double half_length_L = 0.0;       ///< half track length [m]
    double half_spacing_W = 0.0;      ///< half distance between track centerlines [m]
    double half_track_width_T = 0.0;  ///< half track width [m]
    double sprocket_height_H = 0.0;   ///< body origin height above ground [m]; unused by the planar models
    double grouser_pitch_P = 0.0;     ///< spacing between grouser tips along the track [m]
    double mass_m = 0.0;              ///< vehicle mass [kg]
    double com_offset_x = 0.0;        ///< CoM offset along body x [m]; 0 for the symmetric vehicle
};

enum class TerrainKind { FlatSmooth, FlatGrousers, Stairs };

const char* to_string(TerrainKind kind);

/// Contact environment. Stair fields are meaningful only when kind == Stairs.
struct TerrainModel {
    TerrainKind kind = TerrainKind::FlatSmooth;
    double friction_mu = 0.7;       ///< Coulomb friction coefficient
    double stair_spacing_Ds = 0.0;  ///< distance between stair lips along the slope [m]
    double slope_phi = 0.0;         ///< stair inclination from horizontal [rad], in [0, pi/2)
    double gravity_g = 9.81;        ///< [m/s^2]
    int stair_count = 0;            ///< number of stairs in the scenario staircase
};

/// Rover Robotics Flipper dimensions (half-dimensions of the 0.42/0.27/0.06
/// footprint, 0.04 m grouser pitch). Mass is not published for this vehicle;
/// the 10 kg default only scales normal forces and never moves any argmin.
VehicleGeometry flipper_preset();

/// Throws ValidationError naming the first violated invariant.
/// Side-effect free; valid inputs pass through unchanged.
void validate(const VehicleGeometry& geom, const TerrainModel& terrain);

}  // namespace pdm
