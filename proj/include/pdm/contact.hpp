#pragma once

#include <vector>

#include "pdm/geometry.hpp"
#include "pdm/types.hpp"

namespace pdm {

/// One full-width line contact between a track and the terrain.
struct ContactLine {
    Side side = Side::Right;
    double position_px = 0.0;    ///< body-frame x of the contact line at the track centerline [m]
    double normal_force_N = 0.0; ///< [N], filled by normal_forces()
    long grid_index = 0;         ///< identity of the grouser / stair lip this line belongs to
};

/// Contact lines of one track, ordered front to rear (descending position).
struct SideContacts {
    std::vector<ContactLine> lines;
    double phase_d = 0.0;  ///< distance from the track front (x = +L) to the first contact [m]
};

/// Full contact configuration of the vehicle at one instant.
/// Invariants: per side, consecutive positions differ by exactly
/// effective_spacing and the count is floor((2L - phase_d)/spacing) + 1.
struct ContactState {
    SideContacts left;
    SideContacts right;
    double effective_spacing = 0.0;  ///< contact-line pitch along body x [m]

    const SideContacts& side(Side s) const { return s == Side::Left ? left : right; }
    SideContacts& side(Side s) { return s == Side::Left ? left : right; }
};

/// Grouser tip contacts on flat hard ground. Offsets are measured back from
/// the track front and are normalized modulo the grouser pitch.
ContactState grouser_contacts(const VehicleGeometry& geom,
                              double phase_offset_left,
                              double phase_offset_right);

/// Stair-lip contacts for a vehicle on the inclined stair plane.
///
/// Stair lips are the lines X = k * Ds in stair-plane coordinates, where X
/// points up the slope. The vehicle origin sits at X = L + progress_s with
/// heading pose_theta, so progress_s = 0 with pose_theta = 0 is the datum
/// configuration "rear of both tracks on a lip". A lip crosses a track
/// centerline (body y = -W right, +W left) at body x
///
///     p = (k*Ds - X) * sec(theta) + y_centerline * tan(theta)
///
/// which makes the contact pitch Ds*sec(theta) and offsets the two sides by
/// 2W*tan(theta). That offset is this module's reading of the stair-lip
/// geometry; it is not stated as a formula anywhere and lives only here.
///
/// Throws ContactError ("no contact") when a track spans no lip.
ContactState stair_contacts(double pose_theta, double progress_s,
                            const VehicleGeometry& geom,
                            const TerrainModel& terrain);

/// Same enumeration with the vehicle origin at absolute plane coordinate X.
ContactState stair_contacts_at(double plane_x, double pose_theta,
                               const VehicleGeometry& geom,
                               const TerrainModel& terrain);

/// Distributes the supported weight over the contact lines by moment balance.
///
/// Per side: sum N = share/2 and sum N*(p - com_x) = 0, with share = m*g on
/// flat ground and m*g*cos(phi) on stairs. With more than two lines the
/// balance is indeterminate; a linear pressure ansatz N = a + b*p is solved
/// and negative supports are dropped active-set style. If one side alone
/// cannot balance its share (single support away from the CoM), the balance
/// is retried over both tracks jointly before declaring tip-over, since the
/// rigid frame transfers pitch moment between the sides.
///
/// Throws StaticsError ("statics infeasible") when no nonnegative
/// distribution exists.
ContactState normal_forces(ContactState state, const VehicleGeometry& geom,
                           const TerrainModel& terrain);

/// Travel along the body x-axis until the next contact change: either the
/// rear contact slides off at phase_d = 2L mod spacing (loss) or a new line
/// enters at the front when phase_d wraps past the spacing (gain). Minimum
/// over both sides; 0 means an event is imminent.
double next_event(const ContactState& state, const VehicleGeometry& geom,
                  const TerrainModel& terrain, double pose_theta);

}  // namespace pdm
