//! Planar scene layout, exact path lengths, and the far-field angular model.
//!
//! The scene is a monostatic radar plus two surface centers on a common line
//! (the surface axis). All bearings are measured from the positive axis
//! direction (surface 1 toward surface 2) at the pair midpoint and lie in
//! (0, pi); the mirror side of the axis folds onto the same interval, which is
//! the inherent ambiguity of a linear aperture.
//!
//! Scalar ranges used by the interference model (`t`, `s1`, `p`) are
//! referenced to the pair midpoint; the per-surface center offsets enter only
//! through the `d`-dependent phase terms. [`exact_path_lengths`] is the
//! coordinate oracle the far-field approximations are validated against.

use libm::{atan2, cos, fabs, sin, sqrt};
use thiserror::Error;

/// Targets closer to the pair midpoint than this many separations `d` get a
/// near-field flag from [`far_field_angles`].
pub const FAR_FIELD_EXCLUSION_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("coincident points: {0}")]
    CoincidentPoints(&'static str),
    #[error("degenerate scene: {0}")]
    DegenerateScene(&'static str),
    #[error("range {p} m is not reachable along bearing {theta_rad} rad")]
    InfeasibleRange { p: f64, theta_rad: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// A point in the metric scene plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        sqrt(dx * dx + dy * dy)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn sub(self, other: Point2) -> (f64, f64) {
        (self.x - other.x, self.y - other.y)
    }
}

/// Radar and surface-pair layout with the derived quantities the signal model
/// needs.
#[derive(Debug, Clone, PartialEq)]
pub struct SceneGeometry {
    radar: Point2,
    surface1: Point2,
    surface2: Point2,
    separation: f64,
    axis_unit: (f64, f64),
    midpoint: Point2,
    radar_to_surface1: f64,
    radar_to_surface2: f64,
    radar_to_midpoint: f64,
    theta_in: f64,
}

impl SceneGeometry {
    /// Build a scene from the radar position and the two surface centers.
    ///
    /// The surface axis points from surface 1 to surface 2. Fails when the
    /// surfaces coincide, the radar sits on a surface center, or the radar is
    /// collinear with the surface axis (no meaningful arrival bearing).
    pub fn new(radar: Point2, surface1: Point2, surface2: Point2) -> Result<Self, GeometryError> {
        if !(radar.is_finite() && surface1.is_finite() && surface2.is_finite()) {
            return Err(GeometryError::InvalidParameter("non-finite coordinates"));
        }
        let separation = surface1.distance(surface2);
        if separation <= 0.0 {
            return Err(GeometryError::CoincidentPoints("surface centers coincide"));
        }
        let radar_to_surface1 = radar.distance(surface1);
        let radar_to_surface2 = radar.distance(surface2);
        if radar_to_surface1 <= 0.0 || radar_to_surface2 <= 0.0 {
            return Err(GeometryError::CoincidentPoints(
                "radar coincides with a surface center",
            ));
        }
        let (ax, ay) = surface2.sub(surface1);
        let axis_unit = (ax / separation, ay / separation);
        let midpoint = Point2::new(
            0.5 * (surface1.x + surface2.x),
            0.5 * (surface1.y + surface2.y),
        );
        let radar_to_midpoint = radar.distance(midpoint);
        if radar_to_midpoint <= 0.0 {
            return Err(GeometryError::CoincidentPoints(
                "radar coincides with the pair midpoint",
            ));
        }
        let theta_in = bearing(axis_unit, midpoint, radar);
        if theta_in <= 0.0 || theta_in >= core::f64::consts::PI {
            return Err(GeometryError::DegenerateScene(
                "radar is collinear with the surface axis",
            ));
        }
        Ok(Self {
            radar,
            surface1,
            surface2,
            separation,
            axis_unit,
            midpoint,
            radar_to_surface1,
            radar_to_surface2,
            radar_to_midpoint,
            theta_in,
        })
    }

    pub fn radar(&self) -> Point2 {
        self.radar
    }

    pub fn surface1(&self) -> Point2 {
        self.surface1
    }

    pub fn surface2(&self) -> Point2 {
        self.surface2
    }

    /// Center-to-center surface separation `d`.
    pub fn separation(&self) -> f64 {
        self.separation
    }

    /// Unit vector along the surface line, pointing surface 1 -> surface 2.
    pub fn axis_unit(&self) -> (f64, f64) {
        self.axis_unit
    }

    pub fn midpoint(&self) -> Point2 {
        self.midpoint
    }

    /// Exact radar -> surface-1-center distance.
    pub fn radar_to_surface1(&self) -> f64 {
        self.radar_to_surface1
    }

    /// Exact radar -> surface-2-center distance.
    pub fn radar_to_surface2(&self) -> f64 {
        self.radar_to_surface2
    }

    /// Exact radar -> pair-midpoint distance; the `t` of the range model.
    pub fn radar_to_midpoint(&self) -> f64 {
        self.radar_to_midpoint
    }

    /// Bearing of the radar seen from the pair midpoint, in (0, pi).
    pub fn theta_in(&self) -> f64 {
        self.theta_in
    }

    /// Position at polar coordinates (bearing from the axis, range from the
    /// midpoint), on the radar side of the axis.
    pub fn point_at(&self, theta: f64, range_from_midpoint: f64) -> Point2 {
        let (ux, uy) = self.axis_unit;
        // Normal chosen so the radar sits at positive bearing.
        let (mut nx, mut ny) = (-uy, ux);
        let (rx, ry) = self.radar.sub(self.midpoint);
        if rx * nx + ry * ny < 0.0 {
            nx = -nx;
            ny = -ny;
        }
        let (c, s) = (cos(theta), sin(theta));
        Point2::new(
            self.midpoint.x + range_from_midpoint * (c * ux + s * nx),
            self.midpoint.y + range_from_midpoint * (c * uy + s * ny),
        )
    }
}

/// Angle in [0, pi] between `axis` and the ray `from -> to`.
fn bearing(axis: (f64, f64), from: Point2, to: Point2) -> f64 {
    let (vx, vy) = to.sub(from);
    let dot = axis.0 * vx + axis.1 * vy;
    let cross = axis.0 * vy - axis.1 * vx;
    fabs(atan2(cross, dot))
}

/// Exact Euclidean distances for one radar/surfaces/target configuration.
///
/// Surface distances are measured from the surface centers. This is the
/// oracle the far-field relations are tested against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLengths {
    /// radar -> surface 1 center
    pub t1: f64,
    /// radar -> surface 2 center
    pub t2: f64,
    /// surface 1 center -> target
    pub s1: f64,
    /// surface 2 center -> target
    pub s2: f64,
    /// radar -> target
    pub p: f64,
}

pub fn exact_path_lengths(
    scene: &SceneGeometry,
    target: Point2,
) -> Result<PathLengths, GeometryError> {
    if !target.is_finite() {
        return Err(GeometryError::InvalidParameter("non-finite target"));
    }
    let p = scene.radar.distance(target);
    let s1 = scene.surface1.distance(target);
    let s2 = scene.surface2.distance(target);
    if p <= 0.0 || s1 <= 0.0 || s2 <= 0.0 {
        return Err(GeometryError::CoincidentPoints(
            "target coincides with the radar or a surface center",
        ));
    }
    Ok(PathLengths {
        t1: scene.radar_to_surface1,
        t2: scene.radar_to_surface2,
        s1,
        s2,
        p,
    })
}

/// Far-field bearings of a target, with validity flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FarFieldAngles {
    /// Target bearing from the surface axis at the pair midpoint.
    pub theta: f64,
    /// Radar bearing (same reference), copied from the scene.
    pub theta_in: f64,
    /// Target lies within [`FAR_FIELD_EXCLUSION_FACTOR`] separations of the
    /// midpoint; the plane-wave model degrades there.
    pub near_field: bool,
    /// Target is (numerically) on the surface axis, where the bearing hits
    /// the 0/pi boundary of its open interval.
    pub on_axis: bool,
}

/// Bearings of `target` under the far-field model. Always returns values;
/// `near_field`/`on_axis` flag the placements where they should be trusted
/// less.
pub fn far_field_angles(scene: &SceneGeometry, target: Point2) -> FarFieldAngles {
    let theta = bearing(scene.axis_unit, scene.midpoint, target);
    let range = scene.midpoint.distance(target);
    FarFieldAngles {
        theta,
        theta_in: scene.theta_in,
        near_field: range < FAR_FIELD_EXCLUSION_FACTOR * scene.separation,
        on_axis: sin(theta) < 1e-9,
    }
}

/// First-order path lengths to the second surface given those to the first.
///
/// Both follow from projecting the inter-surface offset `d` onto the
/// plane-wave directions at the midpoint: moving from surface 1 to surface 2
/// shortens the range to any point at bearing `alpha` by `d*cos(alpha)`, so
///
/// ```text
/// t2 = t1 - d*cos(theta_in),    s2 = s1 - d*cos(theta).
/// ```
///
/// The error of either relation decays as `d^2 / (2 r)` with the point's
/// range `r`; see the oracle-convergence test.
pub fn far_field_path_model(
    scene: &SceneGeometry,
    theta: f64,
    theta_in: f64,
    s1: f64,
) -> (f64, f64) {
    let d = scene.separation;
    let t2 = scene.radar_to_surface1 - d * cos(theta_in);
    let s2 = s1 - d * cos(theta);
    (t2, s2)
}

/// Midpoint range of a target at bearing `theta` whose radar range is `p`.
///
/// Solves the law of cosines for the triangle (radar, pair midpoint, target)
/// with the vertex angle `gamma = theta_in - theta` at the midpoint:
///
/// ```text
/// p^2 = t^2 + s^2 - 2 t s cos(gamma)  =>  s = t cos(gamma) +- sqrt(p^2 - t^2 sin^2(gamma))
/// ```
///
/// When both roots are positive (`p < t` and `cos(gamma) > 0`) the two target
/// positions are genuinely indistinguishable from `(p, theta)` alone; the
/// smaller root — the target on the surface side of the radar — is returned,
/// which is the regime of every validation scene. The far root is
/// `t*cos(gamma) + sqrt(disc)`.
pub fn s1_from_range(scene: &SceneGeometry, p: f64, theta: f64) -> Result<f64, GeometryError> {
    if !(p > 0.0) {
        return Err(GeometryError::InvalidParameter("radar range must be > 0"));
    }
    let t = scene.radar_to_midpoint;
    let gamma = scene.theta_in - theta;
    let (sg, cg) = (sin(gamma), cos(gamma));
    let disc = p * p - t * t * sg * sg;
    if disc < 0.0 {
        return Err(GeometryError::InfeasibleRange { p, theta_rad: theta });
    }
    let root = sqrt(disc);
    let near = t * cg - root;
    let far = t * cg + root;
    if near > 0.0 {
        Ok(near)
    } else if far > 0.0 {
        Ok(far)
    } else {
        Err(GeometryError::InfeasibleRange { p, theta_rad: theta })
    }
}

/// A point target with its model parameters derived from the scene.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetPlacement {
    position: Point2,
    theta: f64,
    midpoint_range: f64,
    radar_range: f64,
    surface1_range: f64,
    surface2_range: f64,
    rcs: f64,
    near_field: bool,
}

impl TargetPlacement {
    /// Place a target by bearing and range from the pair midpoint (the
    /// parameterization of the estimation model).
    pub fn from_polar(
        scene: &SceneGeometry,
        theta: f64,
        midpoint_range: f64,
        rcs: f64,
    ) -> Result<Self, GeometryError> {
        if !(theta > 0.0 && theta < core::f64::consts::PI) {
            return Err(GeometryError::InvalidParameter(
                "bearing must lie in (0, pi)",
            ));
        }
        if !(midpoint_range > 0.0) {
            return Err(GeometryError::InvalidParameter(
                "midpoint range must be > 0",
            ));
        }
        Self::from_position(scene, scene.point_at(theta, midpoint_range), rcs)
    }

    /// Place a target by scene coordinates.
    pub fn from_position(
        scene: &SceneGeometry,
        position: Point2,
        rcs: f64,
    ) -> Result<Self, GeometryError> {
        if !(rcs >= 0.0 && rcs.is_finite()) {
            return Err(GeometryError::InvalidParameter(
                "radar cross section must be finite and >= 0",
            ));
        }
        let paths = exact_path_lengths(scene, position)?;
        let angles = far_field_angles(scene, position);
        if angles.on_axis {
            return Err(GeometryError::DegenerateScene(
                "target lies on the surface axis",
            ));
        }
        Ok(Self {
            position,
            theta: angles.theta,
            midpoint_range: scene.midpoint.distance(position),
            radar_range: paths.p,
            surface1_range: paths.s1,
            surface2_range: paths.s2,
            rcs,
            near_field: angles.near_field,
        })
    }

    pub fn position(&self) -> Point2 {
        self.position
    }

    /// Bearing from the surface axis, in (0, pi).
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Range from the pair midpoint (the `s1` of the range constraint).
    pub fn midpoint_range(&self) -> f64 {
        self.midpoint_range
    }

    /// Range from the radar (the `p` known from range processing).
    pub fn radar_range(&self) -> f64 {
        self.radar_range
    }

    /// Exact range from surface 1's center.
    pub fn surface1_range(&self) -> f64 {
        self.surface1_range
    }

    /// Exact range from surface 2's center.
    pub fn surface2_range(&self) -> f64 {
        self.surface2_range
    }

    pub fn rcs(&self) -> f64 {
        self.rcs
    }

    pub fn near_field(&self) -> bool {
        self.near_field
    }
}
