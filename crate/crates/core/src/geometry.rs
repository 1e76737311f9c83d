//! Angles, planar poses, and the goal-relative navigation variables.
//!
//! The navigation variables (ρ, α, φ) describe the robot relative to a goal
//! pose: ρ is the distance to the goal position, α the bearing of the goal
//! ray measured from the robot heading, and φ the same bearing measured from
//! the goal heading. All angles in the crate live on the half-open interval
//! (−π, π].

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{PI, TAU};
use core::fmt;
use core::ops::{Add, Neg, Sub};

/// Errors from angle construction and pose transforms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeometryError {
    /// An angle was built from a NaN or infinite value.
    NonFinite,
    /// The robot position coincides with the goal position, so the bearing
    /// to the goal (and with it α and φ) is undefined.
    DegenerateAtGoal,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NonFinite => write!(f, "angle value is not finite"),
            GeometryError::DegenerateAtGoal => {
                write!(f, "robot position coincides with the goal position")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

/// An angle in radians, kept normalized to (−π, π].
///
/// The boundary convention maps −π to +π, so every direction has exactly one
/// representation and small signed errors stay small across the seam.
#[derive(Clone, Copy, PartialEq, PartialOrd, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "f64", into = "f64"))]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// Builds an angle from radians, wrapping into (−π, π].
    pub fn new(radians: f64) -> Result<Self, GeometryError> {
        if !radians.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Angle(wrap(radians)))
    }

    /// Builds an angle from degrees.
    pub fn from_degrees(degrees: f64) -> Result<Self, GeometryError> {
        Angle::new(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn abs(self) -> f64 {
        self.0.abs()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }
}

/// Wraps an already-finite value into (−π, π].
fn wrap(radians: f64) -> f64 {
    let mut a = radians % TAU; // (−2π, 2π)
    if a > PI {
        a -= TAU;
    } else if a <= -PI {
        a += TAU;
    }
    a
}

/// Normalizes raw radians into (−π, π].
///
/// The result is congruent to the input modulo 2π; −π maps to +π by the
/// half-open convention.
pub fn normalize_angle(radians: f64) -> Result<Angle, GeometryError> {
    Angle::new(radians)
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        // Sum of two normalized angles is bounded, so wrapping cannot fail.
        Angle(wrap(self.0 + rhs.0))
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(wrap(self.0 - rhs.0))
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle(wrap(-self.0))
    }
}

impl TryFrom<f64> for Angle {
    type Error = GeometryError;
    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Angle::new(value)
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.radians()
    }
}

/// Planar robot configuration (x, y, heading) in the world frame.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub heading: Angle,
}

impl Pose {
    pub fn new(x: f64, y: f64, heading: Angle) -> Self {
        Pose { x, y, heading }
    }

    /// Builds a pose from raw coordinates, validating finiteness and
    /// normalizing the heading.
    pub fn from_xytheta(x: f64, y: f64, theta: f64) -> Result<Self, GeometryError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Pose::new(x, y, Angle::new(theta)?))
    }

    /// Euclidean distance between the positions of two poses.
    pub fn position_distance(&self, other: &Pose) -> f64 {
        let dx = other.x - self.x;
        let dy = other.y - self.y;
        dx.hypot(dy)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.heading.radians().is_finite()
    }
}

/// Goal-relative polar coordinates (ρ, α, φ).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NavState {
    /// Distance to the goal position, ≥ 0.
    pub rho: f64,
    /// Bearing of the goal ray relative to the robot heading.
    pub alpha: Angle,
    /// Bearing of the goal ray relative to the goal heading.
    pub phi: Angle,
}

impl NavState {
    pub fn new(rho: f64, alpha: Angle, phi: Angle) -> Self {
        debug_assert!(rho >= 0.0, "rho must be nonnegative");
        NavState { rho, alpha, phi }
    }
}

/// Transforms a robot pose into navigation variables relative to `goal`.
///
/// With the goal at (X₂, Y₂, θ₂):
/// ρ = √((X₂−X)² + (Y₂−Y)²),
/// φ = atan2(Y₂−Y, X₂−X) − θ₂,
/// α = atan2(Y₂−Y, X₂−X) − θ.
///
/// Fails with [`GeometryError::DegenerateAtGoal`] when the positions
/// coincide; the hybrid controller switches to its local law before that
/// can happen in closed loop.
pub fn to_nav(robot: &Pose, goal: &Pose) -> Result<NavState, GeometryError> {
    let dx = goal.x - robot.x;
    let dy = goal.y - robot.y;
    if dx == 0.0 && dy == 0.0 {
        return Err(GeometryError::DegenerateAtGoal);
    }
    let rho = dx.hypot(dy);
    let bearing = dy.atan2(dx);
    let phi = Angle::new(bearing)? - goal.heading;
    let alpha = Angle::new(bearing)? - robot.heading;
    Ok(NavState::new(rho, alpha, phi))
}

/// Feedback disturbances of the navigation variables induced by an estimate
/// error: (ε_ρ, ε_φ, ε_α) with ε_ρ = ρ̂ − ρ, ε_φ = φ̂ − φ and
/// ε_α = ε_φ − ε_θ where ε_θ is the heading estimate error.
pub fn nav_error_offsets(
    est: &Pose,
    truth: &Pose,
    goal: &Pose,
) -> Result<(f64, Angle, Angle), GeometryError> {
    let nav_est = to_nav(est, goal)?;
    let nav_truth = to_nav(truth, goal)?;
    let eps_rho = nav_est.rho - nav_truth.rho;
    let eps_phi = nav_est.phi - nav_truth.phi;
    let eps_theta = est.heading - truth.heading;
    let eps_alpha = eps_phi - eps_theta;
    Ok((eps_rho, eps_phi, eps_alpha))
}
