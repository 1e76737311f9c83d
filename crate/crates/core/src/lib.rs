//! Navigation stack for a two-wheeled differential-drive robot.
//!
//! The crate provides the building blocks of a closed-loop point stabilizer:
//!
//! - [`geometry`]: angle arithmetic, poses, and the transform between
//!   Cartesian poses and the goal-relative navigation variables (ρ, α, φ).
//! - [`plant`]: ground-truth unicycle kinematics under bounded input
//!   disturbances, plus the wheel-odometry model used for dead reckoning.
//! - [`estimator`]: an extended Kalman filter fusing odometry with absolute
//!   heading and range-bearing landmark measurements.
//! - [`controller`]: the hybrid feedback law — a Lyapunov global law far from
//!   the goal and a parking law close to it, with hysteretic region switching.
//! - [`linalg`]: the small fixed-size matrix kernel shared by the above.
//!
//! Everything here is `no_std`-compatible (with `alloc`); simulation,
//! file formats, and the CLI live in the companion `ddnav-sim` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod controller;
pub mod estimator;
pub mod geometry;
pub mod linalg;
pub mod plant;

pub use controller::{ControlDecision, ControlMode, Controller, Gains, Region, RegionThresholds};
pub use estimator::{EstimatorState, Landmark, LandmarkMap, Measurement, ProcessNoiseModel};
pub use geometry::{Angle, NavState, Pose};
pub use plant::{ControlInput, Disturbance, DisturbanceBounds, RobotParams, WheelSpeeds};
