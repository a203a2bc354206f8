//! Natural-unit bookkeeping.
//!
//! All dynamics run with `ħ = c = m = 1`, so one unit of length is the
//! reduced Compton wavelength `ħ/mc` and one unit of time is `ħ/mc²`.
//! `Scales` records the SI values of those units for report output; nothing
//! in the propagators reads it.

use serde::{Deserialize, Serialize};

/// SI value of the natural mass, length and time units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scales {
    /// Particle mass in kg.
    pub mass: f64,
    /// Length unit in m.
    pub length: f64,
    /// Time unit in s.
    pub time: f64,
}

impl Default for Scales {
    fn default() -> Self {
        Self { mass: 1.0, length: 1.0, time: 1.0 }
    }
}

/// Physical constants entering the operator builders. In natural units all
/// of `hbar`, `c`, `mass` are one; `charge` stays configurable so the
/// electromagnetic terms can be switched on with any strength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysParams {
    pub hbar: f64,
    pub c: f64,
    pub mass: f64,
    pub charge: f64,
}

impl Default for PhysParams {
    fn default() -> Self {
        Self { hbar: 1.0, c: 1.0, mass: 1.0, charge: 1.0 }
    }
}

impl PhysParams {
    pub fn with_charge(charge: f64) -> Self {
        Self { charge, ..Self::default() }
    }

    /// Rest energy mc².
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }
}
