//! Geodesic distance, exponential position similarity and the interwoven
//! grid encoding used by the positional features.

use core::fmt;

use serde::{Deserialize, Serialize};

use crate::model::{check_coordinate, ModelError};

/// Mean Earth radius in meters. Station pairs of interest are well under
/// 1.5 km apart, where the haversine error against an ellipsoid is
/// negligible.
pub const EARTH_RADIUS_M: f64 = 6_371_000.0;

#[derive(Debug, Clone, PartialEq)]
pub enum GeoError {
    InvalidCoordinate(ModelError),
    /// Position similarity needs a strictly positive distance threshold.
    NonPositiveThreshold(f64),
    /// Grid index must be below the number of grids.
    GridIndexOutOfRange { index: u32, n_grids: u32 },
    /// Grid resolution and grid count must both be at least 1.
    InvalidGridSpec,
}

impl fmt::Display for GeoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeoError::InvalidCoordinate(e) => write!(f, "invalid coordinate: {e}"),
            GeoError::NonPositiveThreshold(v) => {
                write!(f, "distance threshold must be > 0, got {v}")
            }
            GeoError::GridIndexOutOfRange { index, n_grids } => {
                write!(f, "grid index {index} out of range for {n_grids} grids")
            }
            GeoError::InvalidGridSpec => write!(f, "grid resolution and count must be >= 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GeoError {}

impl From<ModelError> for GeoError {
    fn from(e: ModelError) -> GeoError {
        GeoError::InvalidCoordinate(e)
    }
}

/// Great-circle distance in meters between two (lat, lon) points,
/// by the haversine formula on a sphere of radius [`EARTH_RADIUS_M`].
pub fn geo_distance(a: (f64, f64), b: (f64, f64)) -> Result<f64, GeoError> {
    check_coordinate(a.0, a.1)?;
    check_coordinate(b.0, b.1)?;
    Ok(haversine_m(a.0, a.1, b.0, b.1))
}

/// Haversine distance on pre-validated coordinates.
pub(crate) fn haversine_m(lat_a: f64, lon_a: f64, lat_b: f64, lon_b: f64) -> f64 {
    if lat_a == lat_b && lon_a == lon_b {
        return 0.0;
    }
    let phi_a = lat_a.to_radians();
    let phi_b = lat_b.to_radians();
    let d_phi = (lat_b - lat_a).to_radians();
    let d_lambda = (lon_b - lon_a).to_radians();

    let s_phi = libm::sin(d_phi / 2.0);
    let s_lambda = libm::sin(d_lambda / 2.0);
    let h = s_phi * s_phi + libm::cos(phi_a) * libm::cos(phi_b) * s_lambda * s_lambda;
    2.0 * EARTH_RADIUS_M * libm::asin(libm::sqrt(h.min(1.0)))
}

/// Exponential position similarity: `exp(-ln(2) * d / d_hat)`.
///
/// Equals 1 at distance 0 and exactly 0.5 at `d = d_hat`, dropping below
/// 0.5 beyond the threshold.
pub fn position_similarity(a: (f64, f64), b: (f64, f64), d_hat: f64) -> Result<f64, GeoError> {
    if !(d_hat > 0.0) || !d_hat.is_finite() {
        return Err(GeoError::NonPositiveThreshold(d_hat));
    }
    let d = geo_distance(a, b)?;
    Ok(similarity_from_distance(d, d_hat))
}

/// The similarity value for an already-computed distance.
pub fn similarity_from_distance(d: f64, d_hat: f64) -> f64 {
    libm::exp(-core::f64::consts::LN_2 * d / d_hat)
}

/// Geometry of the interwoven grids: `n_grids` copies of a
/// `base_resolution` x `base_resolution` grid over the whole globe, grid
/// `i` offset by `i/n` of a cell in both axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub base_resolution: u32,
    pub n_grids: u32,
}

impl GridSpec {
    pub fn new(base_resolution: u32, n_grids: u32) -> Result<GridSpec, GeoError> {
        if base_resolution < 1 || n_grids < 1 {
            return Err(GeoError::InvalidGridSpec);
        }
        Ok(GridSpec {
            base_resolution,
            n_grids,
        })
    }
}

impl Default for GridSpec {
    /// 256x256 base grid with 2 interwoven copies.
    fn default() -> GridSpec {
        GridSpec {
            base_resolution: 256,
            n_grids: 2,
        }
    }
}

/// A cell on one of the interwoven grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridCoord {
    pub grid_index: u32,
    pub x: u32,
    pub y: u32,
}

/// Maps a point to its cell on grid `grid_index`.
///
/// Raw coordinates place lon -180 at x = 0 and lat -90 at y = 0 (y grows
/// northward), scaled to `base_resolution` cells per axis. Grid `i` of `n`
/// subtracts `i/n` of a cell before flooring. An x index of -1 at the
/// anti-offset edge wraps around the date line; a y index of -1 clamps to
/// 0 (there is nothing south of the pole).
pub fn grid_cell(point: (f64, f64), grid_index: u32, spec: &GridSpec) -> Result<GridCoord, GeoError> {
    check_coordinate(point.0, point.1)?;
    if spec.base_resolution < 1 || spec.n_grids < 1 {
        return Err(GeoError::InvalidGridSpec);
    }
    if grid_index >= spec.n_grids {
        return Err(GeoError::GridIndexOutOfRange {
            index: grid_index,
            n_grids: spec.n_grids,
        });
    }
    let res = spec.base_resolution as f64;
    let raw_x = clamp_raw((point.1 + 180.0) / 360.0 * res, res);
    let raw_y = clamp_raw((point.0 + 90.0) / 180.0 * res, res);
    let offset = grid_index as f64 / spec.n_grids as f64;

    let x = libm::floor(raw_x - offset) as i64;
    let y = libm::floor(raw_y - offset) as i64;
    let x = if x < 0 { x + spec.base_resolution as i64 } else { x };
    let y = y.max(0);
    Ok(GridCoord {
        grid_index,
        x: x as u32,
        y: y as u32,
    })
}

/// Clamps a raw grid coordinate into [0, res) so flooring cannot produce
/// an index of `res` at lat 90 / lon 180.
fn clamp_raw(raw: f64, res: f64) -> f64 {
    if raw >= res {
        // Largest f64 below res.
        f64::from_bits(res.to_bits() - 1)
    } else if raw < 0.0 {
        0.0
    } else {
        raw
    }
}
