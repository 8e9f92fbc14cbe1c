//! Domain types shared by all modules: station identifiers, pair classes,
//! labeled pairs and ground-truth collections.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

/// Errors raised when constructing domain values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Label is empty after trimming whitespace.
    EmptyLabel,
    /// Latitude outside [-90, 90] or not finite.
    InvalidLatitude(f64),
    /// Longitude outside [-180, 180] or not finite.
    InvalidLongitude(f64),
    /// Both sides of a pair are the same identifier.
    SelfPair,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::EmptyLabel => write!(f, "station label is empty"),
            ModelError::InvalidLatitude(v) => write!(f, "latitude {v} outside [-90, 90]"),
            ModelError::InvalidLongitude(v) => write!(f, "longitude {v} outside [-180, 180]"),
            ModelError::SelfPair => write!(f, "pair joins an identifier with itself"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ModelError {}

/// A station identifier: a label plus a geographic position.
///
/// Two identifiers are value-equal iff label, latitude and longitude are
/// all equal. Ordering is lexicographic on (label, lat, lon), which is
/// also the canonical pair order.
#[derive(Debug, Clone)]
pub struct StationIdentifier {
    label: String,
    lat: f64,
    lon: f64,
}

impl StationIdentifier {
    pub fn new(
        label: impl Into<String>,
        lat: f64,
        lon: f64,
    ) -> Result<StationIdentifier, ModelError> {
        let label = label.into();
        if label.trim().is_empty() {
            return Err(ModelError::EmptyLabel);
        }
        check_coordinate(lat, lon)?;
        Ok(StationIdentifier { label, lat, lon })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn lat(&self) -> f64 {
        self.lat
    }

    pub fn lon(&self) -> f64 {
        self.lon
    }

    /// Same label at a different position.
    pub fn with_position(&self, lat: f64, lon: f64) -> Result<StationIdentifier, ModelError> {
        check_coordinate(lat, lon)?;
        Ok(StationIdentifier {
            label: self.label.clone(),
            lat,
            lon,
        })
    }
}

/// Validates a (lat, lon) coordinate; shared with the geometry module.
pub fn check_coordinate(lat: f64, lon: f64) -> Result<(), ModelError> {
    if !lat.is_finite() || !(-90.0..=90.0).contains(&lat) {
        return Err(ModelError::InvalidLatitude(lat));
    }
    if !lon.is_finite() || !(-180.0..=180.0).contains(&lon) {
        return Err(ModelError::InvalidLongitude(lon));
    }
    Ok(())
}

impl PartialEq for StationIdentifier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for StationIdentifier {}

impl PartialOrd for StationIdentifier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StationIdentifier {
    fn cmp(&self, other: &Self) -> Ordering {
        self.label
            .cmp(&other.label)
            .then_with(|| self.lat.total_cmp(&other.lat))
            .then_with(|| self.lon.total_cmp(&other.lon))
    }
}

impl Hash for StationIdentifier {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Bit-level hashing is consistent with total_cmp equality.
        self.label.hash(state);
        self.lat.to_bits().hash(state);
        self.lon.to_bits().hash(state);
    }
}

impl fmt::Display for StationIdentifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ ({}, {})", self.label, self.lat, self.lon)
    }
}

/// Binary classification outcome for a pair of identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairClass {
    Similar,
    NotSimilar,
}

impl PairClass {
    /// The {1, 0} encoding used in serialized ground truth.
    pub fn as_bit(self) -> u8 {
        match self {
            PairClass::Similar => 1,
            PairClass::NotSimilar => 0,
        }
    }

    pub fn from_bit(bit: u8) -> Option<PairClass> {
        match bit {
            1 => Some(PairClass::Similar),
            0 => Some(PairClass::NotSimilar),
            _ => None,
        }
    }
}

/// How a ground-truth pair came to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Derived directly from the source data.
    Original,
    /// Artificial negative: a distant identifier repositioned nearby.
    SpicedNegative,
    /// Original positive with Gaussian noise applied to one side.
    SpicedNoise,
}

/// A labeled, unordered pair of station identifiers.
///
/// Construction enforces canonical order (side `a` sorts before side `b`),
/// so `{a, b}` and `{b, a}` construct the same value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StationPair {
    a: StationIdentifier,
    b: StationIdentifier,
    class: PairClass,
    provenance: Provenance,
}

impl StationPair {
    pub fn new(
        a: StationIdentifier,
        b: StationIdentifier,
        class: PairClass,
        provenance: Provenance,
    ) -> Result<StationPair, ModelError> {
        if a == b {
            return Err(ModelError::SelfPair);
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Ok(StationPair {
            a,
            b,
            class,
            provenance,
        })
    }

    pub fn a(&self) -> &StationIdentifier {
        &self.a
    }

    pub fn b(&self) -> &StationIdentifier {
        &self.b
    }

    pub fn class(&self) -> PairClass {
        self.class
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The unordered identity of the pair, ignoring class and provenance.
    pub fn key(&self) -> (&StationIdentifier, &StationIdentifier) {
        (&self.a, &self.b)
    }

    /// Replaces one side's coordinates (used by spicing noise), keeping
    /// canonical order intact.
    pub fn with_side_position(
        &self,
        side_b: bool,
        lat: f64,
        lon: f64,
    ) -> Result<StationPair, ModelError> {
        let (a, b) = if side_b {
            (self.a.clone(), self.b.with_position(lat, lon)?)
        } else {
            (self.a.with_position(lat, lon)?, self.b.clone())
        };
        StationPair::new(a, b, self.class, self.provenance)
    }

    /// Same pair with a different provenance tag.
    pub fn with_provenance(&self, provenance: Provenance) -> StationPair {
        StationPair {
            provenance,
            ..self.clone()
        }
    }
}

/// Returns the pair with its sides in canonical (lexicographic) order.
///
/// `StationPair::new` already canonicalizes; this is the explicit form and
/// is idempotent.
pub fn canonical_order(pair: StationPair) -> StationPair {
    // Sides are ordered at construction, so this is the identity.
    debug_assert!(pair.a <= pair.b);
    pair
}

/// A collection of labeled pairs plus the identifier universe they came
/// from. Deduplicates pairs under unordered equality on insert.
#[derive(Debug, Clone, Default)]
pub struct GroundTruth {
    pairs: Vec<StationPair>,
    keys: BTreeSet<(StationIdentifier, StationIdentifier)>,
    stations: BTreeSet<StationIdentifier>,
}

impl GroundTruth {
    pub fn new() -> GroundTruth {
        GroundTruth::default()
    }

    /// Inserts a pair; returns false if a pair with the same unordered
    /// identifier set is already present. Both sides are added to the
    /// station universe.
    pub fn insert_pair(&mut self, pair: StationPair) -> bool {
        if !self.keys.insert((pair.a.clone(), pair.b.clone())) {
            return false;
        }
        self.stations.insert(pair.a.clone());
        self.stations.insert(pair.b.clone());
        self.pairs.push(pair);
        true
    }

    /// Adds an identifier to the universe without pairing it.
    pub fn insert_station(&mut self, station: StationIdentifier) -> bool {
        self.stations.insert(station)
    }

    pub fn pairs(&self) -> &[StationPair] {
        &self.pairs
    }

    pub fn stations(&self) -> impl Iterator<Item = &StationIdentifier> {
        self.stations.iter()
    }

    pub fn n_stations(&self) -> usize {
        self.stations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn count_class(&self, class: PairClass) -> usize {
        self.pairs.iter().filter(|p| p.class() == class).count()
    }

    pub fn count_provenance(&self, provenance: Provenance) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.provenance() == provenance)
            .count()
    }
}

impl FromIterator<StationPair> for GroundTruth {
    fn from_iter<T: IntoIterator<Item = StationPair>>(iter: T) -> GroundTruth {
        let mut gt = GroundTruth::new();
        for pair in iter {
            gt.insert_pair(pair);
        }
        gt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident(label: &str, lat: f64, lon: f64) -> StationIdentifier {
        StationIdentifier::new(label, lat, lon).unwrap()
    }

    #[test]
    fn identifier_validation() {
        assert_eq!(
            StationIdentifier::new("  ", 0.0, 0.0),
            Err(ModelError::EmptyLabel)
        );
        assert_eq!(
            StationIdentifier::new("X", 90.5, 0.0),
            Err(ModelError::InvalidLatitude(90.5))
        );
        assert_eq!(
            StationIdentifier::new("X", 0.0, -180.1),
            Err(ModelError::InvalidLongitude(-180.1))
        );
        assert!(StationIdentifier::new("X", -90.0, 180.0).is_ok());
    }

    #[test]
    fn canonical_order_sorts_lexicographically() {
        let b = ident("B", 1.0, 1.0);
        let a = ident("A", 0.0, 0.0);
        let pair = StationPair::new(b, a.clone(), PairClass::Similar, Provenance::Original)
            .unwrap();
        assert_eq!(pair.a(), &a);
        assert_eq!(pair.b().label(), "B");
    }

    #[test]
    fn canonical_order_is_idempotent() {
        let pair = StationPair::new(
            ident("A", 0.0, 0.0),
            ident("A'", 1.0, 1.0),
            PairClass::Similar,
            Provenance::Original,
        )
        .unwrap();
        let once = canonical_order(pair.clone());
        let twice = canonical_order(once.clone());
        assert_eq!(once, twice);
        assert_eq!(once, pair);
    }

    #[test]
    fn equal_labels_tie_break_on_coordinates() {
        let hi = ident("Same", 2.0, 0.0);
        let lo = ident("Same", 1.0, 5.0);
        let pair =
            StationPair::new(hi, lo.clone(), PairClass::NotSimilar, Provenance::Original).unwrap();
        assert_eq!(pair.a(), &lo);
    }

    #[test]
    fn self_pair_rejected() {
        let s = ident("X", 1.0, 2.0);
        assert_eq!(
            StationPair::new(s.clone(), s, PairClass::Similar, Provenance::Original),
            Err(ModelError::SelfPair)
        );
    }

    #[test]
    fn ground_truth_dedups_unordered() {
        let a = ident("A", 0.0, 0.0);
        let b = ident("B", 1.0, 1.0);
        let mut gt = GroundTruth::new();
        assert!(gt.insert_pair(
            StationPair::new(a.clone(), b.clone(), PairClass::Similar, Provenance::Original)
                .unwrap()
        ));
        assert!(!gt.insert_pair(
            StationPair::new(b, a, PairClass::Similar, Provenance::Original).unwrap()
        ));
        assert_eq!(gt.len(), 1);
        assert_eq!(gt.n_stations(), 2);
    }
}
