//! Resource caps and run configuration shared by the heavier operations.

use serde::{Deserialize, Serialize};

/// Caps controlling which computational paths are allowed.
///
/// Groups beyond `enum_cap` elements are handled through base-and-strong-
/// generating-set paths only; the subgroup lattice is built only for groups
/// of order at most `lattice_cap`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum group order for full element enumeration.
    pub enum_cap: u128,
    /// Maximum group order for subgroup-lattice construction.
    pub lattice_cap: u128,
    /// Maximum degree (edge count) of any constructed cover or quotient.
    pub degree_cap: usize,
    /// Node budget for exhaustive searches.
    pub search_budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_cap: 1_000_000,
            lattice_cap: 2000,
            degree_cap: 100_000,
            search_budget: 20_000_000_000,
        }
    }
}

/// Full run configuration for the command-line surface.
///
/// The seed determines every randomized-internal choice (there are few: the
/// character-table eigenspace splitting falls back to seeded combinations).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub caps: Caps,
    pub workers: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            caps: Caps::default(),
            workers: 0, // 0 = rayon default
            seed: 1,
        }
    }
}
