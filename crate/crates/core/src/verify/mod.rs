//! Brute-force checks of the claimed parameters. Everything here re-reads
//! codes from their raw words and shares no computation with the builders.

mod clique;
mod coloring;
mod distance;
mod oracle;
mod perfect;
mod scan;
mod transitivity;

/// Generator behind every sampled check.
pub use rand_chacha::ChaCha8Rng as SampleRng;

pub use clique::{max_anticode_size, CLIQUE_MAX_N};
pub use coloring::{check_perfect_coloring, ColoringReport};
pub use distance::{max_distance, min_distance, sampled_min_distance, sampled_min_distance_in,
    SampledDistance};
pub use oracle::{check_cf_distance, pair_q_by_ball, CF_MAX_M};
pub use perfect::{
    ambient_size, check_anticode_bound, check_matching, check_perfect_d3, is_diameter_perfect,
    is_perfect_d3, MatchingReport, TABLE_MAX_N,
};
pub use scan::{
    nonequivalence_certificate, shorten_exists, shorten_scan, shortening_profile, Equivalence,
    Fixing, NonequivalenceCertificate, ShortenScan,
};
pub use transitivity::{check_transitivity, TransitivityReport, TRANSITIVITY_MAX_N};
