//! Vertex isoperimetric profiles, Cheeger upper bounds and Følner ratios.

mod folner;
mod profile;

pub use folner::{cheeger_bounds, folner_witness, r_boundary_ratio, CheegerBounds, FolnerSearch, Shape};
pub use profile::{iso_profile, iso_profile_with, IsoProfile, ProfileEntry, ProfileOptions, Pruning};
