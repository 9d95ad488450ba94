//! Garside normal forms and conjugacy invariants for the braid groups `B_n`.
//!
//! Two presentations are supported, each with its own family of canonical
//! factors:
//!
//! * the Artin presentation (`σ_i`), whose factors are permutation braids
//!   ([`PermFactor`]) and whose fundamental braid is the half twist `Δ`;
//! * the band-generator presentation (`a_{ts}`), whose factors are
//!   non-crossing partitions ([`BandFactor`]) and whose fundamental braid is
//!   `δ = a_{n(n-1)} ⋯ a_{21}`.
//!
//! Everything above the factor level is generic over [`CanonicalFactor`]:
//! left normal forms, cycling and decycling, the bounded inf/sup loops,
//! super summit sets and the class invariants built from them.

pub mod band;
pub mod conjugacy;
pub mod error;
pub mod factor;
pub mod families;
pub mod normal_form;
pub mod perm;
pub mod words;

pub use band::BandFactor;
pub use conjugacy::{
    are_conjugate, class_invariants, conjugating_element, cycle, cycling_profile, decycle, decycling_profile,
    geodesic_length, geodesic_length_class, maximize_inf, minimize_sup, sss_enumerate, sss_orbits, sss_representative,
    ClassInvariants, SuperSummitSet, DEFAULT_SSS_CAP,
};
pub use error::{BraidError, Result};
pub use factor::{is_left_weighted, left_meet_head, CanonicalFactor};
pub use normal_form::{equal, positive_part_check, NormalForm, NormalFormJson, Piece};
pub use perm::PermFactor;
pub use words::{BraidWord, Generator, Letter, Presentation};
