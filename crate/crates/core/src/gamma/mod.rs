//! The ring Γ dual to the isogeny rings, its admissible basis and pairing.

pub mod checks;
pub mod pairing;
pub mod ring;
pub mod word;

pub use checks::{
    associativity_check, basis_report, convergence_check, duality_check, normal_form_check,
    span_check, AssociativityReport, BasisReport, DualityReport, NormalFormReport, Precision,
    SpanReport,
};
pub use pairing::{pair_split, PairingTable};
pub use ring::{GammaElement, GammaRing, RawGamma, RewriteStats};
pub use word::{admissible_basis, all_words, order_compare, Word};
