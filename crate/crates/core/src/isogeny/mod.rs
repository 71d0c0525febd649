//! Isogeny rings A_{r_1,...,r_q}, the maps between them, and closed-fiber checks.

pub mod checks;
pub mod fpoly;
pub mod maps;
pub mod ring;

pub use checks::{
    relations_report, relations_sequence_check, socle_check, socle_report, RelationsReport,
    SocleReport,
};
pub use fpoly::{f_poly, sigma, FIsogPoly};
pub use maps::{
    hom_basis_images, images_to_matrix, s_map, u_basis_images, u_map, VarImage,
};
pub use ring::{ChainShape, IsogRing, IsogRingElement, MAX_LEN};

#[cfg(test)]
mod tests;
