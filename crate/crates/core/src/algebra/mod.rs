pub mod field;
pub mod matrix;
pub mod ring;
pub mod series;
pub mod smith;

pub use field::{is_prime, FieldSpec, Fq};
pub use matrix::{rank_fq, MatrixFq};
pub use ring::{BaseRing, PointRing, PolyRing, SeriesRing};
pub use series::{frobenius_twist, series_mul, Poly, TruncSeries};
pub use smith::{rank_z, smith_invariants, MatrixZ};
