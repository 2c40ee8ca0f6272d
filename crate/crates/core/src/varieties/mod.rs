//! Polynomial charts of projective submanifolds `S ⊂ PW`, their affine
//! tangent frames on the cone `S⁺`, and exact ω-isotropy certificates.

mod chart;
mod isotropy;
pub mod spec;

pub use chart::VarietyChart;
pub use isotropy::{certify_isotropic, IsotropyCertificate, IsotropyStatus, IsotropyWitness};
pub use spec::{builtin, builtin_charts, builtin_veronese, resolve, Fixture, OmegaEntry, OmegaSpec, VarietySpec};
