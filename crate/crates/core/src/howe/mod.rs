//! The unipotent-level Howe correspondence for unitary dual pairs.

pub mod config;
pub mod cuspidal;
pub mod omega;
pub mod order;
pub mod pieri;

pub use config::HoweConfig;
pub use cuspidal::{
    theta_cuspidal, witt_index_of_cuspidal, CuspidalThetaRule, Parity, ParityThetaRule, SeriesLabel, TowerContext,
};
pub use omega::{extremal_images, omega_unipotent, theta_images, MultiplicityTable, WeilFormula};
pub use order::{BipartitionDominance, Extreme, ImageOrder};
