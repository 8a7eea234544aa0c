//! Chamber systems, buildings with a Weyl distance, and their realizations.

mod apartment;
mod building;
mod realize;
mod system;
mod verify;

pub use apartment::{find_apartment, is_apartment};
pub use building::Building;
pub use realize::{realization_homology, realize};
pub use system::ChamberSystem;
pub use verify::{verify_building, verify_chamber_system, VerifyOptions};
