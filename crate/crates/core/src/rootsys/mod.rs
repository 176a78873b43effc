//! Root systems of types A, B, C, F4, G2 and their products.

mod dynkin;
mod root;
mod system;
mod weight;

pub use dynkin::{DynkinType, SimpleFactor};
pub use root::Root;
pub use system::RootSystem;
pub use weight::Weight;
