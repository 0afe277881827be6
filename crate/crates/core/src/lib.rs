pub mod amalgam;
pub mod checks;
pub mod daha;
pub mod error;
pub mod eval;
pub mod expr;
pub mod ideal;
pub mod ore;
pub mod par;
pub mod presets;
pub mod random;
pub mod ring;
pub mod scalar;
pub(crate) mod text;
pub mod word;

pub use error::{Error, Result};
