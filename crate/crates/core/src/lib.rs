pub mod bounds;
pub mod certify;
pub mod cli;
pub mod compare;
pub mod error;
pub mod est;
pub mod hypergeom;
pub mod identities;
pub mod ptrig;
pub mod quad;
pub mod special;
pub mod sum;

pub use error::{Error, Result};
