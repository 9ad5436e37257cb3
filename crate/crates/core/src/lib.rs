//! Polycyclic codes over Galois rings.

pub mod codes;
pub mod error;
pub mod factor;
pub mod isometry;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod serial;
pub mod transform;

pub use error::{Error, Result};
pub use linalg::{HowellBasis, RingMatrix};
pub use poly::Poly;
pub use quotient::{AmbientSpace, QuotElem};
pub use ring::{Embedding, RingElem, RingSpec};
pub use codes::{Ambient, Code, DualForm, PolyAmbient};
pub use transform::{MsTransform, Spectrum};
