//! Finite racks and quandles.
//!
//! - [`rack`]: validated operation tables, translations, homomorphisms.
//! - [`families`]: trivial, permutation, dihedral, core, Alexander, `(s,t)`,
//!   parity-shift and partition racks.
//! - [`lattice`]: atoms, orbits, generated subracks and the full subrack
//!   lattice with atomicity and distributivity checks.
//! - [`quandle`]: the corresponding quandle on atoms and the `ι`-twisted quandle.
//! - [`st`]: closed forms for `(s,t)`-racks over `Z_n`.
//! - [`knot`]: oriented knot diagrams and quandle coloring counts.
//! - [`source`]: JSON rack inputs.

pub mod error;
pub mod families;
pub mod knot;
pub mod lattice;
pub mod quandle;
pub mod rack;
pub mod set;
pub mod source;
pub mod st;

pub use error::{Error, Result};
pub use knot::{KnotDiagram, Verdict};
pub use lattice::{Subrack, SubrackLattice, DEFAULT_CAP};
pub use quandle::{CorrespondingQuandle, IotaMap};
pub use rack::{MagmaTable, RackTable, Translation};
pub use set::ElementSet;
pub use st::STParams;
