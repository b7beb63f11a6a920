//! Maximal chain descent orders of finite bounded posets with EL- and
//! CL-labelings: construction, polygon completeness and inversion
//! criteria, shelling checks, and the classical families (Boolean
//! lattices, weak order, partition lattices, distributive lattices,
//! Young's lattice intervals, decreasing trees).

pub mod cli;
pub mod descent_order;
pub mod error;
pub mod families;
pub mod io;
pub mod labeling;
pub mod poset;
pub mod shelling;

pub use descent_order::{build_mcd, McdOrder};
pub use error::{Error, Result};
pub use io::LabeledPoset;
pub use labeling::{Label, LabelPoset, Labeling, LabelingKind};
pub use poset::{Chain, Poset};
