pub mod canon;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectra;

pub use canon::{are_isomorphic, canonical_form, canonical_label, CanonicalLabel};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph, MAX_VERTICES};
