use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6;
use crate::spectra::{eigenvalues, TAU_EIG};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    SecondEigTooLarge,
    TwoEigsBelowMinusOne,
    NotForbidden,
}

/// Interlacing-based exclusion of `g` as an induced subgraph of a graph whose
/// second eigenvalue is at most 1 and which has at most one eigenvalue below
/// -1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForbiddenVerdict {
    pub case_g6: String,
    pub lambda2: f64,
    pub eigs_below_minus1: usize,
    pub verdict: Verdict,
}

pub fn classify_forbidden(g: &Graph) -> ForbiddenVerdict {
    let spectrum = eigenvalues(g);
    let lambda2 = spectrum.values.get(1).copied().unwrap_or(f64::NEG_INFINITY);
    let below = spectrum
        .values
        .iter()
        .filter(|&&x| x < -1.0 - TAU_EIG)
        .count();
    let verdict = if lambda2 > 1.0 + TAU_EIG {
        Verdict::SecondEigTooLarge
    } else if below >= 2 {
        Verdict::TwoEigsBelowMinusOne
    } else {
        Verdict::NotForbidden
    };
    ForbiddenVerdict {
        case_g6: graph6::encode(g),
        lambda2,
        eigs_below_minus1: below,
        verdict,
    }
}
