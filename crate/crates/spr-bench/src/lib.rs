//! Shared fixtures for the benchmark suite: the seven point running example
//! in poset and extended quiver form.

use spr_core::{ExtendedQuiver, Poset, QuiverA};

/// Seven points, three peaks, two covering branches.
pub fn running_poset() -> Poset {
    Poset::from_covers_numeric(7, &[(3, 1), (1, 2), (3, 4), (4, 5), (6, 4), (6, 7)])
}

/// The orientation of the seven vertex line inducing the running poset,
/// extended by its two alien arrows.
pub fn running_quiver() -> ExtendedQuiver {
    let quiver =
        QuiverA::from_arrows(7, &[(1, 2), (3, 2), (3, 4), (4, 5), (6, 5), (6, 7)]).unwrap();
    ExtendedQuiver {
        quiver,
        aliens: vec![(3, 1), (6, 4)],
    }
}
