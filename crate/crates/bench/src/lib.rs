//! Fixtures shared by the benchmarks.

use g2check::counterexample::Enumerations;
use g2check::{Counterexample, Fe, Gf2m, Mat, Root};

/// Counterexample data at `(q, m)` with the subgroup enumerations done.
pub fn counterexample(q: u32, m: u32) -> (Counterexample, Enumerations) {
    let ce = Counterexample::new(q, m).expect("valid (q, m)");
    let en = ce.enumerations().expect("enumeration within bounds");
    (ce, en)
}

/// A dense-ish group element: a product of root elements over every root.
pub fn mixed_element(ce: &Counterexample) -> Mat {
    let f: &Gf2m = ce.field();
    g2check::roots::all_roots().iter().enumerate().fold(
        Mat::identity(),
        |acc, (k, &d): (usize, &Root)| {
            acc.mul(
                &ce.g2().kappa(d, Fe((k as u16 % (f.size() as u16 - 1)) + 1)),
                f,
            )
        },
    )
}
