//! Inputs shared by the benchmarks.

use apa_core::fixtures::normal_system;
use apa_core::{HyperplaneArrangement, NormalSystem, OrderedField, Rational};

/// `n` lines in the plane with normals on the moment curve and distinct
/// offsets; generic for the sizes benchmarked here.
pub fn moment_lines(n: usize) -> HyperplaneArrangement<Rational> {
    let r = |x: i64| Rational::from_i64(x);
    let coeffs = (1..=n as i64).map(|t| vec![r(1), r(t)]).collect();
    let constants = (1..=n as i64).map(|t| r(t * t * t + 3 * t)).collect();
    HyperplaneArrangement::new(coeffs, constants).expect("moment lines are in general position")
}

/// The two tabulated six-vector systems in `F^3`.
pub fn fixture_pair() -> (NormalSystem<Rational>, NormalSystem<Rational>) {
    (
        normal_system("U1").expect("U1 fixture"),
        normal_system("U2").expect("U2 fixture"),
    )
}
