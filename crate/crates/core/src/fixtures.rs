//! The worked examples, as ready-made cases.

use crate::analysis::CaseSpec;

/// `S = <6,11,15,31>`, `I = (t^6, t^11, t^31)`, `J = (t^6)`.
pub fn example_one() -> CaseSpec {
    CaseSpec::new(&[6, 11, 15, 31], &["t^6", "t^11", "t^31"]).with_reductions(&["t^6"])
}

/// `S = <8,15,28,50,57>`, `I = (t^8, t^15, t^50, t^57)` with the two
/// reductions `t^8` and `t^8 + t^57`.
pub fn example_two() -> CaseSpec {
    CaseSpec::new(&[8, 15, 28, 50, 57], &["t^8", "t^15", "t^50", "t^57"])
        .with_reductions(&["t^8", "t^8 + t^57"])
}

/// `S = <4,5,11>`, `I = m`, `J = (t^4)`.
pub fn closing_example() -> CaseSpec {
    CaseSpec::new(&[4, 5, 11], &["t^4", "t^5", "t^11"]).with_reductions(&["t^4"])
}

/// All fixtures with a short name.
pub fn all() -> [(&'static str, CaseSpec); 3] {
    [
        ("example-1", example_one()),
        ("example-2", example_two()),
        ("closing", closing_example()),
    ]
}
