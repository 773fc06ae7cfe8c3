//! Bundled example structures. Tables are written 1-based exactly as
//! printed in the source material and shifted at construction.
//!
//! Note on `a_ex` and `a_cut`: both published grade assignments break the
//! admissibility constraint μ+ν ≤ 1 at one element (element 1 sums to 13/10
//! in `a_ex`, element 2 to 11/10 in `a_cut`). They are reproduced verbatim
//! through the lenient constructor so the published claims about them can
//! be checked as stated; see the README errata section.

use crate::carrier::{derive_power_gamma, validate_groupoid, GammaGroupoid};
use crate::grade::Grade;
use crate::ifs::Ifs;

const F1_TABLE: [[usize; 9]; 9] = [
    [1, 4, 7, 3, 6, 8, 2, 9, 5],
    [9, 2, 5, 7, 1, 4, 8, 6, 3],
    [6, 8, 3, 5, 9, 2, 4, 1, 7],
    [5, 9, 2, 4, 7, 1, 6, 3, 8],
    [3, 6, 8, 2, 5, 9, 1, 7, 4],
    [7, 1, 4, 8, 3, 6, 9, 5, 2],
    [8, 3, 6, 9, 2, 5, 7, 4, 1],
    [2, 5, 9, 1, 4, 7, 3, 8, 6],
    [4, 7, 1, 6, 8, 3, 5, 2, 9],
];

const F2_TABLE: [[usize; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 2, 2, 2, 2],
    [1, 2, 4, 5, 3],
    [1, 2, 3, 4, 5],
    [1, 2, 5, 3, 4],
];

const F3_TABLE: [[usize; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 5, 5, 3, 5],
    [1, 5, 5, 2, 5],
    [1, 2, 3, 4, 5],
    [1, 5, 5, 5, 5],
];

fn from_one_based<const N: usize>(table: &[[usize; N]; N]) -> GammaGroupoid {
    let rows: Vec<Vec<usize>> = table
        .iter()
        .map(|row| row.iter().map(|&e| e - 1).collect())
        .collect();
    validate_groupoid(N, 1, &[rows]).expect("bundled table is well-formed")
}

/// The 9-element AG-band.
pub fn f1() -> GammaGroupoid {
    from_one_based(&F1_TABLE)
}

/// The Γ = {α, β} structure derived from `f1` via powers. Because `f1` is a
/// band, both derived tables coincide with the base table.
pub fn f1_gamma() -> GammaGroupoid {
    derive_power_gamma(&f1()).expect("f1 is a single-operation table")
}

/// The 5-element intra-regular groupoid with Γ = {α}, xαy = xy.
pub fn f2() -> GammaGroupoid {
    from_one_based(&F2_TABLE)
}

/// The 5-element non-intra-regular groupoid with Γ = {1}, x1y = xy.
pub fn f3() -> GammaGroupoid {
    from_one_based(&F3_TABLE)
}

fn grades(spec: &[(u32, u32)]) -> Vec<Grade> {
    spec.iter()
        .map(|&(p, q)| Grade::new(p, q).expect("bundled grade in range"))
        .collect()
}

/// μ = (1,0,0,0,0), ν = (0.3,0.4,0.2,0.2,0.2) on the `f2` carrier.
/// Violates μ+ν ≤ 1 at element 1.
pub fn a_ex() -> Ifs {
    Ifs::new_lenient(
        grades(&[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
        grades(&[(3, 10), (2, 5), (1, 5), (1, 5), (1, 5)]),
    )
}

/// μ = (0.4,0.8,0,0,0), ν = (0.4,0.3,0.9,0.9,1) on the `f2` carrier.
/// Violates μ+ν ≤ 1 at element 2.
pub fn a_cut() -> Ifs {
    Ifs::new_lenient(
        grades(&[(2, 5), (4, 5), (0, 1), (0, 1), (0, 1)]),
        grades(&[(2, 5), (3, 10), (9, 10), (9, 10), (1, 1)]),
    )
}

/// μ = (0.3,0.3,0.3,0.1,0.4), ν = (0.2,0.3,0.4,0.5,0.2) on the `f3` carrier.
pub fn a_fgh() -> Ifs {
    Ifs::new(
        grades(&[(3, 10), (3, 10), (3, 10), (1, 10), (2, 5)]),
        grades(&[(1, 5), (3, 10), (2, 5), (1, 2), (1, 5)]),
    )
    .expect("a_fgh satisfies the sum constraint")
}

/// μ = (0.5,0.5,0.5,0.4,0.6), ν = (0.3,0.4,0.5,0.6,0.3) on the `f3` carrier.
pub fn b_fgh() -> Ifs {
    Ifs::new(
        grades(&[(1, 2), (1, 2), (1, 2), (2, 5), (3, 5)]),
        grades(&[(3, 10), (2, 5), (1, 2), (3, 5), (3, 10)]),
    )
    .expect("b_fgh satisfies the sum constraint")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(f1().carrier_size(), 9);
        assert_eq!(f1().gamma_count(), 1);
        assert_eq!(f1_gamma().gamma_count(), 2);
        assert_eq!(f2().carrier_size(), 5);
        assert_eq!(f3().carrier_size(), 5);
    }

    #[test]
    fn published_grade_data_validity() {
        assert!(!a_ex().is_valid());
        assert!(!a_cut().is_valid());
        assert!(a_fgh().is_valid());
        assert!(b_fgh().is_valid());
    }
}
