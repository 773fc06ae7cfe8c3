//! Intuitionistic fuzzy sets over a finite carrier: paired membership and
//! nonmembership grade maps with the sup-min Γ-composition.
//!
//! The paper overloads γ for nonmembership and for Γ-indexes; here
//! nonmembership is `nu` throughout.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::carrier::{Element, GammaGroupoid};
use crate::error::{Error, Result};
use crate::grade::Grade;

/// An IFS `(μ, ν)` over `[0, n)`.
///
/// The admissible-set constraint `μ(x) + ν(x) ≤ 1` is enforced by
/// [`Ifs::new`]; [`Ifs::new_lenient`] skips it so that published example
/// data violating the constraint can still be analyzed (see the bundled
/// fixtures). [`Ifs::is_valid`] reports the constraint status.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ifs {
    mu: Vec<Grade>,
    nu: Vec<Grade>,
}

impl Ifs {
    /// Validated constructor: rejects length mismatch and `μ + ν > 1`.
    pub fn new(mu: Vec<Grade>, nu: Vec<Grade>) -> Result<Ifs> {
        if mu.len() != nu.len() {
            return Err(Error::LengthMismatch {
                expected: mu.len(),
                got: nu.len(),
            });
        }
        for (i, (m, v)) in mu.iter().zip(&nu).enumerate() {
            if !m.sum_at_most_one(v) {
                return Err(Error::SumExceedsOne {
                    element: i,
                    mu: *m,
                    nu: *v,
                });
            }
        }
        Ok(Ifs { mu, nu })
    }

    /// Constructor without the sum constraint. Lengths must still agree.
    pub fn new_lenient(mu: Vec<Grade>, nu: Vec<Grade>) -> Ifs {
        assert_eq!(mu.len(), nu.len(), "grade lists must have equal length");
        Ifs { mu, nu }
    }

    /// δ = (S_δ, Θ_δ): μ ≡ 1, ν ≡ 0.
    pub fn delta(n: usize) -> Ifs {
        Ifs {
            mu: vec![Grade::one(); n],
            nu: vec![Grade::zero(); n],
        }
    }

    pub fn constant(n: usize, mu: Grade, nu: Grade) -> Result<Ifs> {
        Ifs::new(vec![mu; n], vec![nu; n])
    }

    pub fn carrier_size(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self, x: Element) -> Grade {
        self.mu[x.index()]
    }

    pub fn nu(&self, x: Element) -> Grade {
        self.nu[x.index()]
    }

    pub fn mu_grades(&self) -> &[Grade] {
        &self.mu
    }

    pub fn nu_grades(&self) -> &[Grade] {
        &self.nu
    }

    pub fn is_valid(&self) -> bool {
        self.mu.iter().zip(&self.nu).all(|(m, v)| m.sum_at_most_one(v))
    }

    pub fn is_delta(&self) -> bool {
        self.mu.iter().all(Grade::is_one) && self.nu.iter().all(Grade::is_zero)
    }
}

fn require_same_size(a: &Ifs, b: &Ifs) -> Result<()> {
    if a.carrier_size() != b.carrier_size() {
        return Err(Error::SizeMismatch {
            expected: a.carrier_size(),
            got: b.carrier_size(),
        });
    }
    Ok(())
}

fn require_groupoid_size(g: &GammaGroupoid, a: &Ifs) -> Result<()> {
    if a.carrier_size() != g.carrier_size() {
        return Err(Error::SizeMismatch {
            expected: g.carrier_size(),
            got: a.carrier_size(),
        });
    }
    Ok(())
}

/// Sup-min composition `A ∘_Γ B`.
///
/// For each target `a`: μ is the max of `μ_A(b) ∧ μ_B(c)` and ν the min of
/// `ν_A(b) ∨ ν_B(c)` over all factorizations `a = bβc`; elements with no
/// factorization get `(0, 1)`.
pub fn compose(g: &GammaGroupoid, a: &Ifs, b: &Ifs) -> Result<Ifs> {
    require_groupoid_size(g, a)?;
    require_groupoid_size(g, b)?;
    let n = g.carrier_size();
    let mut mu = vec![Grade::zero(); n];
    let mut nu = vec![Grade::one(); n];
    for x in 0..n {
        for y in 0..n {
            for op in 0..g.gamma_count() {
                let target = g.prod(op, x, y);
                let m = a.mu[x].min(b.mu[y]);
                let v = a.nu[x].max(b.nu[y]);
                if m > mu[target] {
                    mu[target] = m;
                }
                if v < nu[target] {
                    nu[target] = v;
                }
            }
        }
    }
    let out = Ifs { mu, nu };
    debug_assert!(!(a.is_valid() && b.is_valid()) || out.is_valid());
    Ok(out)
}

/// Pointwise `(min μ, max ν)`.
pub fn intersect(a: &Ifs, b: &Ifs) -> Result<Ifs> {
    require_same_size(a, b)?;
    let mu = a.mu.iter().zip(&b.mu).map(|(x, y)| *x.min(y)).collect();
    let nu = a.nu.iter().zip(&b.nu).map(|(x, y)| *x.max(y)).collect();
    let out = Ifs { mu, nu };
    debug_assert!(!(a.is_valid() && b.is_valid()) || out.is_valid());
    Ok(out)
}

/// Pointwise `(max μ, min ν)`.
pub fn union(a: &Ifs, b: &Ifs) -> Result<Ifs> {
    require_same_size(a, b)?;
    let mu = a.mu.iter().zip(&b.mu).map(|(x, y)| *x.max(y)).collect();
    let nu = a.nu.iter().zip(&b.nu).map(|(x, y)| *x.min(y)).collect();
    let out = Ifs { mu, nu };
    debug_assert!(!(a.is_valid() && b.is_valid()) || out.is_valid());
    Ok(out)
}

/// `A ⊆ B`: μ_A ≤ μ_B and ν_A ≥ ν_B pointwise.
pub fn contains(a: &Ifs, b: &Ifs) -> Result<bool> {
    require_same_size(a, b)?;
    Ok(a
        .mu
        .iter()
        .zip(&b.mu)
        .all(|(x, y)| x <= y)
        && a.nu.iter().zip(&b.nu).all(|(x, y)| x >= y))
}

/// Exact pointwise equality of both components.
pub fn equals(a: &Ifs, b: &Ifs) -> Result<bool> {
    require_same_size(a, b)?;
    Ok(a == b)
}

/// `A ∘_Γ A = A`.
pub fn is_idempotent(g: &GammaGroupoid, a: &Ifs) -> Result<bool> {
    equals(&compose(g, a, a)?, a)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a per-slot seed for reproducible multi-IFS sampling.
pub fn derive_seed(seed: u64, sample: u64, slot: u64) -> u64 {
    splitmix64(seed ^ splitmix64(sample.wrapping_mul(2).wrapping_add(slot)))
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    // Rejection sampling: exact uniformity, deterministic in the stream.
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % bound;
        }
    }
}

/// Deterministic sampler over the grade grid `{(p/D, q/D) : p + q ≤ D}`,
/// uniform per element.
pub fn random_ifs(n: usize, denominator: u32, seed: u64) -> Ifs {
    assert!(denominator >= 1, "denominator must be positive");
    let d = denominator as u64;
    let total = (d + 1) * (d + 2) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mu = Vec::with_capacity(n);
    let mut nu = Vec::with_capacity(n);
    for _ in 0..n {
        let mut idx = uniform_below(&mut rng, total);
        let mut p = 0u64;
        loop {
            let row = d - p + 1;
            if idx < row {
                break;
            }
            idx -= row;
            p += 1;
        }
        let q = idx;
        mu.push(Grade::new(p as u32, denominator).expect("p <= D"));
        nu.push(Grade::new(q as u32, denominator).expect("q <= D"));
    }
    Ifs { mu, nu }
}
