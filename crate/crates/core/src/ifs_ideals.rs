//! The eight intuitionistic fuzzy Γ-ideal notions, decided pointwise with
//! grade-level counterwitnesses, plus the sup-min composition
//! characterizations of the subgroupoid/left/right notions.

use std::fmt;

use crate::carrier::{Element, GammaGroupoid, GammaIndex};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ifs::{compose, Ifs};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IfsKind {
    Subgroupoid,
    Left,
    Right,
    TwoSided,
    GeneralizedBi,
    Bi,
    Interior,
    Quasi,
}

impl IfsKind {
    pub const ALL: [IfsKind; 8] = [
        IfsKind::Subgroupoid,
        IfsKind::Left,
        IfsKind::Right,
        IfsKind::TwoSided,
        IfsKind::GeneralizedBi,
        IfsKind::Bi,
        IfsKind::Interior,
        IfsKind::Quasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IfsKind::Subgroupoid => "subgroupoid",
            IfsKind::Left => "left-ideal",
            IfsKind::Right => "right-ideal",
            IfsKind::TwoSided => "two-sided",
            IfsKind::GeneralizedBi => "generalized-bi",
            IfsKind::Bi => "bi",
            IfsKind::Interior => "interior",
            IfsKind::Quasi => "quasi",
        }
    }

    pub fn from_name(name: &str) -> Option<IfsKind> {
        IfsKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for IfsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which grade map an inequality failed on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GradeSide {
    Mu,
    Nu,
}

impl GradeSide {
    pub fn name(self) -> &'static str {
        match self {
            GradeSide::Mu => "mu",
            GradeSide::Nu => "nu",
        }
    }
}

/// A strict violation of the defining inequality, embedding both compared
/// grade values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IfsWitness {
    /// One of the pointwise definitions failed at a concrete tuple:
    /// `actual` is the grade at the product, `bound` the required bound.
    Pointwise {
        elements: Vec<Element>,
        gammas: Vec<GammaIndex>,
        side: GradeSide,
        actual: Grade,
        bound: Grade,
    },
    /// A composition containment (`C ⊆ A` / `C ⊇ A`) failed at an element.
    Containment {
        element: Element,
        side: GradeSide,
        composed: Grade,
        bound: Grade,
    },
    /// The quasi containment `(A∘δ) ∩ (δ∘A) ⊆ A` failed at an element;
    /// both composition values at that element are embedded.
    Quasi {
        element: Element,
        side: GradeSide,
        a_delta: Grade,
        delta_a: Grade,
        bound: Grade,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IfsVerdict {
    pub kind: IfsKind,
    pub holds: bool,
    pub witness: Option<IfsWitness>,
}

fn require_size(g: &GammaGroupoid, a: &Ifs) -> Result<()> {
    if a.carrier_size() != g.carrier_size() {
        return Err(Error::SizeMismatch {
            expected: g.carrier_size(),
            got: a.carrier_size(),
        });
    }
    Ok(())
}

/// Bounds for the single-product definitions: μ(xγy) ≥ mu_bound and
/// ν(xγy) ≤ nu_bound.
fn pair_bounds(kind: IfsKind, a: &Ifs, x: Element, y: Element) -> (Grade, Grade) {
    match kind {
        IfsKind::Subgroupoid => (a.mu(x).min(a.mu(y)), a.nu(x).max(a.nu(y))),
        IfsKind::Left => (a.mu(y), a.nu(y)),
        IfsKind::Right => (a.mu(x), a.nu(x)),
        _ => unreachable!("pair_bounds only serves the single-product kinds"),
    }
}

fn scan_pairs(g: &GammaGroupoid, a: &Ifs, kind: IfsKind) -> Option<IfsWitness> {
    for x in g.elements() {
        for y in g.elements() {
            for op in g.gammas() {
                let p = Element(g.prod(op.index(), x.index(), y.index()));
                let (mu_bound, nu_bound) = pair_bounds(kind, a, x, y);
                if a.mu(p) < mu_bound {
                    return Some(IfsWitness::Pointwise {
                        elements: vec![x, y],
                        gammas: vec![op],
                        side: GradeSide::Mu,
                        actual: a.mu(p),
                        bound: mu_bound,
                    });
                }
                if a.nu(p) > nu_bound {
                    return Some(IfsWitness::Pointwise {
                        elements: vec![x, y],
                        gammas: vec![op],
                        side: GradeSide::Nu,
                        actual: a.nu(p),
                        bound: nu_bound,
                    });
                }
            }
        }
    }
    None
}

/// Scan for the `(xβa)γy` definitions: bounds keyed on `(x, y)` for the
/// bi-family, on the inner `a` for interior.
fn scan_triples(g: &GammaGroupoid, f: &Ifs, interior: bool) -> Option<IfsWitness> {
    for x in g.elements() {
        for mid in g.elements() {
            for y in g.elements() {
                for op1 in g.gammas() {
                    let inner = g.prod(op1.index(), x.index(), mid.index());
                    for op2 in g.gammas() {
                        let p = Element(g.prod(op2.index(), inner, y.index()));
                        let (mu_bound, nu_bound) = if interior {
                            (f.mu(mid), f.nu(mid))
                        } else {
                            (f.mu(x).min(f.mu(y)), f.nu(x).max(f.nu(y)))
                        };
                        if f.mu(p) < mu_bound {
                            return Some(IfsWitness::Pointwise {
                                elements: vec![x, mid, y],
                                gammas: vec![op1, op2],
                                side: GradeSide::Mu,
                                actual: f.mu(p),
                                bound: mu_bound,
                            });
                        }
                        if f.nu(p) > nu_bound {
                            return Some(IfsWitness::Pointwise {
                                elements: vec![x, mid, y],
                                gammas: vec![op1, op2],
                                side: GradeSide::Nu,
                                actual: f.nu(p),
                                bound: nu_bound,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

fn quasi_witness(g: &GammaGroupoid, a: &Ifs) -> Result<Option<IfsWitness>> {
    let delta = Ifs::delta(g.carrier_size());
    let a_delta = compose(g, a, &delta)?;
    let delta_a = compose(g, &delta, a)?;
    for e in g.elements() {
        let mu_cap = a_delta.mu(e).min(delta_a.mu(e));
        if mu_cap > a.mu(e) {
            return Ok(Some(IfsWitness::Quasi {
                element: e,
                side: GradeSide::Mu,
                a_delta: a_delta.mu(e),
                delta_a: delta_a.mu(e),
                bound: a.mu(e),
            }));
        }
        let nu_cup = a_delta.nu(e).max(delta_a.nu(e));
        if nu_cup < a.nu(e) {
            return Ok(Some(IfsWitness::Quasi {
                element: e,
                side: GradeSide::Nu,
                a_delta: a_delta.nu(e),
                delta_a: delta_a.nu(e),
                bound: a.nu(e),
            }));
        }
    }
    Ok(None)
}

/// Decides one intuitionistic fuzzy Γ-ideal notion by exhaustive scan of
/// the defining inequalities (elements lexicographic, Γ inner, μ before ν).
pub fn is_if(g: &GammaGroupoid, a: &Ifs, kind: IfsKind) -> Result<IfsVerdict> {
    require_size(g, a)?;
    let witness = match kind {
        IfsKind::Subgroupoid | IfsKind::Left | IfsKind::Right => scan_pairs(g, a, kind),
        IfsKind::TwoSided => scan_pairs(g, a, IfsKind::Left).or_else(|| scan_pairs(g, a, IfsKind::Right)),
        IfsKind::GeneralizedBi => scan_triples(g, a, false),
        IfsKind::Bi => scan_pairs(g, a, IfsKind::Subgroupoid).or_else(|| scan_triples(g, a, false)),
        IfsKind::Interior => scan_triples(g, a, true),
        IfsKind::Quasi => quasi_witness(g, a)?,
    };
    Ok(IfsVerdict {
        kind,
        holds: witness.is_none(),
        witness,
    })
}

/// First element where `c ⊆ a` fails (μ_c ≤ μ_a, ν_c ≥ ν_a pointwise).
fn containment_failure(c: &Ifs, a: &Ifs) -> Option<IfsWitness> {
    for e in (0..a.carrier_size()).map(Element) {
        if c.mu(e) > a.mu(e) {
            return Some(IfsWitness::Containment {
                element: e,
                side: GradeSide::Mu,
                composed: c.mu(e),
                bound: a.mu(e),
            });
        }
        if c.nu(e) < a.nu(e) {
            return Some(IfsWitness::Containment {
                element: e,
                side: GradeSide::Nu,
                composed: c.nu(e),
                bound: a.nu(e),
            });
        }
    }
    None
}

/// The composition-containment route to subgroupoid/left/right:
/// `A∘A ⊆ A`, `δ∘A ⊆ A`, `A∘δ ⊆ A` respectively. Agrees with [`is_if`]
/// on every groupoid; the two are computed independently so that either
/// can audit the other.
pub fn characterize_by_composition(g: &GammaGroupoid, a: &Ifs, kind: IfsKind) -> Result<IfsVerdict> {
    require_size(g, a)?;
    let delta = Ifs::delta(g.carrier_size());
    let composed = match kind {
        IfsKind::Subgroupoid => compose(g, a, a)?,
        IfsKind::Left => compose(g, &delta, a)?,
        IfsKind::Right => compose(g, a, &delta)?,
        other => {
            return Err(Error::UnsupportedKind { kind: other.name() });
        }
    };
    let witness = containment_failure(&composed, a);
    Ok(IfsVerdict {
        kind,
        holds: witness.is_none(),
        witness,
    })
}
