//! Crisp subsets of the carrier and the seven classical Γ-ideal notions,
//! plus level cuts bridging IFS to subsets.

use std::fmt;

use crate::carrier::{Element, GammaGroupoid, GammaIndex};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ifs::Ifs;

const BITS: usize = 64;

/// Bitset over the carrier `[0, n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CrispSubset {
    n: usize,
    blocks: Vec<u64>,
}

impl CrispSubset {
    pub fn empty(n: usize) -> CrispSubset {
        CrispSubset {
            n,
            blocks: vec![0; n.div_ceil(BITS)],
        }
    }

    pub fn full(n: usize) -> CrispSubset {
        let mut s = CrispSubset::empty(n);
        for x in 0..n {
            s.insert(Element(x));
        }
        s
    }

    pub fn from_members<I: IntoIterator<Item = Element>>(n: usize, members: I) -> CrispSubset {
        let mut s = CrispSubset::empty(n);
        for x in members {
            assert!(x.index() < n, "member out of range");
            s.insert(x);
        }
        s
    }

    /// Interprets the low `n` bits of `mask` as membership; used by the
    /// exhaustive subset scans.
    pub fn from_mask(n: usize, mask: u64) -> CrispSubset {
        assert!(n <= BITS);
        let mut s = CrispSubset::empty(n);
        s.blocks[0] = mask & mask_low(n);
        s
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: Element) {
        self.blocks[x.index() / BITS] |= 1 << (x.index() % BITS);
    }

    pub fn contains(&self, x: Element) -> bool {
        self.blocks[x.index() / BITS] >> (x.index() % BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &CrispSubset) -> CrispSubset {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a | b).collect();
        CrispSubset { n: self.n, blocks }
    }

    pub fn intersection(&self, other: &CrispSubset) -> CrispSubset {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & b).collect();
        CrispSubset { n: self.n, blocks }
    }

    pub fn members(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.n).map(Element).filter(|x| self.contains(*x))
    }
}

fn mask_low(n: usize) -> u64 {
    if n == BITS {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

impl fmt::Display for CrispSubset {
    /// `{1,2}` with 1-based members.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x.display_index())?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CrispKind {
    /// AΓA ⊆ A
    Subgroupoid,
    /// SΓA ⊆ A
    LeftIdeal,
    /// AΓS ⊆ A
    RightIdeal,
    /// left and right
    TwoSided,
    /// (AΓS)ΓA ⊆ A
    GeneralizedBi,
    /// subgroupoid and generalized bi
    Bi,
    /// (SΓA)ΓS ⊆ A
    Interior,
    /// SΓA ∩ AΓS ⊆ A
    Quasi,
}

impl CrispKind {
    pub const ALL: [CrispKind; 8] = [
        CrispKind::Subgroupoid,
        CrispKind::LeftIdeal,
        CrispKind::RightIdeal,
        CrispKind::TwoSided,
        CrispKind::GeneralizedBi,
        CrispKind::Bi,
        CrispKind::Interior,
        CrispKind::Quasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CrispKind::Subgroupoid => "subgroupoid",
            CrispKind::LeftIdeal => "left-ideal",
            CrispKind::RightIdeal => "right-ideal",
            CrispKind::TwoSided => "two-sided",
            CrispKind::GeneralizedBi => "generalized-bi",
            CrispKind::Bi => "bi",
            CrispKind::Interior => "interior",
            CrispKind::Quasi => "quasi",
        }
    }

    pub fn from_name(name: &str) -> Option<CrispKind> {
        CrispKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for CrispKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The factor chain that pushed a product outside the subset.
///
/// `elements`/`gammas` instantiate the defining containment's quantifiers in
/// scan order; `escapee` is the resulting product that is missing from `A`.
/// For [`CrispKind::Quasi`] the elements are the two factorizations
/// `(b₁, c₁)` from `SΓA` and `(b₂, c₂)` from `AΓS` with one Γ-index each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrispWitness {
    pub elements: Vec<Element>,
    pub gammas: Vec<GammaIndex>,
    pub escapee: Element,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrispVerdict {
    pub kind: CrispKind,
    pub holds: bool,
    /// The paper only defines the notions for non-empty subsets; the check
    /// treats ∅ as vacuously passing and reports emptiness here.
    pub nonempty: bool,
    pub witness: Option<CrispWitness>,
}

fn require_size(g: &GammaGroupoid, s: &CrispSubset) -> Result<()> {
    if s.carrier_size() != g.carrier_size() {
        return Err(Error::SizeMismatch {
            expected: g.carrier_size(),
            got: s.carrier_size(),
        });
    }
    Ok(())
}

/// `{ a γ b : a ∈ A, b ∈ B, γ ∈ Γ }`.
pub fn subset_product(g: &GammaGroupoid, a: &CrispSubset, b: &CrispSubset) -> Result<CrispSubset> {
    require_size(g, a)?;
    require_size(g, b)?;
    let mut out = CrispSubset::empty(g.carrier_size());
    for x in a.members() {
        for y in b.members() {
            for op in 0..g.gamma_count() {
                out.insert(Element(g.prod(op, x.index(), y.index())));
            }
        }
    }
    Ok(out)
}

/// Scans `left Γ right ⊆ a` directly, returning the smallest violating
/// instantiation (pair lexicographic, then Γ).
fn containment_witness(
    g: &GammaGroupoid,
    left: &CrispSubset,
    right: &CrispSubset,
    a: &CrispSubset,
) -> Option<(Element, GammaIndex, Element, Element)> {
    for x in left.members() {
        for y in right.members() {
            for op in 0..g.gamma_count() {
                let p = Element(g.prod(op, x.index(), y.index()));
                if !a.contains(p) {
                    return Some((x, GammaIndex(op), y, p));
                }
            }
        }
    }
    None
}

/// Two-level scan for `(left Γ mid) Γ right ⊆ a`.
fn nested_containment_witness(
    g: &GammaGroupoid,
    left: &CrispSubset,
    mid: &CrispSubset,
    right: &CrispSubset,
    a: &CrispSubset,
) -> Option<CrispWitness> {
    for x in left.members() {
        for s in mid.members() {
            for y in right.members() {
                for op1 in 0..g.gamma_count() {
                    let inner = g.prod(op1, x.index(), s.index());
                    for op2 in 0..g.gamma_count() {
                        let p = Element(g.prod(op2, inner, y.index()));
                        if !a.contains(p) {
                            return Some(CrispWitness {
                                elements: vec![x, s, y],
                                gammas: vec![GammaIndex(op1), GammaIndex(op2)],
                                escapee: p,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Decides one crisp ideal notion with a counterwitness on failure.
pub fn is_crisp(g: &GammaGroupoid, a: &CrispSubset, kind: CrispKind) -> Result<CrispVerdict> {
    require_size(g, a)?;
    let full = CrispSubset::full(g.carrier_size());
    let simple = |left: &CrispSubset, right: &CrispSubset| {
        containment_witness(g, left, right, a).map(|(x, op, y, p)| CrispWitness {
            elements: vec![x, y],
            gammas: vec![op],
            escapee: p,
        })
    };
    let witness = match kind {
        CrispKind::Subgroupoid => simple(a, a),
        CrispKind::LeftIdeal => simple(&full, a),
        CrispKind::RightIdeal => simple(a, &full),
        CrispKind::TwoSided => simple(&full, a).or_else(|| simple(a, &full)),
        CrispKind::GeneralizedBi => nested_containment_witness(g, a, &full, a, a),
        CrispKind::Bi => simple(a, a).or_else(|| nested_containment_witness(g, a, &full, a, a)),
        CrispKind::Interior => nested_containment_witness(g, &full, a, &full, a),
        CrispKind::Quasi => {
            let sa = subset_product(g, &full, a)?;
            let as_ = subset_product(g, a, &full)?;
            let both = sa.intersection(&as_);
            let escapee = both.members().find(|z| !a.contains(*z));
            escapee.map(|z| {
                let (b1, op1, c1, _) = first_factorization(g, &full, a, z);
                let (b2, op2, c2, _) = first_factorization(g, a, &full, z);
                CrispWitness {
                    elements: vec![b1, c1, b2, c2],
                    gammas: vec![op1, op2],
                    escapee: z,
                }
            })
        }
    };
    Ok(CrispVerdict {
        kind,
        holds: witness.is_none(),
        nonempty: !a.is_empty(),
        witness,
    })
}

/// Smallest `(b, γ, c)` with `b ∈ left`, `c ∈ right`, `bγc = target`.
fn first_factorization(
    g: &GammaGroupoid,
    left: &CrispSubset,
    right: &CrispSubset,
    target: Element,
) -> (Element, GammaIndex, Element, Element) {
    for b in left.members() {
        for c in right.members() {
            for op in 0..g.gamma_count() {
                if g.prod(op, b.index(), c.index()) == target.index() {
                    return (b, GammaIndex(op), c, target);
                }
            }
        }
    }
    unreachable!("target was produced by a subset product, so a factorization exists");
}

/// Intuitionistic level cut `A_α = {x : μ(x) ≥ α and ν(x) ≤ α}`.
pub fn level_cut(a: &Ifs, alpha: Grade) -> Result<CrispSubset> {
    if alpha.is_zero() {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    let mut out = CrispSubset::empty(a.carrier_size());
    for x in (0..a.carrier_size()).map(Element) {
        if a.mu(x) >= alpha && a.nu(x) <= alpha {
            out.insert(x);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealSide {
    Left,
    Right,
}

impl IdealSide {
    pub fn kind(self) -> CrispKind {
        match self {
            IdealSide::Left => CrispKind::LeftIdeal,
            IdealSide::Right => CrispKind::RightIdeal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdealSide::Left => "left",
            IdealSide::Right => "right",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DuoVerdict {
    pub side: IdealSide,
    pub holds: bool,
    /// Smallest one-sided ideal (by mask order) that is not two-sided.
    pub witness: Option<CrispSubset>,
}

pub const DUO_ENUMERATION_BOUND: usize = 12;

/// Bounded-exhaustive duo check: every `side` ideal must be two-sided.
pub fn is_duo(g: &GammaGroupoid, side: IdealSide) -> Result<DuoVerdict> {
    is_duo_bounded(g, side, DUO_ENUMERATION_BOUND)
}

pub fn is_duo_bounded(g: &GammaGroupoid, side: IdealSide, bound: usize) -> Result<DuoVerdict> {
    let n = g.carrier_size();
    if n > bound {
        return Err(Error::CarrierTooLarge { n, bound });
    }
    for mask in 0..(1u64 << n) {
        let a = CrispSubset::from_mask(n, mask);
        if is_crisp(g, &a, side.kind())?.holds && !is_crisp(g, &a, CrispKind::TwoSided)?.holds {
            return Ok(DuoVerdict {
                side,
                holds: false,
                witness: Some(a),
            });
        }
    }
    Ok(DuoVerdict {
        side,
        holds: true,
        witness: None,
    })
}
