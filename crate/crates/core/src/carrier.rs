//! Finite Γ-AG-groupoids as explicit multiplication tables, plus exhaustive
//! deciders for the identity laws and intra-regularity.
//!
//! A structure here is a carrier `{0, .., n-1}` together with `g` total
//! binary operations (one n×n table per Γ-index). Everything is decided by
//! scanning; every negative verdict carries the lexicographically smallest
//! violating tuple, element coordinates before Γ coordinates, so reports are
//! reproducible.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Carrier element, 0-based internally. Display is 1-based to match the
/// usual table conventions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }

    /// 1-based index used in all I/O.
    pub fn display_index(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_index())
    }
}

/// Index into the Γ family of operations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GammaIndex(pub usize);

const GAMMA_SYMBOLS: [&str; 7] = ["α", "β", "γ", "δ", "ξ", "ψ", "η"];

impl GammaIndex {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn display_index(self) -> usize {
        self.0 + 1
    }

    /// Symbolic name: the first few Γ-indexes render as greek letters.
    pub fn symbol(self) -> String {
        GAMMA_SYMBOLS
            .get(self.0)
            .map(|s| s.to_string())
            .unwrap_or_else(|| format!("γ{}", self.0 + 1))
    }
}

impl fmt::Display for GammaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A finite Γ-groupoid: `g` total operations on a carrier of size `n`.
///
/// Closure is enforced at construction; no law is assumed. Whether the
/// structure is actually a Γ-AG-groupoid is decided by [`check_law`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GammaGroupoid {
    n: usize,
    /// One flat n×n row-major table per Γ-index, entries 0-based.
    tables: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Validates raw 0-based tables into a groupoid.
///
/// 1-based table sources (documents, fixtures) are normalized before this
/// point; here every entry must already lie in `[0, n)`.
pub fn validate_groupoid(n: usize, g: usize, raw_tables: &[Vec<Vec<usize>>]) -> Result<GammaGroupoid> {
    if n == 0 || g == 0 {
        return Err(Error::WrongShape {
            detail: format!("carrier size {n} and gamma count {g} must both be at least 1"),
        });
    }
    if raw_tables.len() != g {
        return Err(Error::WrongShape {
            detail: format!("expected {g} tables, got {}", raw_tables.len()),
        });
    }
    let mut tables = Vec::with_capacity(g);
    for (t, raw) in raw_tables.iter().enumerate() {
        if raw.len() != n {
            return Err(Error::WrongShape {
                detail: format!("table {t} has {} rows, expected {n}", raw.len()),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::WrongShape {
                    detail: format!("table {t} row {r} has {} entries, expected {n}", row.len()),
                });
            }
            for (c, &entry) in row.iter().enumerate() {
                if entry >= n {
                    return Err(Error::OutOfRange {
                        table: t,
                        row: r,
                        col: c,
                        entry,
                    });
                }
                flat.push(entry);
            }
        }
        tables.push(flat);
    }
    Ok(GammaGroupoid {
        n,
        tables,
        labels: None,
    })
}

impl GammaGroupoid {
    /// Convenience for single-operation tables.
    pub fn from_single_table(table: &[Vec<usize>]) -> Result<GammaGroupoid> {
        validate_groupoid(table.len(), 1, std::slice::from_ref(&table.to_vec()))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<GammaGroupoid> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn gamma_count(&self) -> usize {
        self.tables.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else 1-based index.
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(ls) => ls[x.index()].clone(),
            None => x.display_index().to_string(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.n).map(Element)
    }

    pub fn gammas(&self) -> impl Iterator<Item = GammaIndex> {
        (0..self.tables.len()).map(GammaIndex)
    }

    /// Table rows of one operation, 0-based entries.
    pub fn table_rows(&self, op: GammaIndex) -> Vec<Vec<usize>> {
        let flat = &self.tables[op.index()];
        (0..self.n)
            .map(|r| flat[r * self.n..(r + 1) * self.n].to_vec())
            .collect()
    }

    #[inline]
    pub(crate) fn prod(&self, op: usize, x: usize, y: usize) -> usize {
        self.tables[op][x * self.n + y]
    }
}

/// `x op y` looked up in the tables.
pub fn product(g: &GammaGroupoid, x: Element, op: GammaIndex, y: Element) -> Element {
    debug_assert!(x.index() < g.n && y.index() < g.n && op.index() < g.tables.len());
    Element(g.prod(op.index(), x.index(), y.index()))
}

/// The identity laws the workbench can decide.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LawId {
    /// (xαy)βz = (zαy)βx
    LeftInvertive,
    /// (wαx)β(yγz) = (wαy)β(xγz)
    Medial,
    /// xα(yβz) = yα(xβz)
    AgStarStar,
    /// (wαx)β(yγz) = (zαy)β(xγw)
    Paramedial,
    /// xγy = yγx for every γ
    Commutative,
    /// (xγy)δz = xγ(yδz) for all γ, δ
    Associative,
    /// aγa = a for every a, γ
    IdempotentBand,
    /// every element factors as bγc
    SEqualsSgs,
}

impl LawId {
    pub const ALL: [LawId; 8] = [
        LawId::LeftInvertive,
        LawId::Medial,
        LawId::AgStarStar,
        LawId::Paramedial,
        LawId::Commutative,
        LawId::Associative,
        LawId::IdempotentBand,
        LawId::SEqualsSgs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::LeftInvertive => "left-invertive",
            LawId::Medial => "medial",
            LawId::AgStarStar => "ag-star-star",
            LawId::Paramedial => "paramedial",
            LawId::Commutative => "commutative",
            LawId::Associative => "associative",
            LawId::IdempotentBand => "idempotent-band",
            LawId::SEqualsSgs => "s-equals-sgs",
        }
    }

    pub fn from_name(name: &str) -> Option<LawId> {
        LawId::ALL.into_iter().find(|l| l.name() == name)
    }

    /// (element arity, Γ arity) of the law's quantifier prefix.
    pub fn arity(self) -> (usize, usize) {
        match self {
            LawId::LeftInvertive | LawId::AgStarStar | LawId::Associative => (3, 2),
            LawId::Medial | LawId::Paramedial => (4, 3),
            LawId::Commutative => (2, 1),
            LawId::IdempotentBand => (1, 1),
            LawId::SEqualsSgs => (1, 0),
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Instantiation of a violated law: the quantified tuple plus both sides.
///
/// For [`LawId::SEqualsSgs`] the single element is one with no Γ-factorization
/// and `lhs == rhs == that element`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawWitness {
    pub elements: Vec<Element>,
    pub gammas: Vec<GammaIndex>,
    pub lhs: Element,
    pub rhs: Element,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawReport {
    pub law: LawId,
    pub holds: bool,
    pub witness: Option<LawWitness>,
}

/// Evaluates both sides of `law` at a concrete tuple. `None` when the tuple
/// arity does not match the law, or for the existential `SEqualsSgs`.
pub fn eval_law_instance(
    g: &GammaGroupoid,
    law: LawId,
    elements: &[Element],
    gammas: &[GammaIndex],
) -> Option<(Element, Element)> {
    let (ea, ga) = law.arity();
    if elements.len() != ea || gammas.len() != ga {
        return None;
    }
    let e: Vec<usize> = elements.iter().map(|x| x.index()).collect();
    let m: Vec<usize> = gammas.iter().map(|x| x.index()).collect();
    let p = |op: usize, x: usize, y: usize| g.prod(op, x, y);
    let (lhs, rhs) = match law {
        LawId::LeftInvertive => (p(m[1], p(m[0], e[0], e[1]), e[2]), p(m[1], p(m[0], e[2], e[1]), e[0])),
        LawId::Medial => (
            p(m[1], p(m[0], e[0], e[1]), p(m[2], e[2], e[3])),
            p(m[1], p(m[0], e[0], e[2]), p(m[2], e[1], e[3])),
        ),
        LawId::AgStarStar => (p(m[0], e[0], p(m[1], e[1], e[2])), p(m[0], e[1], p(m[1], e[0], e[2]))),
        LawId::Paramedial => (
            p(m[1], p(m[0], e[0], e[1]), p(m[2], e[2], e[3])),
            p(m[1], p(m[0], e[3], e[2]), p(m[2], e[1], e[0])),
        ),
        LawId::Commutative => (p(m[0], e[0], e[1]), p(m[0], e[1], e[0])),
        LawId::Associative => (p(m[1], p(m[0], e[0], e[1]), e[2]), p(m[0], e[0], p(m[1], e[1], e[2]))),
        LawId::IdempotentBand => (p(m[0], e[0], e[0]), e[0]),
        LawId::SEqualsSgs => return None,
    };
    Some((Element(lhs), Element(rhs)))
}

/// True iff the witness re-evaluates to a genuine violation of `law`.
pub fn witness_is_violation(g: &GammaGroupoid, law: LawId, w: &LawWitness) -> bool {
    if law == LawId::SEqualsSgs {
        if w.elements.len() != 1 {
            return false;
        }
        let a = w.elements[0].index();
        return !(0..g.gamma_count())
            .any(|op| (0..g.n).any(|b| (0..g.n).any(|c| g.prod(op, b, c) == a)));
    }
    match eval_law_instance(g, law, &w.elements, &w.gammas) {
        Some((lhs, rhs)) => lhs != rhs && lhs == w.lhs && rhs == w.rhs,
        None => false,
    }
}

/// Odometer over `count` coordinates each in `[0, radix)`, lexicographic.
fn tuples(count: usize, radix: usize) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = radix.checked_pow(count as u32).expect("tuple space fits usize");
    (0..total).map(move |mut k| {
        let mut t = vec![0; count];
        for slot in t.iter_mut().rev() {
            *slot = k % radix;
            k /= radix;
        }
        t
    })
}

/// Exhaustively decides `law` on `g`.
///
/// Scan order is element tuples (lexicographic) outer, Γ tuples inner, so a
/// failing report always carries the smallest witness under that order.
pub fn check_law(g: &GammaGroupoid, law: LawId) -> LawReport {
    if law == LawId::SEqualsSgs {
        let mut reachable = vec![false; g.n];
        for op in 0..g.gamma_count() {
            for b in 0..g.n {
                for c in 0..g.n {
                    reachable[g.prod(op, b, c)] = true;
                }
            }
        }
        let witness = reachable.iter().position(|&r| !r).map(|a| LawWitness {
            elements: vec![Element(a)],
            gammas: vec![],
            lhs: Element(a),
            rhs: Element(a),
        });
        return LawReport {
            law,
            holds: witness.is_none(),
            witness,
        };
    }

    let (ea, ga) = law.arity();
    for elems in tuples(ea, g.n) {
        let elements: Vec<Element> = elems.iter().map(|&x| Element(x)).collect();
        for ops in tuples(ga, g.gamma_count()) {
            let gammas: Vec<GammaIndex> = ops.iter().map(|&x| GammaIndex(x)).collect();
            let (lhs, rhs) =
                eval_law_instance(g, law, &elements, &gammas).expect("arity matches by construction");
            if lhs != rhs {
                return LawReport {
                    law,
                    holds: false,
                    witness: Some(LawWitness {
                        elements,
                        gammas,
                        lhs,
                        rhs,
                    }),
                };
            }
        }
    }
    LawReport {
        law,
        holds: true,
        witness: None,
    }
}

/// Witness that `a = (x α (a β a)) γ y` in the tables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IntraRegularWitness {
    pub a: Element,
    pub x: Element,
    pub y: Element,
    pub alpha: GammaIndex,
    pub beta: GammaIndex,
    pub gamma: GammaIndex,
}

impl IntraRegularWitness {
    /// Recomputes `(x α (a β a)) γ y`; equals `a` for a genuine witness.
    pub fn reevaluate(&self, g: &GammaGroupoid) -> Element {
        let aa = g.prod(self.beta.index(), self.a.index(), self.a.index());
        let inner = g.prod(self.alpha.index(), self.x.index(), aa);
        Element(g.prod(self.gamma.index(), inner, self.y.index()))
    }
}

/// First intra-regularity witness for `a`, scanning `(x, y, α, β, γ)` in
/// lexicographic order; `None` when `a` is not intra-regular.
pub fn intra_regular_witness(g: &GammaGroupoid, a: Element) -> Option<IntraRegularWitness> {
    let gc = g.gamma_count();
    for x in 0..g.n {
        for y in 0..g.n {
            for alpha in 0..gc {
                for beta in 0..gc {
                    let aa = g.prod(beta, a.index(), a.index());
                    let inner = g.prod(alpha, x, aa);
                    for gamma in 0..gc {
                        if g.prod(gamma, inner, y) == a.index() {
                            return Some(IntraRegularWitness {
                                a,
                                x: Element(x),
                                y: Element(y),
                                alpha: GammaIndex(alpha),
                                beta: GammaIndex(beta),
                                gamma: GammaIndex(gamma),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntraRegularityReport {
    pub witnesses: BTreeMap<Element, IntraRegularWitness>,
    pub failures: Vec<Element>,
}

impl IntraRegularityReport {
    pub fn regular(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies [`intra_regular_witness`] to every carrier element.
pub fn intra_regularity(g: &GammaGroupoid) -> IntraRegularityReport {
    let mut witnesses = BTreeMap::new();
    let mut failures = Vec::new();
    for a in g.elements() {
        match intra_regular_witness(g, a) {
            Some(w) => {
                witnesses.insert(a, w);
            }
            None => failures.push(a),
        }
    }
    IntraRegularityReport { witnesses, failures }
}


/// Builds the two-operation Γ-structure of a single base table via powers:
/// `a α b = (ab)²` and `a β b = a³b²`, with left-normed powers
/// `t² = t·t`, `t³ = (t·t)·t`.
pub fn derive_power_gamma(base: &GammaGroupoid) -> Result<GammaGroupoid> {
    if base.gamma_count() != 1 {
        return Err(Error::WrongShape {
            detail: format!(
                "power derivation needs a single-operation table, got {} operations",
                base.gamma_count()
            ),
        });
    }
    let n = base.n;
    let sq: Vec<usize> = (0..n).map(|t| base.prod(0, t, t)).collect();
    let cube: Vec<usize> = (0..n).map(|t| base.prod(0, sq[t], t)).collect();
    let mut alpha = Vec::with_capacity(n * n);
    let mut beta = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = base.prod(0, a, b);
            alpha.push(sq[ab]);
            beta.push(base.prod(0, cube[a], sq[b]));
        }
    }
    Ok(GammaGroupoid {
        n,
        tables: vec![alpha, beta],
        labels: base.labels.clone(),
    })
}
