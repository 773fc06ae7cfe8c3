//! Statement catalog and verification lab.
//!
//! Each catalog entry binds a statement about Γ-AG-groupoids and their IF
//! ideals to (a) structural hypotheses on the groupoid, (b) role hypotheses
//! on the supplied IFS inputs, and (c) an exactly-computable conclusion.
//! `verify` gates the conclusion behind the hypotheses; `hunt` drives the
//! same machinery over randomized or enumerated instances looking for a
//! counterexample; `enumerate_groupoids` supplies small carriers by
//! backtracking.

use std::fmt;

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::carrier::{
    check_law, intra_regularity, validate_groupoid, Element, GammaGroupoid,
    IntraRegularityReport, LawId, LawReport, LawWitness,
};
use crate::crisp::{is_crisp, level_cut, CrispKind};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ifs::{compose, derive_seed, equals, intersect, is_idempotent, random_ifs, Ifs};
use crate::ifs_ideals::{
    characterize_by_composition, is_if, GradeSide, IfsKind, IfsVerdict, IfsWitness,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TheoremId {
    /// Level cuts of IF right (left, two-sided, bi, generalized bi) ideals
    /// are crisp ideals of the matching kind.
    LevelCut,
    /// Scan and composition routes agree for subgroupoid/left/right.
    Char,
    /// IF bi-ideal ⟺ (A∘δ)∘A = A and A∘A = A.
    BiEq,
    /// IF interior ideal ⟺ (δ∘A)∘δ = A.
    IntEq,
    /// IF left ideal ⟺ IF right ideal.
    LrIff,
    /// Every one-sided IF ideal is two-sided.
    Duo,
    /// δ∘A = A and A∘δ = A for one-sided/two-sided IF ideals.
    Absorb,
    /// δ∘δ = δ.
    DeltaIdem,
    /// IF quasi ideal ⟺ (A∘δ) ∩ (δ∘A) = A.
    QuasiEq,
    /// IF quasi ⟺ IF two-sided.
    QuasiTs,
    /// IF interior ⟺ IF two-sided.
    IntTs,
    /// The eight ideal characterizations agree.
    GrandEq,
    /// A∘B = A∩B for IF two-sided ideals.
    ProdCap,
    /// IF two-sided ideals are idempotent under ∘.
    TsIdem,
    /// IF two-sided ideals form a semilattice with identity δ.
    Semilattice,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IfsArity {
    Zero,
    One,
    Two,
    List,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::LevelCut,
        TheoremId::Char,
        TheoremId::BiEq,
        TheoremId::IntEq,
        TheoremId::LrIff,
        TheoremId::Duo,
        TheoremId::Absorb,
        TheoremId::DeltaIdem,
        TheoremId::QuasiEq,
        TheoremId::QuasiTs,
        TheoremId::IntTs,
        TheoremId::GrandEq,
        TheoremId::ProdCap,
        TheoremId::TsIdem,
        TheoremId::Semilattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::LevelCut => "level-cut",
            TheoremId::Char => "char",
            TheoremId::BiEq => "bi-eq",
            TheoremId::IntEq => "int-eq",
            TheoremId::LrIff => "lr-iff",
            TheoremId::Duo => "duo",
            TheoremId::Absorb => "absorb",
            TheoremId::DeltaIdem => "delta-idem",
            TheoremId::QuasiEq => "quasi-eq",
            TheoremId::QuasiTs => "quasi-ts",
            TheoremId::IntTs => "int-ts",
            TheoremId::GrandEq => "grand-eq",
            TheoremId::ProdCap => "prod-cap",
            TheoremId::TsIdem => "ts-idem",
            TheoremId::Semilattice => "semilattice",
        }
    }

    pub fn from_name(name: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn ifs_arity(self) -> IfsArity {
        match self {
            TheoremId::DeltaIdem => IfsArity::Zero,
            TheoremId::ProdCap => IfsArity::Two,
            TheoremId::Semilattice => IfsArity::List,
            _ => IfsArity::One,
        }
    }

    /// Statements pronounced on Γ-AG**-groupoids carry the AG** law as a
    /// structural hypothesis; the rest only require left invertivity.
    pub fn needs_ag_star_star(self) -> bool {
        !matches!(
            self,
            TheoremId::LevelCut
                | TheoremId::Char
                | TheoremId::Absorb
                | TheoremId::DeltaIdem
                | TheoremId::TsIdem
        )
    }

    pub fn needs_intra_regular(self) -> bool {
        !matches!(self, TheoremId::LevelCut | TheoremId::Char)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A theorem bound to concrete structures.
#[derive(Clone, Debug)]
pub struct InstanceBundle {
    pub groupoid: GammaGroupoid,
    pub ifs: Vec<Ifs>,
    /// Cut grid for `LevelCut`; empty means the default `{k/10}` grid.
    pub alpha_grid: Vec<Grade>,
}

impl InstanceBundle {
    pub fn new(groupoid: GammaGroupoid) -> InstanceBundle {
        InstanceBundle {
            groupoid,
            ifs: Vec::new(),
            alpha_grid: Vec::new(),
        }
    }

    pub fn with_ifs(mut self, ifs: Ifs) -> InstanceBundle {
        self.ifs.push(ifs);
        self
    }

    pub fn with_alpha_grid(mut self, grid: Vec<Grade>) -> InstanceBundle {
        self.alpha_grid = grid;
        self
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConclusionPart {
    pub name: String,
    pub outcome: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Conclusion {
    pub holds: bool,
    pub witness: Option<String>,
    pub parts: Vec<ConclusionPart>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    /// Present only when every hypothesis holds (or the caller relaxed them).
    pub conclusion: Option<Conclusion>,
}

impl TheoremVerdict {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    pub fn is_counterexample(&self) -> bool {
        self.hypotheses_hold() && self.conclusion.as_ref().is_some_and(|c| !c.holds)
    }
}

/// Law and intra-regularity status of one groupoid, computed once and shared
/// across many per-IFS verifications.
#[derive(Clone, Debug)]
pub struct StructuralFacts {
    pub left_invertive: LawReport,
    pub ag_star_star: LawReport,
    pub intra: IntraRegularityReport,
}

impl StructuralFacts {
    pub fn compute(g: &GammaGroupoid) -> StructuralFacts {
        StructuralFacts {
            left_invertive: check_law(g, LawId::LeftInvertive),
            ag_star_star: check_law(g, LawId::AgStarStar),
            intra: intra_regularity(g),
        }
    }
}

pub fn law_witness_summary(w: &LawWitness) -> String {
    let elems: Vec<String> = w.elements.iter().map(|e| e.display_index().to_string()).collect();
    let ops: Vec<String> = w.gammas.iter().map(|o| o.symbol()).collect();
    if ops.is_empty() {
        format!("element {} has no factorization", w.elements[0])
    } else {
        format!("({}|{}): {} ≠ {}", elems.join(","), ops.join(","), w.lhs, w.rhs)
    }
}

pub fn ifs_witness_summary(w: &IfsWitness) -> String {
    let side = |s: &GradeSide| match s {
        GradeSide::Mu => "mu",
        GradeSide::Nu => "nu",
    };
    match w {
        IfsWitness::Pointwise {
            elements,
            gammas,
            side: s,
            actual,
            bound,
        } => {
            let elems: Vec<String> = elements.iter().map(|e| e.display_index().to_string()).collect();
            let ops: Vec<String> = gammas.iter().map(|o| o.symbol()).collect();
            format!(
                "at ({}|{}): {}={} violates bound {}",
                elems.join(","),
                ops.join(","),
                side(s),
                actual,
                bound
            )
        }
        IfsWitness::Containment {
            element,
            side: s,
            composed,
            bound,
        } => format!(
            "at {}: composed {}={} violates {}",
            element,
            side(s),
            composed,
            bound
        ),
        IfsWitness::Quasi {
            element,
            side: s,
            a_delta,
            delta_a,
            bound,
        } => format!(
            "at {}: {} of A∘δ={} and δ∘A={} violates {}",
            element,
            side(s),
            a_delta,
            delta_a,
            bound
        ),
    }
}

fn verdict_summary(v: &IfsVerdict) -> String {
    match (&v.holds, &v.witness) {
        (true, _) => "holds".to_string(),
        (false, Some(w)) => format!("fails {}", ifs_witness_summary(w)),
        (false, None) => "fails".to_string(),
    }
}

fn law_hypothesis(name: &str, report: &LawReport) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        holds: report.holds,
        detail: report.witness.as_ref().map(|w| format!("fails {}", law_witness_summary(w))),
    }
}

fn intra_hypothesis(report: &IntraRegularityReport) -> Hypothesis {
    Hypothesis {
        name: "intra-regular".to_string(),
        holds: report.regular(),
        detail: if report.regular() {
            None
        } else {
            let failures: Vec<String> = report
                .failures
                .iter()
                .map(|e| e.display_index().to_string())
                .collect();
            Some(format!("no witness for elements {{{}}}", failures.join(",")))
        },
    }
}

/// Role hypothesis: `input` must pass one of `kinds`.
fn role_hypothesis(g: &GammaGroupoid, label: &str, input: &Ifs, kinds: &[IfsKind]) -> Result<Hypothesis> {
    let mut failures = Vec::new();
    let mut holds = false;
    for &k in kinds {
        let v = is_if(g, input, k)?;
        if v.holds {
            holds = true;
            break;
        }
        failures.push(format!("not {}: {}", k.name(), verdict_summary(&v)));
    }
    let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
    Ok(Hypothesis {
        name: format!("{label} is an if {} ideal", names.join(" or ")),
        holds,
        detail: if holds { None } else { Some(failures.join("; ")) },
    })
}

fn hypotheses_for(
    id: TheoremId,
    facts: &StructuralFacts,
    g: &GammaGroupoid,
    bundle: &InstanceBundle,
) -> Result<Vec<Hypothesis>> {
    let mut hs = vec![law_hypothesis("left-invertive", &facts.left_invertive)];
    if id.needs_ag_star_star() {
        hs.push(law_hypothesis("ag-star-star", &facts.ag_star_star));
    }
    if id.needs_intra_regular() {
        hs.push(intra_hypothesis(&facts.intra));
    }
    match id {
        TheoremId::Absorb => {
            hs.push(role_hypothesis(
                g,
                "input",
                &bundle.ifs[0],
                &[IfsKind::TwoSided, IfsKind::Left, IfsKind::Right],
            )?);
        }
        TheoremId::TsIdem => {
            hs.push(role_hypothesis(g, "input", &bundle.ifs[0], &[IfsKind::TwoSided])?);
        }
        TheoremId::ProdCap => {
            hs.push(role_hypothesis(g, "input 1", &bundle.ifs[0], &[IfsKind::TwoSided])?);
            hs.push(role_hypothesis(g, "input 2", &bundle.ifs[1], &[IfsKind::TwoSided])?);
        }
        TheoremId::Semilattice => {
            for (i, a) in bundle.ifs.iter().enumerate() {
                hs.push(role_hypothesis(g, &format!("input {}", i + 1), a, &[IfsKind::TwoSided])?);
            }
        }
        _ => {}
    }
    Ok(hs)
}

fn part(name: &str, outcome: impl Into<String>) -> ConclusionPart {
    ConclusionPart {
        name: name.to_string(),
        outcome: outcome.into(),
    }
}

fn equality_outcome(holds: bool) -> &'static str {
    if holds {
        "equal"
    } else {
        "not equal"
    }
}

fn default_alpha_grid() -> Vec<Grade> {
    (1..=10).map(|k| Grade::new(k, 10).expect("k/10 in range")).collect()
}

fn level_cut_conclusion(g: &GammaGroupoid, bundle: &InstanceBundle) -> Result<Conclusion> {
    let a = &bundle.ifs[0];
    let grid = if bundle.alpha_grid.is_empty() {
        default_alpha_grid()
    } else {
        bundle.alpha_grid.clone()
    };
    let directions: [(IfsKind, CrispKind); 5] = [
        (IfsKind::Right, CrispKind::RightIdeal),
        (IfsKind::Left, CrispKind::LeftIdeal),
        (IfsKind::TwoSided, CrispKind::TwoSided),
        (IfsKind::Bi, CrispKind::Bi),
        (IfsKind::GeneralizedBi, CrispKind::GeneralizedBi),
    ];
    let mut parts = Vec::new();
    let mut witness = None;
    let mut holds = true;
    for (ifk, ck) in directions {
        let role = is_if(g, a, ifk)?;
        if !role.holds {
            parts.push(part(ifk.name(), format!("skipped: input {}", verdict_summary(&role))));
            continue;
        }
        let mut direction_failure = None;
        for &alpha in &grid {
            let cut = level_cut(a, alpha)?;
            let cv = is_crisp(g, &cut, ck)?;
            if !cv.holds {
                direction_failure = Some(format!(
                    "cut at alpha={} is {} but not a crisp {}",
                    alpha, cut, ck
                ));
                break;
            }
        }
        match direction_failure {
            Some(f) => {
                holds = false;
                if witness.is_none() {
                    witness = Some(format!("{}: {}", ifk.name(), f));
                }
                parts.push(part(ifk.name(), f));
            }
            None => parts.push(part(ifk.name(), format!("cuts pass for {} alpha values", grid.len()))),
        }
    }
    Ok(Conclusion { holds, witness, parts })
}

fn char_conclusion(g: &GammaGroupoid, bundle: &InstanceBundle) -> Result<Conclusion> {
    let a = &bundle.ifs[0];
    let mut parts = Vec::new();
    let mut witness = None;
    let mut holds = true;
    for kind in [IfsKind::Subgroupoid, IfsKind::Left, IfsKind::Right] {
        let direct = is_if(g, a, kind)?;
        let via = characterize_by_composition(g, a, kind)?;
        if direct.holds == via.holds {
            parts.push(part(kind.name(), format!("agree (both {})", direct.holds)));
        } else {
            holds = false;
            let msg = format!(
                "disagree: scan {} but composition {}",
                verdict_summary(&direct),
                verdict_summary(&via)
            );
            if witness.is_none() {
                witness = Some(format!("{}: {}", kind.name(), msg));
            }
            parts.push(part(kind.name(), msg));
        }
    }
    Ok(Conclusion { holds, witness, parts })
}

fn biconditional(
    lhs_name: &str,
    lhs: bool,
    rhs_name: &str,
    rhs: bool,
    extra: Vec<ConclusionPart>,
) -> Conclusion {
    let holds = lhs == rhs;
    let mut parts = vec![
        part(lhs_name, lhs.to_string()),
        part(rhs_name, rhs.to_string()),
    ];
    parts.extend(extra);
    Conclusion {
        holds,
        witness: if holds {
            None
        } else {
            Some(format!("{lhs_name}={lhs} but {rhs_name}={rhs}"))
        },
        parts,
    }
}

fn absorb_equalities(g: &GammaGroupoid, a: &Ifs) -> Result<(bool, bool)> {
    let delta = Ifs::delta(g.carrier_size());
    let left = equals(&compose(g, &delta, a)?, a)?;
    let right = equals(&compose(g, a, &delta)?, a)?;
    Ok((left, right))
}

fn conclusion_for(id: TheoremId, g: &GammaGroupoid, bundle: &InstanceBundle) -> Result<Conclusion> {
    let delta = Ifs::delta(g.carrier_size());
    match id {
        TheoremId::LevelCut => level_cut_conclusion(g, bundle),
        TheoremId::Char => char_conclusion(g, bundle),
        TheoremId::BiEq => {
            let a = &bundle.ifs[0];
            let lhs = is_if(g, a, IfsKind::Bi)?.holds;
            let e1 = equals(&compose(g, &compose(g, a, &delta)?, a)?, a)?;
            let e2 = equals(&compose(g, a, a)?, a)?;
            Ok(biconditional(
                "if-bi",
                lhs,
                "(A∘δ)∘A = A and A∘A = A",
                e1 && e2,
                vec![
                    part("(A∘δ)∘A = A", equality_outcome(e1)),
                    part("A∘A = A", equality_outcome(e2)),
                ],
            ))
        }
        TheoremId::IntEq => {
            let a = &bundle.ifs[0];
            let lhs = is_if(g, a, IfsKind::Interior)?.holds;
            let rhs = equals(&compose(g, &compose(g, &delta, a)?, &delta)?, a)?;
            Ok(biconditional("if-interior", lhs, "(δ∘A)∘δ = A", rhs, vec![]))
        }
        TheoremId::LrIff => {
            let a = &bundle.ifs[0];
            let l = is_if(g, a, IfsKind::Left)?.holds;
            let r = is_if(g, a, IfsKind::Right)?.holds;
            Ok(biconditional("if-left", l, "if-right", r, vec![]))
        }
        TheoremId::Duo => {
            let a = &bundle.ifs[0];
            let l = is_if(g, a, IfsKind::Left)?.holds;
            let r = is_if(g, a, IfsKind::Right)?.holds;
            let ts = is_if(g, a, IfsKind::TwoSided)?.holds;
            let holds = (!l || ts) && (!r || ts);
            Ok(Conclusion {
                holds,
                witness: if holds {
                    None
                } else {
                    Some(format!("one-sided ideal is not two-sided (left={l}, right={r}, two-sided={ts})"))
                },
                parts: vec![
                    part("if-left", l.to_string()),
                    part("if-right", r.to_string()),
                    part("if-two-sided", ts.to_string()),
                ],
            })
        }
        TheoremId::Absorb => {
            let (left, right) = absorb_equalities(g, &bundle.ifs[0])?;
            let holds = left && right;
            Ok(Conclusion {
                holds,
                witness: if holds {
                    None
                } else {
                    Some(format!("δ∘A = A is {left}, A∘δ = A is {right}"))
                },
                parts: vec![
                    part("δ∘A = A", equality_outcome(left)),
                    part("A∘δ = A", equality_outcome(right)),
                ],
            })
        }
        TheoremId::DeltaIdem => {
            let holds = equals(&compose(g, &delta, &delta)?, &delta)?;
            Ok(Conclusion {
                holds,
                witness: if holds { None } else { Some("δ∘δ ≠ δ".to_string()) },
                parts: vec![part("δ∘δ = δ", equality_outcome(holds))],
            })
        }
        TheoremId::QuasiEq => {
            let a = &bundle.ifs[0];
            let lhs = is_if(g, a, IfsKind::Quasi)?.holds;
            let cap = intersect(&compose(g, a, &delta)?, &compose(g, &delta, a)?)?;
            let rhs = equals(&cap, a)?;
            Ok(biconditional("if-quasi", lhs, "(A∘δ) ∩ (δ∘A) = A", rhs, vec![]))
        }
        TheoremId::QuasiTs => {
            let a = &bundle.ifs[0];
            let q = is_if(g, a, IfsKind::Quasi)?.holds;
            let ts = is_if(g, a, IfsKind::TwoSided)?.holds;
            Ok(biconditional("if-quasi", q, "if-two-sided", ts, vec![]))
        }
        TheoremId::IntTs => {
            let a = &bundle.ifs[0];
            let ts = is_if(g, a, IfsKind::TwoSided)?.holds;
            let int = is_if(g, a, IfsKind::Interior)?.holds;
            Ok(biconditional("if-two-sided", ts, "if-interior", int, vec![]))
        }
        TheoremId::GrandEq => {
            let a = &bundle.ifs[0];
            let (dl, dr) = absorb_equalities(g, a)?;
            let mut preds: Vec<(String, bool)> = Vec::new();
            for kind in [
                IfsKind::Left,
                IfsKind::Right,
                IfsKind::TwoSided,
                IfsKind::Bi,
                IfsKind::GeneralizedBi,
                IfsKind::Interior,
                IfsKind::Quasi,
            ] {
                preds.push((format!("if-{}", kind.name()), is_if(g, a, kind)?.holds));
            }
            preds.push(("A∘δ = A and δ∘A = A".to_string(), dl && dr));
            let first = preds[0].1;
            let holds = preds.iter().all(|(_, v)| *v == first);
            let witness = if holds {
                None
            } else {
                let (tn, _) = preds.iter().find(|(_, v)| *v).expect("mixed values");
                let (fnm, _) = preds.iter().find(|(_, v)| !*v).expect("mixed values");
                Some(format!("{tn} holds but {fnm} fails"))
            };
            Ok(Conclusion {
                holds,
                witness,
                parts: preds.into_iter().map(|(n, v)| part(&n, v.to_string())).collect(),
            })
        }
        TheoremId::ProdCap => {
            let a = &bundle.ifs[0];
            let b = &bundle.ifs[1];
            let composed = compose(g, a, b)?;
            let cap = intersect(a, b)?;
            let holds = equals(&composed, &cap)?;
            let witness = if holds {
                None
            } else {
                (0..g.carrier_size()).map(Element).find_map(|e| {
                    if composed.mu(e) != cap.mu(e) {
                        Some(format!("at {}: mu {} vs {}", e, composed.mu(e), cap.mu(e)))
                    } else if composed.nu(e) != cap.nu(e) {
                        Some(format!("at {}: nu {} vs {}", e, composed.nu(e), cap.nu(e)))
                    } else {
                        None
                    }
                })
            };
            Ok(Conclusion {
                holds,
                witness,
                parts: vec![part("A∘B = A∩B", equality_outcome(holds))],
            })
        }
        TheoremId::TsIdem => {
            let holds = is_idempotent(g, &bundle.ifs[0])?;
            Ok(Conclusion {
                holds,
                witness: if holds { None } else { Some("A∘A ≠ A".to_string()) },
                parts: vec![part("A∘A = A", equality_outcome(holds))],
            })
        }
        TheoremId::Semilattice => semilattice_conclusion(g, &bundle.ifs),
    }
}

/// Closed-world semilattice check over the composition-closure of `ideals`.
fn semilattice_conclusion(g: &GammaGroupoid, ideals: &[Ifs]) -> Result<Conclusion> {
    const CLOSURE_CAP: usize = 512;
    let delta = Ifs::delta(g.carrier_size());
    let mut working: Vec<Ifs> = Vec::new();
    for a in ideals {
        if !working.contains(a) {
            working.push(a.clone());
        }
    }
    let mut parts = Vec::new();
    let mut witness: Option<String> = None;
    let mut holds = true;
    let fail = |witness: &mut Option<String>, holds: &mut bool, name: &str, msg: String| {
        *holds = false;
        if witness.is_none() {
            *witness = Some(format!("{name}: {msg}"));
        }
        part(name, msg)
    };

    // (a) closure: products stay two-sided; new products join the working
    // set and the pair scan repeats until a fixpoint.
    let mut closure_ok = true;
    let mut changed = true;
    'closure: while changed {
        changed = false;
        let len = working.len();
        for i in 0..len {
            for j in 0..len {
                let c = compose(g, &working[i], &working[j])?;
                if working.contains(&c) {
                    continue;
                }
                let vd = is_if(g, &c, IfsKind::TwoSided)?;
                if !vd.holds {
                    closure_ok = false;
                    parts.push(fail(
                        &mut witness,
                        &mut holds,
                        "closure",
                        format!(
                            "product of members {} and {} is not if two-sided: {}",
                            i + 1,
                            j + 1,
                            verdict_summary(&vd)
                        ),
                    ));
                    break 'closure;
                }
                if working.len() >= CLOSURE_CAP {
                    closure_ok = false;
                    parts.push(fail(
                        &mut witness,
                        &mut holds,
                        "closure",
                        format!("did not stabilize within {CLOSURE_CAP} elements"),
                    ));
                    break 'closure;
                }
                working.push(c);
                changed = true;
            }
        }
    }
    if closure_ok {
        parts.push(part("closure", format!("stable with {} elements", working.len())));
    }

    if closure_ok {
        // (b) commutativity over all pairs.
        let mut comm = None;
        'comm: for a in &working {
            for b in &working {
                if !equals(&compose(g, a, b)?, &compose(g, b, a)?)? {
                    comm = Some("A∘B ≠ B∘A for some members".to_string());
                    break 'comm;
                }
            }
        }
        match comm {
            Some(msg) => parts.push(fail(&mut witness, &mut holds, "commutativity", msg)),
            None => parts.push(part("commutativity", "holds over all pairs")),
        }

        // (c) associativity over all triples.
        let mut assoc = None;
        'assoc: for a in &working {
            for b in &working {
                let ab = compose(g, a, b)?;
                for c in &working {
                    let bc = compose(g, b, c)?;
                    if !equals(&compose(g, &ab, c)?, &compose(g, a, &bc)?)? {
                        assoc = Some("(A∘B)∘C ≠ A∘(B∘C) for some members".to_string());
                        break 'assoc;
                    }
                }
            }
        }
        match assoc {
            Some(msg) => parts.push(fail(&mut witness, &mut holds, "associativity", msg)),
            None => parts.push(part("associativity", "holds over all triples")),
        }

        // (d) idempotence of each member.
        let mut idem = None;
        for (k, a) in working.iter().enumerate() {
            if !is_idempotent(g, a)? {
                idem = Some(format!("member {} is not idempotent", k + 1));
                break;
            }
        }
        match idem {
            Some(msg) => parts.push(fail(&mut witness, &mut holds, "idempotence", msg)),
            None => parts.push(part("idempotence", "every member idempotent")),
        }

        // (e) δ is a two-sided identity.
        let mut ident = None;
        for (k, a) in working.iter().enumerate() {
            if !(equals(&compose(g, &delta, a)?, a)? && equals(&compose(g, a, &delta)?, a)?) {
                ident = Some(format!("δ is not an identity for member {}", k + 1));
                break;
            }
        }
        match ident {
            Some(msg) => parts.push(fail(&mut witness, &mut holds, "delta-identity", msg)),
            None => parts.push(part("delta-identity", "δ∘A = A∘δ = A for every member")),
        }
    }

    Ok(Conclusion { holds, witness, parts })
}

fn expected_arity(id: TheoremId) -> &'static str {
    match id.ifs_arity() {
        IfsArity::Zero => "exactly 0",
        IfsArity::One => "exactly 1",
        IfsArity::Two => "exactly 2",
        IfsArity::List => "any number of",
    }
}

fn check_bundle(id: TheoremId, bundle: &InstanceBundle) -> Result<()> {
    let got = bundle.ifs.len();
    let ok = match id.ifs_arity() {
        IfsArity::Zero => got == 0,
        IfsArity::One => got == 1,
        IfsArity::Two => got == 2,
        IfsArity::List => true,
    };
    if !ok {
        return Err(Error::ArityMismatch {
            id: id.name(),
            expected: expected_arity(id),
            got,
        });
    }
    for a in &bundle.ifs {
        if a.carrier_size() != bundle.groupoid.carrier_size() {
            return Err(Error::SizeMismatch {
                expected: bundle.groupoid.carrier_size(),
                got: a.carrier_size(),
            });
        }
    }
    Ok(())
}

/// Checks hypotheses, then the conclusion. The conclusion is evaluated only
/// when every hypothesis holds.
pub fn verify(id: TheoremId, bundle: &InstanceBundle) -> Result<TheoremVerdict> {
    let facts = StructuralFacts::compute(&bundle.groupoid);
    verify_with_facts(id, bundle, &facts, false)
}

/// `verify` against precomputed structural facts; `relax` evaluates the
/// conclusion even under failed hypotheses (hunting mode).
pub fn verify_with_facts(
    id: TheoremId,
    bundle: &InstanceBundle,
    facts: &StructuralFacts,
    relax: bool,
) -> Result<TheoremVerdict> {
    check_bundle(id, bundle)?;
    let g = &bundle.groupoid;
    let hypotheses = hypotheses_for(id, facts, g, bundle)?;
    let evaluate = relax || hypotheses.iter().all(|h| h.holds);
    let conclusion = if evaluate {
        Some(conclusion_for(id, g, bundle)?)
    } else {
        None
    };
    Ok(TheoremVerdict {
        id,
        hypotheses,
        conclusion,
    })
}

/// Standalone semilattice check. Errs with `HypothesisFailed` when the
/// structural or role hypotheses do not hold.
pub fn semilattice_check(g: &GammaGroupoid, ideals: &[Ifs]) -> Result<TheoremVerdict> {
    let bundle = InstanceBundle {
        groupoid: g.clone(),
        ifs: ideals.to_vec(),
        alpha_grid: Vec::new(),
    };
    let verdict = verify(TheoremId::Semilattice, &bundle)?;
    if !verdict.hypotheses_hold() {
        let detail: Vec<String> = verdict
            .hypotheses
            .iter()
            .filter(|h| !h.holds)
            .map(|h| match &h.detail {
                Some(d) => format!("{} ({})", h.name, d),
                None => h.name.clone(),
            })
            .collect();
        return Err(Error::HypothesisFailed {
            detail: detail.join("; "),
        });
    }
    Ok(verdict)
}

pub const ENUMERATION_CARRIER_BOUND: usize = 4;

/// Backtracking enumerator over all `g`-operation tables on `n` elements
/// satisfying `required_laws`, in lexicographic table order.
///
/// Prunes on left-invertive violations among already-filled entries whenever
/// that law is required; all required laws are re-checked on each complete
/// table before it is emitted.
pub struct GroupoidEnumerator {
    n: usize,
    gamma: usize,
    required: Vec<LawId>,
    prune_li: bool,
    cells: Vec<Option<usize>>,
    cursor: Vec<usize>,
    pos: usize,
    emitted: usize,
    limit: usize,
    done: bool,
}

pub fn enumerate_groupoids(
    n: usize,
    gamma: usize,
    required_laws: &[LawId],
    limit: usize,
) -> Result<GroupoidEnumerator> {
    if n == 0 || gamma == 0 {
        return Err(Error::WrongShape {
            detail: "carrier size and gamma count must both be at least 1".to_string(),
        });
    }
    if n > ENUMERATION_CARRIER_BOUND {
        return Err(Error::CarrierTooLarge {
            n,
            bound: ENUMERATION_CARRIER_BOUND,
        });
    }
    let total = gamma * n * n;
    Ok(GroupoidEnumerator {
        n,
        gamma,
        required: required_laws.to_vec(),
        prune_li: required_laws.contains(&LawId::LeftInvertive),
        cells: vec![None; total],
        cursor: vec![0; total],
        pos: 0,
        emitted: 0,
        limit,
        done: false,
    })
}

impl GroupoidEnumerator {
    #[inline]
    fn cell(&self, op: usize, x: usize, y: usize) -> Option<usize> {
        self.cells[(op * self.n + x) * self.n + y]
    }

    /// No fully-determined left-invertive instance is violated.
    fn partial_consistent(&self) -> bool {
        for op1 in 0..self.gamma {
            for op2 in 0..self.gamma {
                for x in 0..self.n {
                    for y in 0..self.n {
                        let Some(xy) = self.cell(op1, x, y) else { continue };
                        for z in 0..self.n {
                            let Some(lhs) = self.cell(op2, xy, z) else { continue };
                            let Some(zy) = self.cell(op1, z, y) else { continue };
                            let Some(rhs) = self.cell(op2, zy, x) else { continue };
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn build(&self) -> GammaGroupoid {
        let tables: Vec<Vec<Vec<usize>>> = (0..self.gamma)
            .map(|op| {
                (0..self.n)
                    .map(|x| {
                        (0..self.n)
                            .map(|y| self.cell(op, x, y).expect("complete assignment"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        validate_groupoid(self.n, self.gamma, &tables).expect("enumerated entries are in range")
    }

    /// Pop to the deepest cell with an untried sibling value.
    fn step_back(&mut self) -> bool {
        while self.pos > 0 {
            self.pos -= 1;
            self.cells[self.pos] = None;
            self.cursor[self.pos] += 1;
            if self.cursor[self.pos] < self.n {
                return true;
            }
        }
        false
    }
}

impl Iterator for GroupoidEnumerator {
    type Item = GammaGroupoid;

    fn next(&mut self) -> Option<GammaGroupoid> {
        if self.done || self.emitted >= self.limit {
            return None;
        }
        loop {
            if self.pos == self.cells.len() {
                let candidate = self.build();
                if !self.step_back() {
                    self.done = true;
                }
                if self
                    .required
                    .iter()
                    .all(|&law| check_law(&candidate, law).holds)
                {
                    self.emitted += 1;
                    return Some(candidate);
                }
                if self.done {
                    return None;
                }
                continue;
            }
            let mut placed = false;
            while self.cursor[self.pos] < self.n {
                self.cells[self.pos] = Some(self.cursor[self.pos]);
                if !self.prune_li || self.partial_consistent() {
                    placed = true;
                    break;
                }
                self.cursor[self.pos] += 1;
            }
            if placed {
                self.pos += 1;
                if self.pos < self.cells.len() {
                    self.cursor[self.pos] = 0;
                }
            } else {
                self.cells[self.pos] = None;
                if !self.step_back() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// Where `hunt` draws its groupoids from.
#[derive(Clone, Debug)]
pub enum GroupoidSource {
    Fixed(GammaGroupoid),
    /// All tables on `n` elements with `gamma` operations that satisfy the
    /// theorem's structural law hypotheses, cycled per sample.
    Enumerated { n: usize, gamma: usize },
    /// Uniform random tables filtered by the structural law hypotheses.
    Random { n: usize, gamma: usize },
}

#[derive(Clone, Debug)]
pub struct HuntConfig {
    pub source: GroupoidSource,
    pub denominator: u32,
    pub samples: u64,
    pub seed: u64,
    pub relax_hypotheses: bool,
}

#[derive(Clone, Debug)]
pub struct HuntCounterexample {
    pub sample_index: u64,
    pub bundle: InstanceBundle,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug)]
pub struct HuntReport {
    pub id: TheoremId,
    pub tried: u64,
    pub hypotheses_held: u64,
    pub relaxed: bool,
    pub counterexample: Option<HuntCounterexample>,
}

fn random_table_groupoid(n: usize, gamma: usize, rng: &mut ChaCha8Rng) -> GammaGroupoid {
    let tables: Vec<Vec<Vec<usize>>> = (0..gamma)
        .map(|_| {
            (0..n)
                .map(|_| (0..n).map(|_| (rng.next_u64() % n as u64) as usize).collect())
                .collect()
        })
        .collect();
    validate_groupoid(n, gamma, &tables).expect("entries sampled in range")
}

fn structural_laws_pass(id: TheoremId, facts: &StructuralFacts, relax: bool) -> bool {
    if !facts.left_invertive.holds {
        return false;
    }
    if relax {
        return true;
    }
    if id.needs_ag_star_star() && !facts.ag_star_star.holds {
        return false;
    }
    if id.needs_intra_regular() && !facts.intra.regular() {
        return false;
    }
    true
}

const RANDOM_TABLE_TRIES: u64 = 5_000;

/// Randomized/exhaustive counterexample search. Deterministic for a fixed
/// config: sample `k` draws its IFS inputs from seeds derived from
/// `(seed, k)`, and the first counterexample by sample index is reported.
pub fn hunt(id: TheoremId, config: &HuntConfig) -> Result<HuntReport> {
    assert!(config.samples >= 1, "budget must be at least 1");
    let relax = config.relax_hypotheses;

    // Fixed and enumerated supplies share precomputed structural facts.
    let supply: Vec<(GammaGroupoid, StructuralFacts)> = match &config.source {
        GroupoidSource::Fixed(g) => {
            let facts = StructuralFacts::compute(g);
            vec![(g.clone(), facts)]
        }
        GroupoidSource::Enumerated { n, gamma } => {
            let mut laws = vec![LawId::LeftInvertive];
            if !relax && id.needs_ag_star_star() {
                laws.push(LawId::AgStarStar);
            }
            enumerate_groupoids(*n, *gamma, &laws, usize::MAX)?
                .map(|g| {
                    let facts = StructuralFacts::compute(&g);
                    (g, facts)
                })
                .filter(|(_, facts)| relax || !id.needs_intra_regular() || facts.intra.regular())
                .collect()
        }
        GroupoidSource::Random { .. } => Vec::new(),
    };

    let mut report = HuntReport {
        id,
        tried: 0,
        hypotheses_held: 0,
        relaxed: relax,
        counterexample: None,
    };

    for k in 0..config.samples {
        let instance = match &config.source {
            GroupoidSource::Random { n, gamma } => {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, k, 0xA11CE));
                let mut found = None;
                for _ in 0..RANDOM_TABLE_TRIES {
                    let g = random_table_groupoid(*n, *gamma, &mut rng);
                    let facts = StructuralFacts::compute(&g);
                    if structural_laws_pass(id, &facts, relax) {
                        found = Some((g, facts));
                        break;
                    }
                }
                found
            }
            _ => {
                if supply.is_empty() {
                    None
                } else {
                    let (g, facts) = &supply[(k % supply.len() as u64) as usize];
                    Some((g.clone(), facts.clone()))
                }
            }
        };
        report.tried += 1;
        let Some((g, facts)) = instance else { continue };

        let n = g.carrier_size();
        let ifs_count = match id.ifs_arity() {
            IfsArity::Zero => 0,
            IfsArity::One => 1,
            IfsArity::Two => 2,
            IfsArity::List => 3,
        };
        let ifs: Vec<Ifs> = (0..ifs_count)
            .map(|slot| random_ifs(n, config.denominator, derive_seed(config.seed, k, slot as u64)))
            .collect();
        let alpha_grid: Vec<Grade> = (1..=config.denominator)
            .map(|p| Grade::new(p, config.denominator).expect("p <= D"))
            .collect();
        let bundle = InstanceBundle {
            groupoid: g,
            ifs,
            alpha_grid,
        };
        let verdict = verify_with_facts(id, &bundle, &facts, relax)?;
        if verdict.hypotheses_hold() {
            report.hypotheses_held += 1;
        }
        let found_counterexample = if relax {
            verdict.conclusion.as_ref().is_some_and(|c| !c.holds)
        } else {
            verdict.is_counterexample()
        };
        if found_counterexample {
            report.counterexample = Some(HuntCounterexample {
                sample_index: k,
                bundle,
                verdict,
            });
            break;
        }
    }
    Ok(report)
}
