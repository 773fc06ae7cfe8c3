//! The on-disk document formats and their conversions to core values.
//!
//! Documents are 1-based everywhere: table entries, element indexes in
//! witnesses, Γ indexes. Grades serialize as reduced `p/q` strings; decimal
//! input is accepted and parsed exactly. Field order is part of the format
//! (golden tests compare serialized verdicts byte for byte).

use serde::{Deserialize, Serialize};

use gamma_ag::{
    validate_groupoid, Conclusion, ConclusionPart, CrispSubset, CrispVerdict, DuoVerdict, Element,
    GammaGroupoid, Grade, HuntReport, Ifs, IfsVerdict, IfsWitness, IntraRegularityReport,
    LawReport, TheoremVerdict,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Core(#[from] gamma_ag::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type CliResult<T> = Result<T, CliError>;

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// A structure as nested 1-based tables, one per Γ-index.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupoidDocument {
    pub n: usize,
    pub gamma: usize,
    pub tables: Vec<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

impl GroupoidDocument {
    pub fn from_groupoid(g: &GammaGroupoid) -> GroupoidDocument {
        let tables = (0..g.gamma_count())
            .map(|op| {
                g.table_rows(gamma_ag::GammaIndex(op))
                    .into_iter()
                    .map(|row| row.into_iter().map(|e| e + 1).collect())
                    .collect()
            })
            .collect();
        GroupoidDocument {
            n: g.carrier_size(),
            gamma: g.gamma_count(),
            tables,
            labels: g.labels().map(|ls| ls.to_vec()),
        }
    }

    /// Shape errors are parse errors naming the offending table/row; range
    /// errors surface from the core validator after the 1-based shift.
    pub fn to_groupoid(&self) -> CliResult<GammaGroupoid> {
        if self.tables.len() != self.gamma {
            return Err(parse_err(
                "tables",
                format!("expected {} tables, found {}", self.gamma, self.tables.len()),
            ));
        }
        let mut shifted = Vec::with_capacity(self.gamma);
        for (t, table) in self.tables.iter().enumerate() {
            if table.len() != self.n {
                return Err(parse_err(
                    format!("tables[{t}]"),
                    format!("expected {} rows, found {}", self.n, table.len()),
                ));
            }
            let mut rows = Vec::with_capacity(self.n);
            for (r, row) in table.iter().enumerate() {
                if row.len() != self.n {
                    return Err(parse_err(
                        format!("tables[{t}] row {}", r + 1),
                        format!("expected {} entries, found {}", self.n, row.len()),
                    ));
                }
                let mut out = Vec::with_capacity(self.n);
                for (c, &entry) in row.iter().enumerate() {
                    if entry == 0 {
                        return Err(CliError::Core(gamma_ag::Error::OutOfRange {
                            table: t,
                            row: r,
                            col: c,
                            entry: 0,
                        }));
                    }
                    out.push(entry - 1);
                }
                rows.push(out);
            }
            shifted.push(rows);
        }
        let g = validate_groupoid(self.n, self.gamma, &shifted)?;
        match &self.labels {
            Some(labels) => Ok(g.with_labels(labels.clone())?),
            None => Ok(g),
        }
    }
}

/// Paired grade maps as text: each entry `p/q` or a finite decimal.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IfsDocument {
    pub mu: Vec<String>,
    pub nu: Vec<String>,
}

impl IfsDocument {
    pub fn from_ifs(a: &Ifs) -> IfsDocument {
        IfsDocument {
            mu: a.mu_grades().iter().map(|g| g.to_string()).collect(),
            nu: a.nu_grades().iter().map(|g| g.to_string()).collect(),
        }
    }

    /// Parses both grade lists. Assignments violating `μ + ν ≤ 1` load
    /// through the lenient constructor and return a warning instead of
    /// failing, so published example data with that defect stays checkable.
    pub fn to_ifs(&self) -> CliResult<(Ifs, Option<String>)> {
        if self.mu.len() != self.nu.len() {
            return Err(parse_err(
                "nu",
                format!("mu has {} entries but nu has {}", self.mu.len(), self.nu.len()),
            ));
        }
        let parse_all = |field: &str, texts: &[String]| -> CliResult<Vec<Grade>> {
            texts
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    t.parse::<Grade>()
                        .map_err(|e| parse_err(format!("{field}[{}]", i + 1), e.to_string()))
                })
                .collect()
        };
        let mu = parse_all("mu", &self.mu)?;
        let nu = parse_all("nu", &self.nu)?;
        let ifs = Ifs::new_lenient(mu, nu);
        let warning = if ifs.is_valid() {
            None
        } else {
            let bad: Vec<String> = (0..ifs.carrier_size())
                .map(Element)
                .filter(|&x| !ifs.mu(x).sum_at_most_one(&ifs.nu(x)))
                .map(|x| x.display_index().to_string())
                .collect();
            Some(format!(
                "warning: mu+nu exceeds 1 at element(s) {}; proceeding with the data as given",
                bad.join(",")
            ))
        };
        Ok((ifs, warning))
    }
}

fn elements_doc(elements: &[Element]) -> Vec<usize> {
    elements.iter().map(|e| e.display_index()).collect()
}

fn gammas_doc(gammas: &[gamma_ag::GammaIndex]) -> Vec<usize> {
    gammas.iter().map(|o| o.display_index()).collect()
}

/// Witness payloads, tagged by shape. All indexes 1-based, grades `p/q`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessDocument {
    Law {
        elements: Vec<usize>,
        gammas: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
    Crisp {
        elements: Vec<usize>,
        gammas: Vec<usize>,
        escapee: usize,
    },
    IfsPointwise {
        elements: Vec<usize>,
        gammas: Vec<usize>,
        side: String,
        actual: String,
        bound: String,
    },
    IfsContainment {
        element: usize,
        side: String,
        composed: String,
        bound: String,
    },
    IfsQuasi {
        element: usize,
        side: String,
        a_delta: String,
        delta_a: String,
        bound: String,
    },
    Subset {
        members: Vec<usize>,
    },
    Elements {
        elements: Vec<usize>,
    },
    Text {
        text: String,
    },
}

impl WitnessDocument {
    pub fn from_ifs_witness(w: &IfsWitness) -> WitnessDocument {
        match w {
            IfsWitness::Pointwise {
                elements,
                gammas,
                side,
                actual,
                bound,
            } => WitnessDocument::IfsPointwise {
                elements: elements_doc(elements),
                gammas: gammas_doc(gammas),
                side: side.name().to_string(),
                actual: actual.to_string(),
                bound: bound.to_string(),
            },
            IfsWitness::Containment {
                element,
                side,
                composed,
                bound,
            } => WitnessDocument::IfsContainment {
                element: element.display_index(),
                side: side.name().to_string(),
                composed: composed.to_string(),
                bound: bound.to_string(),
            },
            IfsWitness::Quasi {
                element,
                side,
                a_delta,
                delta_a,
                bound,
            } => WitnessDocument::IfsQuasi {
                element: element.display_index(),
                side: side.name().to_string(),
                a_delta: a_delta.to_string(),
                delta_a: delta_a.to_string(),
                bound: bound.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypothesisDocument {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConclusionPartDocument {
    pub name: String,
    pub outcome: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConclusionDocument {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub parts: Vec<ConclusionPartDocument>,
}

/// The machine-readable verdict emitted under `--json`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerdictDocument {
    pub subject: String,
    pub id: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nonempty: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessDocument>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hypotheses: Option<Vec<HypothesisDocument>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conclusion: Option<ConclusionDocument>,
}

impl VerdictDocument {
    fn bare(subject: &str, id: String, holds: bool) -> VerdictDocument {
        VerdictDocument {
            subject: subject.to_string(),
            id,
            holds,
            nonempty: None,
            witness: None,
            hypotheses: None,
            conclusion: None,
        }
    }

    pub fn from_law(r: &LawReport) -> VerdictDocument {
        let mut doc = VerdictDocument::bare("law", r.law.name().to_string(), r.holds);
        doc.witness = r.witness.as_ref().map(|w| WitnessDocument::Law {
            elements: elements_doc(&w.elements),
            gammas: gammas_doc(&w.gammas),
            lhs: w.lhs.display_index(),
            rhs: w.rhs.display_index(),
        });
        doc
    }

    pub fn from_crisp(v: &CrispVerdict) -> VerdictDocument {
        let mut doc = VerdictDocument::bare("crisp", v.kind.name().to_string(), v.holds);
        doc.nonempty = Some(v.nonempty);
        doc.witness = v.witness.as_ref().map(|w| WitnessDocument::Crisp {
            elements: elements_doc(&w.elements),
            gammas: gammas_doc(&w.gammas),
            escapee: w.escapee.display_index(),
        });
        doc
    }

    pub fn from_ifs(v: &IfsVerdict) -> VerdictDocument {
        let mut doc = VerdictDocument::bare("ifs", v.kind.name().to_string(), v.holds);
        doc.witness = v.witness.as_ref().map(WitnessDocument::from_ifs_witness);
        doc
    }

    pub fn from_intra(r: &IntraRegularityReport) -> VerdictDocument {
        let mut doc = VerdictDocument::bare("intra", "intra-regular".to_string(), r.regular());
        if !r.regular() {
            doc.witness = Some(WitnessDocument::Elements {
                elements: elements_doc(&r.failures),
            });
        }
        doc
    }

    pub fn from_duo(v: &DuoVerdict) -> VerdictDocument {
        let mut doc = VerdictDocument::bare("duo", format!("{}-duo", v.side.name()), v.holds);
        doc.witness = v.witness.as_ref().map(|s| WitnessDocument::Subset {
            members: s.members().map(|e| e.display_index()).collect(),
        });
        doc
    }

    pub fn from_theorem(v: &TheoremVerdict) -> VerdictDocument {
        // a theorem "holds" unless an evaluated conclusion is false
        let holds = !v.conclusion.as_ref().is_some_and(|c| !c.holds);
        let mut doc = VerdictDocument::bare("theorem", v.id.name().to_string(), holds);
        doc.hypotheses = Some(
            v.hypotheses
                .iter()
                .map(|h| HypothesisDocument {
                    name: h.name.clone(),
                    holds: h.holds,
                    detail: h.detail.clone(),
                })
                .collect(),
        );
        doc.conclusion = v.conclusion.as_ref().map(conclusion_doc);
        doc.witness = v
            .conclusion
            .as_ref()
            .and_then(|c| c.witness.clone())
            .map(|text| WitnessDocument::Text { text });
        doc
    }
}

fn conclusion_doc(c: &Conclusion) -> ConclusionDocument {
    ConclusionDocument {
        holds: c.holds,
        witness: c.witness.clone(),
        parts: c.parts.iter().map(part_doc).collect(),
    }
}

fn part_doc(p: &ConclusionPart) -> ConclusionPartDocument {
    ConclusionPartDocument {
        name: p.name.clone(),
        outcome: p.outcome.clone(),
    }
}

/// `levelcut` output.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubsetDocument {
    pub members: Vec<usize>,
}

impl SubsetDocument {
    pub fn from_subset(s: &CrispSubset) -> SubsetDocument {
        SubsetDocument {
            members: s.members().map(|e| e.display_index()).collect(),
        }
    }
}

/// `theorem hunt` output.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct HuntDocument {
    pub id: String,
    pub tried: u64,
    pub hypotheses_held: u64,
    pub relaxed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<CounterexampleDocument>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CounterexampleDocument {
    pub sample_index: u64,
    pub groupoid: GroupoidDocument,
    pub ifs: Vec<IfsDocument>,
    pub verdict: VerdictDocument,
}

impl HuntDocument {
    pub fn from_report(r: &HuntReport) -> HuntDocument {
        HuntDocument {
            id: r.id.name().to_string(),
            tried: r.tried,
            hypotheses_held: r.hypotheses_held,
            relaxed: r.relaxed,
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleDocument {
                sample_index: c.sample_index,
                groupoid: GroupoidDocument::from_groupoid(&c.bundle.groupoid),
                ifs: c.bundle.ifs.iter().map(IfsDocument::from_ifs).collect(),
                verdict: VerdictDocument::from_theorem(&c.verdict),
            }),
        }
    }
}

/// `enumerate` output.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EnumerationDocument {
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub groupoids: Option<Vec<GroupoidDocument>>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}
