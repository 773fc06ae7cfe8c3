//! Named access to the bundled fixtures, for `fixtures list|dump` and for
//! using fixture names wherever a document path is expected.

use gamma_ag::{fixtures, GammaGroupoid, Ifs};

use crate::docs::{to_json, GroupoidDocument, IfsDocument};

pub const GROUPOID_FIXTURES: [(&str, &str); 4] = [
    ("F1", "9-element band, left invertive and medial"),
    ("F1-gamma", "two-operation power derivation of F1"),
    ("F2", "5-element intra-regular AG** structure"),
    ("F3", "5-element structure that is not intra-regular"),
];

pub const IFS_FIXTURES: [(&str, &str); 4] = [
    ("A-ex", "mu=(1,0,0,0,0), nu=(0.3,0.4,0.2,0.2,0.2) on the F2 carrier"),
    ("A-cut", "mu=(0.4,0.8,0,0,0), nu=(0.4,0.3,0.9,0.9,1) on the F2 carrier"),
    ("A-fgh", "mu=(0.3,0.3,0.3,0.1,0.4), nu=(0.2,0.3,0.4,0.5,0.2) on the F3 carrier"),
    ("B-fgh", "mu=(0.5,0.5,0.5,0.4,0.6), nu=(0.3,0.4,0.5,0.6,0.3) on the F3 carrier"),
];

pub fn groupoid(name: &str) -> Option<GammaGroupoid> {
    match name {
        "F1" => Some(fixtures::f1()),
        "F1-gamma" => Some(fixtures::f1_gamma()),
        "F2" => Some(fixtures::f2()),
        "F3" => Some(fixtures::f3()),
        _ => None,
    }
}

pub fn ifs(name: &str) -> Option<Ifs> {
    match name {
        "A-ex" => Some(fixtures::a_ex()),
        "A-cut" => Some(fixtures::a_cut()),
        "A-fgh" => Some(fixtures::a_fgh()),
        "B-fgh" => Some(fixtures::b_fgh()),
        _ => None,
    }
}

/// Serialized document for `fixtures dump`.
pub fn dump(name: &str) -> Option<String> {
    if let Some(g) = groupoid(name) {
        return Some(to_json(&GroupoidDocument::from_groupoid(&g)));
    }
    ifs(name).map(|a| to_json(&IfsDocument::from_ifs(&a)))
}
