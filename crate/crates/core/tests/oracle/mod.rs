//! Independent oracles for the test suite: raw-table scans that do not go
//! through the library's deciders, so either side can audit the other.

use gamma_ag::{Element, GammaGroupoid, GammaIndex};

/// Raw tables of `g`, one `n×n` matrix per Γ-index, 0-based entries.
pub fn raw_tables(g: &GammaGroupoid) -> Vec<Vec<Vec<usize>>> {
    (0..g.gamma_count())
        .map(|op| g.table_rows(GammaIndex(op)))
        .collect()
}

/// First `(x, y, α, β, γ)` with `(x α (a β a)) γ y = a`, scanning the tuple
/// lexicographically.
#[allow(dead_code)]
pub fn first_intra_witness(
    g: &GammaGroupoid,
    a: Element,
) -> Option<(Element, Element, GammaIndex, GammaIndex, GammaIndex)> {
    let t = raw_tables(g);
    let n = g.carrier_size();
    let gc = g.gamma_count();
    for x in 0..n {
        for y in 0..n {
            for alpha in 0..gc {
                for beta in 0..gc {
                    for gamma in 0..gc {
                        let aa = t[beta][a.index()][a.index()];
                        let inner = t[alpha][x][aa];
                        if t[gamma][inner][y] == a.index() {
                            return Some((
                                Element(x),
                                Element(y),
                                GammaIndex(alpha),
                                GammaIndex(beta),
                                GammaIndex(gamma),
                            ));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Direct left-invertive scan on a raw single-operation table.
#[allow(dead_code)]
pub fn table_is_left_invertive(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[table[z][y]][x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Direct AG** scan on a raw single-operation table.
#[allow(dead_code)]
pub fn table_is_ag_star_star(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[x][table[y][z]] != table[y][table[x][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// All `n×n` single-operation tables, decoded from a base-`n` odometer.
#[allow(dead_code)]
pub fn all_single_tables(n: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |code| {
        let mut k = code;
        let mut rows = vec![vec![0usize; n]; n];
        for row in rows.iter_mut() {
            for cell in row.iter_mut() {
                *cell = k % n;
                k /= n;
            }
        }
        rows
    })
}
