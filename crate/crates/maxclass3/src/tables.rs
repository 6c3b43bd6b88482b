//! Order-3 coset table and essential-candidate table, computed by the engine
//! and laid out with checkmarks.

use std::fmt::Write;

use maxclass3_core::fusion::{essential_candidates, order3_coset_table};
use maxclass3_core::structure::SubgroupKind;
use maxclass3_core::{Group, GroupParams, Result};
use serde::{Deserialize, Serialize};

const MARK: &str = "\u{2713}";

/// Row order of the printed coset table.
const ROW_ORDER: [(u8, u8, u8); 7] =
    [(0, 0, 0), (0, 1, 0), (0, 2, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1), (1, 0, 2)];

fn row_rank(p: &GroupParams) -> usize {
    ROW_ORDER.iter().position(|t| *t == p.triple()).unwrap_or(ROW_ORDER.len())
}

fn ordered(r: usize) -> Result<Vec<GroupParams>> {
    let mut ps: Vec<GroupParams> = GroupParams::canonical(r)?.collect();
    ps.sort_by_key(row_rank);
    Ok(ps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRow {
    pub group: String,
    /// Order 3 for `s`, `s s1`, `s s1^2`.
    pub order3: [bool; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRow {
    pub group: String,
    /// `E0 E1 E2 V0 V1 V2`.
    pub candidates: [bool; 6],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub even_rank: usize,
    pub odd_rank: usize,
    pub even: Vec<CosetRow>,
    pub odd: Vec<CosetRow>,
    pub candidates: Vec<CandidateRow>,
}

/// Computes both tables at the given ranks (one even, one odd).
pub fn compute(even_rank: usize, odd_rank: usize) -> Result<Tables> {
    let rows = |r: usize| -> Result<Vec<CosetRow>> {
        ordered(r)?
            .into_iter()
            .map(|p| {
                let row = order3_coset_table(&Group::new(p)?)?;
                Ok(CosetRow { group: p.to_string(), order3: row.order3 })
            })
            .collect()
    };
    let mut candidates = Vec::new();
    for r in [even_rank, odd_rank] {
        for p in ordered(r)?.into_iter().filter(|p| p.beta == 1) {
            let mut marks = [false; 6];
            for h in essential_candidates(&Group::new(p)?)? {
                match h.kind() {
                    SubgroupKind::E(d) => marks[d as usize] = true,
                    SubgroupKind::V(d) => marks[3 + d as usize] = true,
                    _ => {}
                }
            }
            candidates.push(CandidateRow { group: p.to_string(), candidates: marks });
        }
    }
    Ok(Tables { even_rank, odd_rank, even: rows(even_rank)?, odd: rows(odd_rank)?, candidates })
}

fn mark(b: bool) -> &'static str {
    if b {
        MARK
    } else {
        " "
    }
}

fn coset_cells(row: Option<&CosetRow>) -> String {
    match row {
        Some(row) => format!(
            "{:<12} {:^6} {:^6} {:^6}",
            row.group,
            mark(row.order3[0]),
            mark(row.order3[1]),
            mark(row.order3[2])
        ),
        None => format!("{:<12} {:^6} {:^6} {:^6}", "", "", "", ""),
    }
}

/// Text layout: even-rank rows beside odd-rank rows, then the candidates.
pub fn render(t: &Tables) -> String {
    let mut out = String::new();
    let head = format!("{:<12} {:^6} {:^6} {:^6}", "S", "s", "ss1", "ss1^2");
    let _ = writeln!(out, "Elements of order 3 in the cosets s s1^d gamma(2)");
    let _ = writeln!(out, "{head} | {head}");
    for i in 0..t.even.len().max(t.odd.len()) {
        let _ = writeln!(out, "{} | {}", coset_cells(t.even.get(i)), coset_cells(t.odd.get(i)));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "Candidate essential subgroups (beta = 1)");
    let _ = writeln!(out, "{:<12} {:^4}{:^4}{:^4}{:^4}{:^4}{:^4}", "S", "E0", "E1", "E2", "V0", "V1", "V2");
    for row in &t.candidates {
        let _ = write!(out, "{:<12} ", row.group);
        for b in row.candidates {
            let _ = write!(out, "{:^4}", mark(b));
        }
        let _ = writeln!(out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ranks() {
        let t = compute(6, 5).unwrap();
        assert_eq!((t.even.len(), t.odd.len(), t.candidates.len()), (7, 6, 6));
        let text = render(&t);
        assert!(text.contains("B(6;1,0,2)"));
        let row = text.lines().find(|l| l.starts_with("B(6;1,0,2)") && l.contains('|')).unwrap();
        let left = row.split('|').next().unwrap();
        assert_eq!(left.matches(MARK).count(), 2);
        assert_eq!(t.even[0].group, "B(6;0,0,0)");
        assert_eq!(t.odd[2].group, "B(5;0,0,1)");
    }
}
