//! Serializable views of engine results. Elements and maps are carried as
//! their printed forms, which the word parser reads back.

use maxclass3_core::fusion::ClassificationReport;
use maxclass3_core::structure::Subgroup;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetEntry {
    /// `s s1^d gamma_2(S)`, written `s*s1^d`.
    pub coset: String,
    pub order3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub case: String,
    pub essential_classes: Vec<String>,
    pub aut_on_essential: String,
    pub out_s_order: u32,
    pub reduced: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Proof {
    Subgroup {
        name: String,
        elements: Vec<String>,
    },
    Inverting {
        target: String,
        theta: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        theta_order: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        involution: Option<String>,
    },
    CosetSwap {
        holds: bool,
        maps_checked: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counterexample: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub group: String,
    pub outcome: String,
    pub table1: Vec<CosetEntry>,
    pub candidates: Vec<String>,
    pub gamma1_essential_possible: bool,
    pub valid_triples: Vec<(u8, u8, u8)>,
    pub out_f_s_order: u32,
    pub verdicts: Vec<VerdictDoc>,
    pub proofs: Vec<Proof>,
}

pub fn coset_name(d: u8) -> &'static str {
    ["s", "s*s1", "s*s1^2"][d as usize]
}

pub fn table1_entries(profile: &[bool; 3]) -> Vec<CosetEntry> {
    (0..3u8)
        .map(|d| CosetEntry { coset: coset_name(d).to_string(), order3: profile[d as usize] })
        .collect()
}

fn subgroup_proof(h: &Subgroup) -> Proof {
    Proof::Subgroup {
        name: h.to_string(),
        elements: h.elements().iter().map(ToString::to_string).collect(),
    }
}

impl From<&ClassificationReport> for ClassifyDoc {
    fn from(rep: &ClassificationReport) -> Self {
        let mut proofs: Vec<Proof> = rep.candidates.iter().map(subgroup_proof).collect();
        for (d, witness) in &rep.inverting {
            proofs.push(Proof::Inverting {
                target: format!("V({d})"),
                theta: witness.as_ref().map(|w| w.theta.to_string()),
                theta_order: witness.as_ref().map(|w| w.theta_order),
                involution: witness.as_ref().map(|w| w.involution.to_string()),
            });
        }
        if let Some(swap) = &rep.coset_swap {
            proofs.push(Proof::CosetSwap {
                holds: swap.holds,
                maps_checked: swap.maps_checked,
                counterexample: swap.counterexample.map(|m| m.to_string()),
            });
        }
        ClassifyDoc {
            group: rep.params.to_string(),
            outcome: rep.outcome.to_string(),
            table1: table1_entries(&rep.order3_profile),
            candidates: rep.candidates.iter().map(ToString::to_string).collect(),
            gamma1_essential_possible: rep.gamma1_essential_possible,
            valid_triples: rep.valid_triples.clone(),
            out_f_s_order: rep.out_f_s_order,
            verdicts: rep
                .fusion_systems
                .iter()
                .map(|v| VerdictDoc {
                    case: v.case.to_string(),
                    essential_classes: v.essential_classes.iter().map(ToString::to_string).collect(),
                    aut_on_essential: v.aut_on_essential.to_string(),
                    out_s_order: v.out_s_order,
                    reduced: v.reduced,
                    notes: v.notes.clone(),
                })
                .collect(),
            proofs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Two independent computations of the same fact disagree.
    Inconsistent,
}

/// One verification outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimDoc {
    pub suite: String,
    pub group: String,
    pub claim: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub passed: bool,
    pub claims: usize,
    pub results: Vec<ClaimDoc>,
    pub failures: Vec<ClaimDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_element, parse_theta};
    use maxclass3_core::fusion::classify;
    use maxclass3_core::{Group, GroupParams};

    #[test]
    fn classify_doc_round_trips() {
        for (r, b, c, d) in [(6, 1, 0, 2), (5, 1, 0, 2), (5, 0, 0, 0), (7, 1, 0, 0)] {
            let g = Group::new(GroupParams::new(r, b, c, d).unwrap()).unwrap();
            let doc = ClassifyDoc::from(&classify(&g).unwrap());
            let text = serde_json::to_string_pretty(&doc).unwrap();
            let back: ClassifyDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            for proof in &back.proofs {
                match proof {
                    Proof::Subgroup { elements, .. } => {
                        for e in elements {
                            assert_eq!(&parse_element(&g, e).unwrap().to_string(), e);
                        }
                    }
                    Proof::Inverting { theta: Some(t), involution, .. } => {
                        assert_eq!(&parse_theta(&g, t).unwrap().to_string(), t);
                        let inv = involution.as_ref().unwrap();
                        assert_eq!(&parse_theta(&g, inv).unwrap().to_string(), inv);
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn shape_has_required_keys() {
        let g = Group::new(GroupParams::new(6, 1, 0, 2).unwrap()).unwrap();
        let value = serde_json::to_value(ClassifyDoc::from(&classify(&g).unwrap())).unwrap();
        for key in ["group", "table1", "candidates", "verdicts", "proofs"] {
            assert!(value.get(key).is_some(), "{key}");
        }
        assert_eq!(value["group"], "B(6;1,0,2)");
        assert_eq!(value["verdicts"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn claim_doc_omits_empty_witness() {
        let c = ClaimDoc {
            suite: "core".into(),
            group: "B(5;1,0,0)".into(),
            claim: "x".into(),
            status: Status::Pass,
            witness: None,
        };
        let text = serde_json::to_string(&c).unwrap();
        assert!(!text.contains("witness"));
        assert_eq!(serde_json::from_str::<ClaimDoc>(&text).unwrap(), c);
    }
}
