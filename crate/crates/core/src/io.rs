//! JSON file formats.
//!
//! * group: `{"order": n, "table": [[…]]}`, or a semidirect product
//!   `{"normal": EXPR, "complement": EXPR, "action": [[…], …]}` where
//!   `action[h]` lists the images of the normal subgroup's elements under `h`;
//! * representation: `{"dim": d, "images": {"id": [[[re_num, re_den, im_num, im_den], …], …]}, "unitary": bool}`,
//!   where the images may cover the whole group or just a generating set;
//! * flow: `{"size": m, "table": [[…]]}`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_complex::Complex;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flows::{validate_flow, SuccessorFlow};
use crate::group::{is_abelian, is_cyclic, invariant_factors, make_semidirect, AssocCheck, ElementId, GroupTable};
use crate::linalg::Matrix;
use crate::spectral::MatrixRep;
use crate::{GaussRational, KernelBasis, Rational};

/// Serializes a rational as `"p/q"`, or `"p"` for integers.
pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Table { order: usize, table: Vec<Vec<usize>> },
    Semidirect { normal: String, complement: String, action: Vec<Vec<usize>> },
}

/// Loads a group file, building semidirect operands under `cap`.
pub fn load_group_file(path: &Path, cap: usize) -> Result<GroupTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_json(&text, &path.display().to_string(), cap)
}

pub fn parse_group_json(text: &str, source: &str, cap: usize) -> Result<GroupTable> {
    match serde_json::from_str::<GroupFile>(text)? {
        GroupFile::Table { order, table } => {
            if table.len() != order {
                return Err(Error::LengthMismatch { expected: order, got: table.len() });
            }
            if order > cap {
                return Err(Error::SizeLimit { order, cap });
            }
            GroupTable::from_cayley_table_with_source(&table, source)
        }
        GroupFile::Semidirect { normal, complement, action } => {
            let n = crate::expr::build_group(&normal, cap)?;
            let h = crate::expr::build_group(&complement, cap)?;
            let order = n.order() * h.order();
            if order > cap {
                return Err(Error::SizeLimit { order, cap });
            }
            let action: Vec<Vec<ElementId>> =
                action.iter().map(|p| p.iter().map(|&x| ElementId::from(x)).collect()).collect();
            make_semidirect(&n, &h, &action)
        }
    }
}

#[derive(Debug, Serialize)]
struct SavedGroup<'a> {
    recipe: String,
    order: usize,
    table: &'a [Vec<u32>],
}

pub fn group_to_json(g: &GroupTable) -> String {
    let rows = g.rows();
    let saved = SavedGroup { recipe: g.recipe().to_string(), order: g.order(), table: &rows };
    serde_json::to_string(&saved).expect("serializable")
}

pub fn save_group(g: &GroupTable, path: &Path) -> Result<()> {
    fs::write(path, group_to_json(g) + "\n")?;
    Ok(())
}

/// What `group` prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub recipe: String,
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<usize>>,
    pub associativity: &'static str,
}

impl GroupSummary {
    pub fn of(g: &GroupTable) -> Self {
        let abelian = is_abelian(g);
        GroupSummary {
            recipe: g.recipe().to_string(),
            order: g.order(),
            abelian,
            cyclic: is_cyclic(g),
            invariant_factors: if abelian { invariant_factors(g).ok() } else { None },
            associativity: match g.assoc_check() {
                AssocCheck::Exhaustive => "exhaustive",
                AssocCheck::Sampled => "sampled",
            },
        }
    }
}

#[derive(Debug, Deserialize)]
struct RepFile {
    dim: usize,
    images: BTreeMap<String, Vec<Vec<[i64; 4]>>>,
    #[serde(default)]
    unitary: bool,
}

fn gauss_entry(e: [i64; 4]) -> Result<GaussRational> {
    let [rn, rd, im_n, im_d] = e;
    if rd == 0 || im_d == 0 {
        return Err(Error::Json("zero denominator in representation entry".into()));
    }
    Ok(Complex::new(
        Rational::new(BigInt::from(rn), BigInt::from(rd)),
        Rational::new(BigInt::from(im_n), BigInt::from(im_d)),
    ))
}

/// Parses a representation file against `g`. Images for every element are
/// validated directly; otherwise the listed elements are treated as
/// generators and the images are extended to the whole group.
pub fn parse_rep_json(text: &str, g: &GroupTable) -> Result<MatrixRep> {
    let file: RepFile = serde_json::from_str(text)?;
    let mut given = Vec::with_capacity(file.images.len());
    for (key, rows) in file.images {
        let id: usize = key.parse().map_err(|_| Error::Json(format!("bad element id {key:?}")))?;
        if id >= g.order() {
            return Err(Error::Json(format!("element id {id} out of range")));
        }
        if rows.len() != file.dim || rows.iter().any(|r| r.len() != file.dim) {
            return Err(Error::DimensionMismatch(format!("image of {id} is not {0}x{0}", file.dim)));
        }
        let m = rows.into_iter().map(|r| r.into_iter().map(gauss_entry).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        given.push((ElementId::from(id), Matrix::from_rows(m)));
    }
    if given.len() == g.order() {
        let images = given.into_iter().map(|(_, m)| m).collect();
        MatrixRep::new(g, file.dim, images, file.unitary)
    } else {
        MatrixRep::from_generators(g, file.dim, &given, file.unitary)
    }
}

pub fn load_rep_file(path: &Path, g: &GroupTable) -> Result<MatrixRep> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_rep_json(&text, g)
}

fn rational_quad(z: &GaussRational) -> [String; 4] {
    [z.re.numer().to_string(), z.re.denom().to_string(), z.im.numer().to_string(), z.im.denom().to_string()]
}

/// Writes every image in the representation file format. Entries are
/// strings when they might not fit in 64 bits.
pub fn rep_to_json(rep: &MatrixRep) -> serde_json::Value {
    let images: BTreeMap<String, Vec<Vec<[serde_json::Value; 4]>>> = rep
        .images
        .iter()
        .enumerate()
        .map(|(x, m)| {
            let rows = m
                .row_iter()
                .map(|r| {
                    r.iter()
                        .map(|z| {
                            rational_quad(z).map(|s| {
                                s.parse::<i64>().map(serde_json::Value::from).unwrap_or(serde_json::Value::String(s))
                            })
                        })
                        .collect()
                })
                .collect();
            (x.to_string(), rows)
        })
        .collect();
    serde_json::json!({ "dim": rep.dim, "images": images, "unitary": rep.declared_unitary })
}

#[derive(Debug, Deserialize)]
struct FlowFile {
    size: usize,
    table: Vec<Vec<usize>>,
}

pub fn parse_flow_json(text: &str) -> Result<SuccessorFlow> {
    let file: FlowFile = serde_json::from_str(text)?;
    if file.table.len() != file.size {
        return Err(Error::LengthMismatch { expected: file.size, got: file.table.len() });
    }
    validate_flow(&file.table)
}

pub fn load_flow_file(path: &Path) -> Result<SuccessorFlow> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_flow_json(&text)
}

pub fn flow_to_json(flow: &SuccessorFlow) -> String {
    serde_json::json!({ "size": flow.size(), "table": flow.table() }).to_string()
}

/// Kernel basis as lists of rational strings.
pub fn kernel_to_json(k: &KernelBasis) -> serde_json::Value {
    let vectors: Vec<Vec<String>> = k.vectors.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
    serde_json::json!({ "dim": k.dim(), "vectors": vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_dicyclic, DEFAULT_MAX_ORDER};
    use crate::spectral::q8_irrep;

    #[test]
    fn group_round_trip() {
        let g = make_dicyclic(3).unwrap();
        let text = group_to_json(&g);
        let back = parse_group_json(&text, "mem", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.recipe().to_string(), "table:mem");
    }

    #[test]
    fn semidirect_file() {
        let text = r#"{"normal": "C3", "complement": "C2", "action": [[0,1,2],[0,2,1]]}"#;
        let g = parse_group_json(text, "mem", 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!is_abelian(&g));
        let bad = r#"{"normal": "C3", "complement": "C2", "action": [[0,1,2],[1,0,2]]}"#;
        assert!(matches!(parse_group_json(bad, "mem", 100), Err(Error::ActionNotAutomorphism { .. })));
    }

    #[test]
    fn rep_round_trip() {
        let q8 = make_dicyclic(2).unwrap();
        let rho = q8_irrep(&q8).unwrap();
        let text = rep_to_json(&rho).to_string();
        assert_eq!(parse_rep_json(&text, &q8).unwrap(), rho);
        let gens = r#"{"dim": 2, "images": {
            "1": [[[0,1,1,1],[0,1,0,1]],[[0,1,0,1],[0,1,-1,1]]],
            "4": [[[0,1,0,1],[-1,1,0,1]],[[1,1,0,1],[0,1,0,1]]]}, "unitary": true}"#;
        assert_eq!(parse_rep_json(gens, &q8).unwrap(), rho);
    }

    #[test]
    fn flow_files() {
        let f = parse_flow_json(r#"{"size": 3, "table": [[0,0,0],[1,1,1],[2,2,2]]}"#).unwrap();
        assert_eq!(f.size(), 3);
        assert_eq!(parse_flow_json(&flow_to_json(&f)).unwrap(), f);
        assert_eq!(
            parse_flow_json(r#"{"size": 2, "table": [[0,1],[0,1]]}"#),
            Err(Error::FlowReflexivity { a: 0, b: 1 })
        );
    }
}
