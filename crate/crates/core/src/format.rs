//! Canonical JSON and text renderings.
//!
//! JSON output is a single line terminated by LF, with `"kind"` first and the
//! remaining keys in a fixed order. Loaders re-run every validation.

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::construct::{ConstructionSpec, InvolutiveSpec, OrbitChoice};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupOps, Subgroup};
use crate::perm::Permutation;
use crate::solution::{RackTable, Solution};

/// Any object with a file format.
#[derive(Clone, Debug)]
pub enum Document {
    Group(FiniteGroup),
    Brace(SkewBrace),
    Solution(Solution),
    Rack(RackTable),
    Spec(ConstructionSpec),
    InvolutiveSpec(InvolutiveSpec),
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    kind: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct BraceFile {
    kind: String,
    order: usize,
    star: Vec<Vec<usize>>,
    dot: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SolutionFile {
    kind: String,
    size: usize,
    f: Vec<Vec<usize>>,
    g: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RackFile {
    kind: String,
    size: usize,
    circ: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct OrbitEntry {
    rep: usize,
    subgroups: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    kind: String,
    brace: BraceFile,
    orbits: Vec<OrbitEntry>,
}

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

fn fmt_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

fn expect_kind(found: &str, wanted: &str) -> Result<()> {
    if found == wanted {
        Ok(())
    } else {
        Err(Error::Format(format!(
            "expected kind \"{wanted}\", found \"{found}\""
        )))
    }
}

fn expect_len(declared: usize, rows: usize, key: &str) -> Result<()> {
    if declared == rows {
        Ok(())
    } else {
        Err(Error::Format(format!(
            "{key} has {rows} rows but {declared} was declared"
        )))
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("file structs serialize");
    s.push('\n');
    s
}

fn brace_file(b: &SkewBrace) -> BraceFile {
    BraceFile {
        kind: "skew_brace".into(),
        order: b.order(),
        star: b.star().table_rows(),
        dot: b.dot().table_rows(),
    }
}

fn brace_from_file(f: BraceFile) -> Result<SkewBrace> {
    expect_kind(&f.kind, "skew_brace")?;
    expect_len(f.order, f.star.len(), "star")?;
    expect_len(f.order, f.dot.len(), "dot")?;
    SkewBrace::from_tables(&f.star, &f.dot)
}

fn orbit_entries(orbits: &[OrbitChoice]) -> Vec<OrbitEntry> {
    orbits
        .iter()
        .map(|o| OrbitEntry {
            rep: o.rep,
            subgroups: o.subgroups.iter().map(|k| k.elements().to_vec()).collect(),
        })
        .collect()
}

fn orbits_from_entries<G: GroupOps + ?Sized>(
    g: &G,
    entries: Vec<OrbitEntry>,
) -> Result<Vec<OrbitChoice>> {
    entries
        .into_iter()
        .map(|e| {
            let subgroups = e
                .subgroups
                .into_iter()
                .map(|elems| Subgroup::new(g, elems))
                .collect::<Result<_>>()?;
            Ok(OrbitChoice {
                rep: e.rep,
                subgroups,
            })
        })
        .collect()
}

/// Relabel so that the identity sits at 0, by swapping it with element 0.
fn identity_first(rows: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = rows.len();
    let e = (0..n).find(|&e| {
        rows[e].len() == n
            && (0..n).all(|x| rows[e][x] == x && rows.get(x).and_then(|r| r.get(e)) == Some(&x))
    });
    match e {
        Some(e) if e != 0 => {
            let swap = |x: usize| {
                if x == 0 {
                    e
                } else if x == e {
                    0
                } else {
                    x
                }
            };
            (0..n)
                .map(|a| (0..n).map(|b| swap(rows[swap(a)][swap(b)])).collect())
                .collect()
        }
        _ => rows,
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Brace(_) => "skew_brace",
            Document::Solution(_) => "solution",
            Document::Rack(_) => "rack",
            Document::Spec(_) => "construction_spec",
            Document::InvolutiveSpec(_) => "involutive_spec",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Group(g) => to_line(&GroupFile {
                kind: "group".into(),
                order: g.order(),
                table: g.table_rows(),
            }),
            Document::Brace(b) => to_line(&brace_file(b)),
            Document::Solution(s) => to_line(&SolutionFile {
                kind: "solution".into(),
                size: s.size(),
                f: s.f_rows(),
                g: s.g_rows(),
            }),
            Document::Rack(r) => to_line(&RackFile {
                kind: "rack".into(),
                size: r.size(),
                circ: r.rows(),
            }),
            Document::Spec(s) => to_line(&SpecFile {
                kind: "construction_spec".into(),
                brace: brace_file(&s.brace),
                orbits: orbit_entries(&s.orbits),
            }),
            Document::InvolutiveSpec(s) => to_line(&SpecFile {
                kind: "involutive_spec".into(),
                brace: brace_file(&s.brace),
                orbits: orbit_entries(&s.orbits),
            }),
        }
    }

    /// Parse and validate any supported document.
    pub fn from_json(text: &str) -> Result<Self> {
        let kind: KindOnly = serde_json::from_str(text).map_err(fmt_err)?;
        match kind.kind.as_str() {
            "group" => {
                let f: GroupFile = serde_json::from_str(text).map_err(fmt_err)?;
                expect_len(f.order, f.table.len(), "table")?;
                Ok(Document::Group(FiniteGroup::from_table(&identity_first(
                    f.table,
                ))?))
            }
            "skew_brace" => {
                let f: BraceFile = serde_json::from_str(text).map_err(fmt_err)?;
                Ok(Document::Brace(brace_from_file(f)?))
            }
            "solution" => {
                let f: SolutionFile = serde_json::from_str(text).map_err(fmt_err)?;
                expect_len(f.size, f.f.len(), "f")?;
                Ok(Document::Solution(Solution::new(&f.f, &f.g)?))
            }
            "rack" => {
                let f: RackFile = serde_json::from_str(text).map_err(fmt_err)?;
                expect_len(f.size, f.circ.len(), "circ")?;
                let n = f.size;
                if n == 0
                    || f.circ
                        .iter()
                        .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
                {
                    return Err(Error::Format(
                        "rack table is not an n×n table over 0..n".into(),
                    ));
                }
                let rack = RackTable::from_rows(&f.circ);
                if !rack.is_rack() {
                    return Err(Error::Format("table is not a rack".into()));
                }
                Ok(Document::Rack(rack))
            }
            "construction_spec" => {
                let f: SpecFile = serde_json::from_str(text).map_err(fmt_err)?;
                let brace = brace_from_file(f.brace)?;
                let orbits = orbits_from_entries(&brace.semidirect(), f.orbits)?;
                Ok(Document::Spec(ConstructionSpec::new(brace, orbits)?))
            }
            "involutive_spec" => {
                let f: SpecFile = serde_json::from_str(text).map_err(fmt_err)?;
                let brace = brace_from_file(f.brace)?;
                let orbits = orbits_from_entries(brace.dot(), f.orbits)?;
                Ok(Document::InvolutiveSpec(InvolutiveSpec::new(
                    brace, orbits,
                )?))
            }
            other => Err(Error::Format(format!("unknown kind \"{other}\""))),
        }
    }

    /// Human-readable rendering; permutations use 1-based cycle notation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rows = |out: &mut String, label: &str, rows: &[Vec<usize>]| {
            out.push_str(label);
            out.push_str(":\n");
            for r in rows {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                out.push_str("  ");
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        };
        match self {
            Document::Group(g) => {
                out.push_str(&format!("group of order {}\n", g.order()));
                rows(&mut out, "table", &g.table_rows());
            }
            Document::Brace(b) => {
                out.push_str(&format!("skew brace of order {}\n", b.order()));
                rows(&mut out, "star", &b.star().table_rows());
                rows(&mut out, "dot", &b.dot().table_rows());
            }
            Document::Solution(s) => {
                out.push_str(&format!("solution of size {}\n", s.size()));
                for x in 0..s.size() {
                    out.push_str(&format!("f_{} = {}\n", x + 1, perm_text(s.f_row(x))));
                }
                for y in 0..s.size() {
                    out.push_str(&format!("g_{} = {}\n", y + 1, perm_text(s.g_row(y))));
                }
            }
            Document::Rack(r) => {
                out.push_str(&format!("rack of size {}\n", r.size()));
                for (y, row) in r.rows().iter().enumerate() {
                    out.push_str(&format!("{} ∘ - = {}\n", y + 1, perm_text(row)));
                }
            }
            Document::Spec(s) => spec_text(&mut out, "construction spec", &s.brace, &s.orbits),
            Document::InvolutiveSpec(s) => {
                spec_text(&mut out, "involutive spec", &s.brace, &s.orbits)
            }
        }
        out
    }
}

fn perm_text(row: &[usize]) -> String {
    match Permutation::from_images(row.to_vec()) {
        Ok(p) => p.cycle_notation(),
        Err(_) => {
            let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            format!("[{}]", cells.join(" "))
        }
    }
}

fn spec_text(out: &mut String, title: &str, b: &SkewBrace, orbits: &[OrbitChoice]) {
    out.push_str(&format!("{title} over a brace of order {}\n", b.order()));
    for (i, o) in orbits.iter().enumerate() {
        let orders: Vec<String> = o.subgroups.iter().map(|k| k.order().to_string()).collect();
        out.push_str(&format!(
            "orbit {}: rep {}, subgroup orders [{}]\n",
            i + 1,
            o.rep,
            orders.join(", ")
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_involutive;

    fn round_trip(d: Document) {
        let json = d.to_json();
        assert!(json.starts_with(&format!("{{\"kind\":\"{}\"", d.kind())));
        assert!(json.ends_with("}\n") && !json.contains('\r'));
        let back = Document::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn every_kind_round_trips() {
        let v = SkewBrace::vendramin();
        let orbits = [4, 32]
            .iter()
            .map(|&a| OrbitChoice {
                rep: a,
                subgroups: vec![v.lambda_stabilizer(a)],
            })
            .collect();
        let inv = InvolutiveSpec::new(v.clone(), orbits).unwrap();
        let sol = build_involutive(&inv).unwrap().solution;
        round_trip(Document::Group(FiniteGroup::dihedral(4)));
        round_trip(Document::Brace(SkewBrace::order21()));
        round_trip(Document::Solution(sol));
        round_trip(Document::Rack(RackTable::trivial(3)));
        round_trip(Document::Spec(ConstructionSpec::canonical(
            SkewBrace::cyclic_flip(2),
        )));
        round_trip(Document::Spec(inv.lift()));
        round_trip(Document::InvolutiveSpec(inv));
    }

    #[test]
    fn loaders_validate() {
        let bad = "{\"kind\":\"solution\",\"size\":2,\"f\":[[0,0],[1,1]],\"g\":[[0,0],[0,0]]}";
        assert!(matches!(
            Document::from_json(bad),
            Err(Error::NotBijective { .. })
        ));
        let wrong = "{\"kind\":\"tensor\"}";
        assert!(matches!(Document::from_json(wrong), Err(Error::Format(_))));
        let not_rack = "{\"kind\":\"rack\",\"size\":3,\"circ\":[[0,1,2],[1,2,0],[2,0,1]]}";
        assert!(Document::from_json(not_rack).is_err());
        // identity at index 1 is moved to 0
        let g = "{\"kind\":\"group\",\"order\":2,\"table\":[[1,0],[0,1]]}";
        let Document::Group(z2) = Document::from_json(g).unwrap() else {
            panic!("group expected")
        };
        assert_eq!(z2, FiniteGroup::cyclic(2));
    }

    #[test]
    fn solution_text_uses_cycles() {
        let s = Solution::from_fn(4, |_, y| [1, 0, 3, 2][y], |_, x| [3, 2, 1, 0][x]).unwrap();
        let text = Document::Solution(s.clone()).to_text();
        assert!(text.starts_with("solution of size 4\n"));
        for x in 0..4 {
            let f = s.f_perm(x).unwrap().cycle_notation();
            assert!(text.contains(&format!("f_{} = {f}\n", x + 1)));
        }
        assert!(text.contains("f_1 = (1,2)(3,4)"));
        assert!(text.contains("g_4 = (1,4)(2,3)"));
    }
}
