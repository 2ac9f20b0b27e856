use super::{CosetLabel, Layout, OrbitChoice};
use crate::error::{Error, Result};
use crate::group::{core, subgroup_closure, GroupOps, Subgroup};
use crate::solution::RackTable;

/// A rack on `⊔ G/K_{i,j}` with the provenance of each point.
#[derive(Clone, Debug)]
pub struct BuiltRack {
    pub rack: RackTable,
    /// `orbit` indexes `class_reps`, `rep` is the coset representative.
    pub labels: Vec<CosetLabel>,
}

/// The rack `(xK_{i,j}) ∘ (yK') = x g_i⁻¹ x⁻¹ y K'` on `X = ⊔ G/K_{i,j}`,
/// where each `K_{i,j}` centralizes `g_i`, the classes of the `g_i` generate
/// `G`, and the subgroups have trivial joint core. It is a quandle exactly
/// when every `g_i` lies in all of its `K_{i,j}`.
pub fn rack_from_group<G: GroupOps + ?Sized>(
    g: &G,
    class_reps: &[usize],
    families: &[Vec<Subgroup>],
) -> Result<BuiltRack> {
    let order = g.order();
    if class_reps.is_empty() || class_reps.len() != families.len() {
        return Err(Error::SpecInvalid(format!(
            "{} class representatives for {} families",
            class_reps.len(),
            families.len()
        )));
    }
    for (&gi, family) in class_reps.iter().zip(families) {
        if gi >= order {
            return Err(Error::SpecInvalid(format!("element {gi} out of range")));
        }
        if family.is_empty() {
            return Err(Error::SpecInvalid(format!("empty family for {gi}")));
        }
        for k in family {
            if k.parent_order() != order {
                return Err(Error::SpecInvalid("subgroup of another group".into()));
            }
            if let Some(&w) = k.elements().iter().find(|&&c| g.mul(c, gi) != g.mul(gi, c)) {
                return Err(Error::SpecInvalid(format!(
                    "element {w} of a subgroup does not centralize {gi}"
                )));
            }
        }
    }
    let classes: Vec<usize> = class_reps
        .iter()
        .flat_map(|&gi| (0..order).map(move |x| g.conj(x, gi)))
        .collect();
    if subgroup_closure(g, &classes).order() != order {
        return Err(Error::GenerationFails);
    }
    let meet = families
        .iter()
        .flatten()
        .fold(Subgroup::whole(order), |acc, k| acc.intersection(k));
    if !core(g, &meet).is_trivial() {
        return Err(Error::CoreFails);
    }
    let orbits: Vec<OrbitChoice> = class_reps
        .iter()
        .zip(families)
        .map(|(&rep, fam)| OrbitChoice {
            rep,
            subgroups: fam.clone(),
        })
        .collect();
    let layout = Layout::new(g, &orbits);
    let m = layout.size();
    let movers: Vec<usize> = layout
        .points
        .iter()
        .map(|&(bi, x)| g.conj(x, g.inv(class_reps[layout.blocks[bi].orbit])))
        .collect();
    let circ = (0..m * m)
        .map(|k| layout.translate(g, movers[k / m], k % m))
        .collect();
    let rack = RackTable::from_flat(m, circ);
    assert!(rack.is_rack(), "coset constructions give racks");
    let in_families = orbits
        .iter()
        .all(|o| o.subgroups.iter().all(|k| k.contains(o.rep)));
    assert_eq!(rack.is_quandle(), in_families, "quandle criterion");
    Ok(BuiltRack {
        rack,
        labels: layout.labels(),
    })
}
