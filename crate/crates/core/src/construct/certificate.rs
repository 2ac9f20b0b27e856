use super::{build_solution, ConstructionSpec, Layout};
use crate::brace::{brace_automorphisms, brace_isomorphism, is_brace_morphism};
use crate::error::{Error, Result};
use crate::group::GroupOps;
use crate::perm::Permutation;
use crate::solution::is_morphism;

/// Data exhibiting an isomorphism between the solutions of two specs.
///
/// `ψ(a_i) = Θ_{w}(a'_{α(i)})` and `(ψ×ψ)(K_{i,j}) = w L_{α(i),β_i(j)} w⁻¹`
/// with `w = witnesses[i][j]`, a pair-coded element of the second `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    /// Brace isomorphism from the first brace to the second.
    pub psi: Permutation,
    pub alpha: Vec<usize>,
    pub beta: Vec<Vec<usize>>,
    pub witnesses: Vec<Vec<(usize, usize)>>,
}

fn is_bijection(map: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    map.len() == len
        && map
            .iter()
            .all(|&v| v < len && !std::mem::replace(&mut seen[v], true))
}

/// `(ψ×ψ)(K)`, sorted.
fn image_of_subgroup(psi: &Permutation, n: usize, elements: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = elements
        .iter()
        .map(|&x| psi.apply(x / n) * n + psi.apply(x % n))
        .collect();
    out.sort_unstable();
    out
}

/// `w L w⁻¹`, sorted.
fn conjugated<G: GroupOps + ?Sized>(g: &G, w: usize, elements: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = elements.iter().map(|&x| g.conj(w, x)).collect();
    out.sort_unstable();
    out
}

/// Checks both certificate equations; equation `0` stands for the shape
/// requirements (ψ a brace isomorphism, α and β bijective).
pub fn check_iso_certificate(
    s1: &ConstructionSpec,
    s2: &ConstructionSpec,
    cert: &IsoCertificate,
) -> Result<()> {
    let shape = |i: usize, j: usize| Error::CertificateInvalid { equation: 0, i, j };
    let (b1, b2) = (&s1.brace, &s2.brace);
    let n = b1.order();
    if n != b2.order() || cert.psi.degree() != n || !is_brace_morphism(b1, b2, &cert.psi) {
        return Err(shape(0, 0));
    }
    let k = s1.orbits.len();
    if s2.orbits.len() != k || !is_bijection(&cert.alpha, k) || cert.beta.len() != k {
        return Err(shape(0, 0));
    }
    if cert.witnesses.len() != k {
        return Err(shape(0, 0));
    }
    let g2 = s2.semidirect();
    for (i, o) in s1.orbits.iter().enumerate() {
        let target = &s2.orbits[cert.alpha[i]];
        let fam = o.subgroups.len();
        if target.subgroups.len() != fam
            || !is_bijection(&cert.beta[i], fam)
            || cert.witnesses[i].len() != fam
        {
            return Err(shape(i, 0));
        }
        for (j, kij) in o.subgroups.iter().enumerate() {
            let (y, z) = cert.witnesses[i][j];
            if y >= n || z >= n {
                return Err(shape(i, j));
            }
            let w = g2.encode(y, z);
            if cert.psi.apply(o.rep) != b2.theta(w, target.rep) {
                return Err(Error::CertificateInvalid { equation: 1, i, j });
            }
            let lij = &target.subgroups[cert.beta[i][j]];
            if image_of_subgroup(&cert.psi, n, kij.elements()) != conjugated(&g2, w, lij.elements())
            {
                return Err(Error::CertificateInvalid { equation: 2, i, j });
            }
        }
    }
    Ok(())
}

/// `F((b,c)K_{i,j}) = (ψ(b), ψ(c)) · w_{i,j} · L_{α(i),β_i(j)}`, checked to be
/// an isomorphism of the built solutions.
pub fn certified_map(
    s1: &ConstructionSpec,
    s2: &ConstructionSpec,
    cert: &IsoCertificate,
) -> Result<Permutation> {
    check_iso_certificate(s1, s2, cert)?;
    let n = s1.brace.order();
    let g1 = s1.semidirect();
    let g2 = s2.semidirect();
    let l1 = Layout::new(&g1, &s1.orbits);
    let l2 = Layout::new(&g2, &s2.orbits);
    let block_at = |orbit: usize, family: usize| {
        l2.blocks
            .iter()
            .find(|bl| bl.orbit == orbit && bl.family == family)
            .expect("certificate indices are in range")
    };
    let map: Vec<usize> = l1
        .points
        .iter()
        .map(|&(bi, rep)| {
            let src = &l1.blocks[bi];
            let (y, z) = cert.witnesses[src.orbit][src.family];
            let dst = block_at(cert.alpha[src.orbit], cert.beta[src.orbit][src.family]);
            let moved = g2.encode(cert.psi.apply(rep / n), cert.psi.apply(rep % n));
            dst.offset + dst.cosets.coset_of(g2.mul(moved, g2.encode(y, z)))
        })
        .collect();
    let sol1 = build_solution(s1)?.solution;
    let sol2 = build_solution(s2)?.solution;
    assert!(
        is_morphism(&sol1, &sol2, &map),
        "certified maps are solution isomorphisms"
    );
    Permutation::from_images(map)
}

/// Searches brace isomorphisms `ψ`, then matches orbits and families under
/// `ψ`; `None` if no certificate exists.
pub fn find_iso_certificate(
    s1: &ConstructionSpec,
    s2: &ConstructionSpec,
) -> Option<IsoCertificate> {
    let (b1, b2) = (&s1.brace, &s2.brace);
    let n = b1.order();
    if s1.orbits.len() != s2.orbits.len() {
        return None;
    }
    let base = brace_isomorphism(b1, b2)?;
    let g2 = s2.semidirect();
    // orbit of each element of the second brace, as an index into s2.orbits
    let mut chosen_orbit = vec![usize::MAX; n];
    for (i, o) in s2.orbits.iter().enumerate() {
        for h in 0..n * n {
            chosen_orbit[b2.theta(h, o.rep)] = i;
        }
    }
    brace_automorphisms(b2).into_iter().find_map(|aut| {
        let psi = aut.compose(&base);
        let alpha: Vec<usize> = s1
            .orbits
            .iter()
            .map(|o| chosen_orbit[psi.apply(o.rep)])
            .collect();
        if !is_bijection(&alpha, s1.orbits.len()) {
            return None;
        }
        let mut beta = Vec::new();
        let mut witnesses = Vec::new();
        for (i, o) in s1.orbits.iter().enumerate() {
            let target = &s2.orbits[alpha[i]];
            if target.subgroups.len() != o.subgroups.len() {
                return None;
            }
            let goal = psi.apply(o.rep);
            let movers: Vec<usize> = (0..n * n)
                .filter(|&h| b2.theta(h, target.rep) == goal)
                .collect();
            let mut used = vec![false; target.subgroups.len()];
            let mut bi = Vec::new();
            let mut wi = Vec::new();
            for k in &o.subgroups {
                let image = image_of_subgroup(&psi, n, k.elements());
                let (jp, w) = target.subgroups.iter().enumerate().find_map(|(jp, l)| {
                    if used[jp] || l.order() != image.len() {
                        return None;
                    }
                    movers
                        .iter()
                        .find(|&&w| conjugated(&g2, w, l.elements()) == image)
                        .map(|&w| (jp, w))
                })?;
                used[jp] = true;
                bi.push(jp);
                wi.push(g2.decode(w));
            }
            beta.push(bi);
            witnesses.push(wi);
        }
        let cert = IsoCertificate {
            psi,
            alpha,
            beta,
            witnesses,
        };
        debug_assert!(check_iso_certificate(s1, s2, &cert).is_ok());
        Some(cert)
    })
}
