use super::*;
use crate::caps::Caps;
use crate::group::{all_subgroups, are_isomorphic, holomorph, FiniteGroup, GroupOps};

/// First failing triple of the brace axiom by direct scan.
fn axiom_oracle(star: &FiniteGroup, dot: &FiniteGroup) -> Option<(usize, usize, usize)> {
    let n = star.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = dot.mul(a, star.mul(b, c));
                let rhs = star.mul(star.mul(dot.mul(a, b), star.inv(a)), dot.mul(a, c));
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[test]
fn trivial_brace_on_z2() {
    let z2 = FiniteGroup::cyclic(2);
    let b = SkewBrace::from_tables(&z2.table_rows(), &z2.table_rows()).unwrap();
    assert!(b.is_trivial());
    assert!(b.is_two_sided());
    assert_eq!(SkewBrace::trivial(&z2), b);
}

#[test]
fn incompatible_tables_fail_at_first_triple() {
    let star = FiniteGroup::cyclic(4);
    // Z/4 relabelled so that 2 generates: 1 and 2 swap roles
    let relabel = [0, 2, 1, 3];
    let z4 = FiniteGroup::cyclic(4);
    let rows: Vec<Vec<usize>> = (0..4)
        .map(|x| {
            (0..4)
                .map(|y| relabel[z4.mul(relabel[x], relabel[y])])
                .collect()
        })
        .collect();
    let dot = FiniteGroup::from_table(&rows).unwrap();
    let expected = axiom_oracle(&star, &dot).expect("oracle finds a failure");
    let err = SkewBrace::from_groups(star, dot).unwrap_err();
    let (a, b, c) = expected;
    assert_eq!(err, Error::AxiomFails { a, b, c });
}

#[test]
fn table_errors_are_tagged() {
    let bad = vec![vec![0, 1], vec![1, 1]];
    let good = FiniteGroup::cyclic(2).table_rows();
    assert!(matches!(
        SkewBrace::from_tables(&bad, &good),
        Err(Error::StarInvalid(_))
    ));
    assert!(matches!(
        SkewBrace::from_tables(&good, &bad),
        Err(Error::DotInvalid(_))
    ));
    let z3 = FiniteGroup::cyclic(3).table_rows();
    assert_eq!(
        SkewBrace::from_tables(&good, &z3).unwrap_err(),
        Error::OrderMismatch { star: 2, dot: 3 }
    );
}

#[test]
fn opposite_braces() {
    let s3 = FiniteGroup::symmetric(3);
    let op = SkewBrace::opposite(&s3);
    assert_ne!(op.star(), op.dot());
    assert!(axiom_oracle(op.star(), op.dot()).is_none());
    assert!(op.is_two_sided());
    let z4 = FiniteGroup::cyclic(4);
    assert_eq!(SkewBrace::opposite(&z4), SkewBrace::trivial(&z4));
    // λ_a(b) = a·b·a⁻¹ for the opposite brace
    for a in 0..6 {
        for b in 0..6 {
            let direct = s3.mul(s3.mul(a, b), s3.inv(a));
            assert_eq!(op.lambda(a, b), direct);
        }
    }
}

#[test]
fn cyclic_flip_braces() {
    let b1 = SkewBrace::cyclic_flip(1);
    assert!(b1.is_trivial());
    let b2 = SkewBrace::cyclic_flip(2);
    assert!(b2.is_two_sided());
    assert!((1..4).all(|a| b2.star().element_order(a) == 2));
    assert!(are_isomorphic(
        b2.star(),
        &FiniteGroup::elementary_abelian_2(2),
        &Caps::default()
    )
    .unwrap()
    .is_some());
    for n in 1..6 {
        assert!(SkewBrace::cyclic_flip(n).is_two_sided());
    }
}

#[test]
fn order21_values() {
    let b = SkewBrace::order21();
    let (tau, sigma) = (1, 3);
    let code = |a: usize, t: usize| 3 * a + t;
    assert_eq!(b.star_mul(tau, sigma), code(2, 1));
    let lhs = b.dot_mul(b.star_mul(tau, tau), sigma);
    assert_eq!(lhs, code(2, 2));
    let ts = b.dot_mul(tau, sigma);
    let rhs = b.star_mul(b.star_mul(ts, b.star_inv(sigma)), ts);
    assert_eq!(rhs, code(3, 2));
    assert_eq!(b.right_axiom_failure(), Some((tau, tau, sigma)));
    assert!(!b.is_two_sided());
    // τ·σ = σ⁴τ, and τ^⋆ ⋆ σ⁴τ = σ²
    assert_eq!(ts, code(4, 1));
    assert_eq!(b.lambda(tau, sigma), code(2, 0));
    for x in 0..21 {
        assert_eq!(b.star_mul(0, x), x);
        assert_eq!(b.dot_mul(x, 0), x);
    }
}

#[test]
fn lambda_and_gamma_on_trivial_braces() {
    let s3 = FiniteGroup::symmetric(3);
    let b = SkewBrace::trivial(&s3);
    let lam = b.lambda_action();
    for a in 0..6 {
        assert!(lam.perm_of(a).is_identity());
    }
    let gammas = b.gamma_map();
    assert!(gammas[0].is_identity());
    for a in 0..6 {
        for x in 0..6 {
            assert_eq!(b.gamma(a, x), s3.mul(s3.mul(s3.inv(a), x), a));
        }
        assert!(gammas[a].compose(&gammas[b.dot_inv(a)]).is_identity());
    }
}

#[test]
fn theta_orbits_of_trivial_braces() {
    let z4 = SkewBrace::trivial(&FiniteGroup::cyclic(4));
    assert!(z4.theta_orbits().iter().all(|o| o.len() == 1));
    let s3 = FiniteGroup::symmetric(3);
    let b = SkewBrace::trivial(&s3);
    assert_eq!(b.theta_orbits(), s3.conjugacy_classes());
    for a in 0..6 {
        assert_eq!(b.theta_orbit(a).len() * b.theta_stabilizer(a).order(), 36);
    }
}

#[test]
fn socles() {
    let z6 = SkewBrace::trivial(&FiniteGroup::cyclic(6));
    assert_eq!(z6.socle().order(), 6);
    let s3 = SkewBrace::trivial(&FiniteGroup::symmetric(3));
    assert!(s3.socle().is_trivial());
    for b in [
        z6,
        s3,
        SkewBrace::opposite(&FiniteGroup::symmetric(3)),
        SkewBrace::cyclic_flip(3),
        SkewBrace::order21(),
    ] {
        let soc = b.socle();
        assert_eq!(soc, b.socle_by_gamma_kernel());
        assert_eq!(soc, b.socle_by_conjugation_kernel());
        assert!(b.is_ideal(soc.elements()));
        for &x in soc.elements() {
            for &y in soc.elements() {
                assert_eq!(b.star_mul(x, y), b.dot_mul(x, y));
            }
        }
    }
}

#[test]
fn ideals_and_quotients() {
    let b = SkewBrace::cyclic_flip(3);
    assert!(b.is_ideal(&[0]));
    assert_eq!(b.quotient(&[0]).unwrap(), b);
    let all: Vec<usize> = (0..6).collect();
    assert!(b.is_ideal(&all));
    assert_eq!(b.quotient(&all).unwrap().order(), 1);
    assert!(matches!(b.quotient(&[0, 1]), Err(Error::NotAnIdeal(_))));
    let op = SkewBrace::opposite(&FiniteGroup::symmetric(3));
    let a3 = [0, 3, 4];
    assert!(op.is_ideal(&a3));
    assert_eq!(op.quotient(&a3).unwrap().order(), 2);
    // left ideals are sub-braces
    let s = crate::group::all_subgroups(b.star(), &Caps::default()).unwrap();
    for h in s {
        if b.is_left_ideal(h.elements()) {
            assert!(b.is_sub_brace(h.elements()));
        }
    }
}

#[test]
fn vendramin_brace_structure() {
    let b = SkewBrace::vendramin();
    assert!(b.is_left_brace());
    assert!(b.socle().is_trivial());
    let e3 = 1 << 2;
    let e6 = 1 << 5;
    let bit = |v: usize, k: usize| (v >> (k - 1)) & 1;
    let o1: Vec<usize> = (0..64).filter(|&v| v >> 2 == 1).collect();
    let o2: Vec<usize> = (0..64)
        .filter(|&v| v & 0b111 == 0 && bit(v, 6) == 1)
        .collect();
    assert_eq!(b.theta_orbit(e3), o1);
    assert_eq!(b.theta_orbit(e6), o2);
    // λ_y(e3) is the third column (p, q, 1, 0, 0, 0), λ_y(e6) the sixth
    let st3: Vec<usize> = (0..64)
        .filter(|&y| bit(y, 2) == 0 && (bit(y, 4) + bit(y, 5) + bit(y, 5) * bit(y, 6)) % 2 == 0)
        .collect();
    let st6: Vec<usize> = (0..64)
        .filter(|&y| bit(y, 5) == 0 && (bit(y, 1) + bit(y, 2) + bit(y, 2) * bit(y, 3)) % 2 == 0)
        .collect();
    assert_eq!(b.lambda_stabilizer(e3).elements(), st3.as_slice());
    assert_eq!(b.lambda_stabilizer(e6).elements(), st6.as_slice());
    assert_eq!(st3.len(), 16);
    assert_eq!(st6.len(), 16);
    let both = b
        .lambda_stabilizer(e3)
        .intersection(&b.lambda_stabilizer(e6));
    assert_eq!(both.elements(), &[0, 4, 32, 36]);
    // Θ-stabilizers of a left brace are B × St_λ
    assert_eq!(b.theta_stabilizer(e3).order(), 64 * 16);
}

#[test]
fn regular_subgroup_round_trip() {
    let caps = Caps::default();
    for b in [
        SkewBrace::cyclic_flip(2),
        SkewBrace::opposite(&FiniteGroup::symmetric(3)),
        SkewBrace::trivial(&FiniteGroup::symmetric(3)),
        SkewBrace::cyclic_flip(4),
    ] {
        let hol = holomorph(b.star(), &caps).unwrap();
        let h = regular_subgroup_of(&hol, &b).unwrap();
        assert_eq!(brace_from_regular_subgroup(&hol, &h).unwrap(), b);
    }
    let a = FiniteGroup::cyclic(4);
    let hol = holomorph(&a, &caps).unwrap();
    let translations: Vec<usize> = (0..4).map(|v| hol.product().encode(v, 0)).collect();
    let h = crate::group::Subgroup::new(hol.product(), translations).unwrap();
    assert_eq!(
        brace_from_regular_subgroup(&hol, &h).unwrap(),
        SkewBrace::trivial(&a)
    );
    let auts: Vec<usize> = (0..2).map(|m| hol.product().encode(0, m)).collect();
    let h = crate::group::Subgroup::new(hol.product(), auts).unwrap();
    assert!(matches!(
        brace_from_regular_subgroup(&hol, &h),
        Err(Error::NotRegular(_))
    ));
}

/// Regular subgroups by scanning the full subgroup lattice of the holomorph.
fn regular_oracle(a: &FiniteGroup) -> Vec<crate::group::Subgroup> {
    let caps = Caps::default();
    let hol = holomorph(a, &caps).unwrap();
    let n = a.order();
    all_subgroups(hol.product(), &caps)
        .unwrap()
        .into_iter()
        .filter(|h| {
            h.order() == n && {
                let mut firsts: Vec<usize> = h
                    .elements()
                    .iter()
                    .map(|&x| hol.product().decode(x).0)
                    .collect();
                firsts.sort();
                firsts.dedup();
                firsts.len() == n
            }
        })
        .collect()
}

#[test]
fn regular_search_matches_lattice_scan() {
    let caps = Caps::default();
    for a in [
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::elementary_abelian_2(2),
        FiniteGroup::symmetric(3),
    ] {
        let hol = holomorph(&a, &caps).unwrap();
        assert_eq!(regular_subgroups(&hol), regular_oracle(&a));
    }
}

#[test]
fn brace_counts() {
    let caps = Caps::default();
    let count = |a: FiniteGroup| enumerate_braces_on(&a, &caps).unwrap().len();
    assert_eq!(count(FiniteGroup::cyclic(2)), 1);
    assert_eq!(count(FiniteGroup::cyclic(3)), 1);
    // Klein four-group: trivial brace and the rank-one radical ring
    let klein = count(FiniteGroup::elementary_abelian_2(2));
    let oracle_klein = {
        let subs = regular_oracle(&FiniteGroup::elementary_abelian_2(2));
        let hol = holomorph(&FiniteGroup::elementary_abelian_2(2), &caps).unwrap();
        let braces: Vec<SkewBrace> = subs
            .iter()
            .map(|h| brace_from_regular_subgroup(&hol, h).unwrap())
            .collect();
        let mut reps: Vec<&SkewBrace> = Vec::new();
        for b in &braces {
            if !reps.iter().any(|r| brace_isomorphism(r, b).is_some()) {
                reps.push(b);
            }
        }
        reps.len()
    };
    assert_eq!(klein, oracle_klein);
    assert_eq!(count(FiniteGroup::cyclic(4)) + klein, 4);
    assert_eq!(
        count(FiniteGroup::cyclic(6)) + count(FiniteGroup::symmetric(3)),
        6
    );
}

#[test]
fn brace_isomorphisms() {
    let b = SkewBrace::order21();
    let id = brace_isomorphism(&b, &b).unwrap();
    assert!(id.is_identity());
    let z4 = SkewBrace::trivial(&FiniteGroup::cyclic(4));
    assert!(brace_isomorphism(&z4, &SkewBrace::cyclic_flip(2)).is_none());
    // relabel cyclic_flip(3) by a dot automorphism and recover an isomorphism
    let src = SkewBrace::cyclic_flip(3);
    let auts = brace_automorphisms(&src);
    assert!(auts[0].is_identity());
    for p in &auts {
        assert!(iso::is_brace_morphism(&src, &src, p));
    }
    assert!(SkewBrace::trivial(&FiniteGroup::cyclic(4))
        .square_free_elements()
        .contains(&0));
}
