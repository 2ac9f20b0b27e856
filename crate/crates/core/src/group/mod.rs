//! Finite groups as Cayley tables, with the identity pinned at index 0.

mod action;
mod iso;
mod product;
mod subgroup;

use std::collections::HashMap;

pub use action::{orbit, stabilizer, GroupAction};
pub use iso::{are_isomorphic, automorphisms, group_signatures, IsoSearch, UNMAPPED};
pub use product::{holomorph, semidirect_product, Holomorph, SemidirectProduct};
pub use subgroup::{
    all_subgroups, core, is_normal, left_cosets, subgroup_closure, subgroups_within, CosetSpace,
    Subgroup,
};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Group operations on element indices `0..order`, identity at 0.
pub trait GroupOps {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// A validated finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl GroupOps for FiniteGroup {
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }
    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

impl FiniteGroup {
    /// Validate a Cayley table: square, in range, Latin, identity at 0, associative.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::OutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table)
    }

    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        assert_eq!(table.len(), n * n);
        check_latin(n, &table)?;
        for x in 0..n {
            if table[x] != x || table[x * n] != x {
                return Err(Error::NoIdentityAtZero { element: x });
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a * n + b] == 0).expect("Latin row");
            inverse[a] = b;
        }
        let g = FiniteGroup {
            order: n,
            table,
            inverse,
        };
        g.check_associative()?;
        for a in 0..n {
            assert_eq!(g.mul(g.inverse[a], a), 0, "two-sided inverse");
        }
        Ok(g)
    }

    /// Light's test: it suffices to check `(x·s)·y = x·(s·y)` for `s` in a
    /// generating set of the magma.
    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let gens = magma_generators(n, &self.table);
        for &s in &gens {
            for x in 0..n {
                let xs = self.mul(x, s);
                for y in 0..n {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return Err(Error::NotAssociative { a: x, b: s, c: y });
                    }
                }
            }
        }
        Ok(())
    }

    /// Build the group generated by `elements` under `op`, indexing elements in
    /// breadth-first order from `identity` so that the identity lands at 0.
    pub fn from_closure<T, F>(identity: T, generators: &[T], op: F) -> (Self, Vec<T>)
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut i = 0;
        while i < elems.len() {
            for s in generators {
                let p = op(&elems[i], s);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&op(a, b)]);
            }
        }
        let g = Self::from_flat(n, table).expect("closure of a group operation is a group");
        (g, elems)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_flat(n, table).unwrap()
    }

    /// `S_n` on the permutations of `n` points in lexicographic order of their
    /// image vectors; `table[a][b]` is the index of `p_a ∘ p_b`.
    pub fn symmetric(n: usize) -> Self {
        let perms = all_permutations(n);
        let index: HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let m = perms.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &perms {
            for b in &perms {
                table.push(index[&a.compose(b)]);
            }
        }
        Self::from_flat(m, table).unwrap()
    }

    /// Dihedral group of order `2n`: element `r^i s^e` is coded `2i + e`.
    pub fn dihedral(n: usize) -> Self {
        let m = 2 * n;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let (i, e) = (a / 2, a % 2);
                let (j, f) = (b / 2, b % 2);
                // r^i s^e r^j s^f = r^(i ± j) s^(e+f)
                let k = if e == 0 { (i + j) % n } else { (i + n - j) % n };
                table.push(2 * k + (e + f) % 2);
            }
        }
        Self::from_flat(m, table).unwrap()
    }

    /// Quaternion group `Q8`, coded as `i^a j^b (-1)^c ↦ ...` via closure of matrices.
    pub fn quaternion() -> Self {
        // Unit quaternions as integer 4-tuples (1, i, j, k).
        type Q = [i8; 4];
        fn qmul(p: &Q, q: &Q) -> Q {
            [
                p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
            ]
        }
        Self::from_closure([1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], qmul).0
    }

    /// Direct product with pair coding `a·|H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order, h.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                table.push(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
            }
        }
        Self::from_flat(n * m, table).unwrap()
    }

    /// `(Z/2)^k` with elements coded by bit vectors (xor).
    pub fn elementary_abelian_2(k: u32) -> Self {
        let n = 1usize << k;
        let table = (0..n * n).map(|x| (x / n) ^ (x % n)).collect();
        Self::from_flat(n, table).unwrap()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    /// Conjugacy classes, each sorted and listed by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..n {
                let c = self.conj(g, a);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        let elems = (0..self.order)
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect();
        Subgroup::from_sorted_unchecked(self.order, elems)
    }

    pub fn center(&self) -> Subgroup {
        let elems = (0..self.order)
            .filter(|&h| (0..self.order).all(|g| self.mul(g, h) == self.mul(h, g)))
            .collect();
        Subgroup::from_sorted_unchecked(self.order, elems)
    }

    pub fn is_isomorphic_to(&self, other: &FiniteGroup, caps: &Caps) -> Result<bool> {
        Ok(are_isomorphic(self, other, caps)?.is_some())
    }
}

fn check_latin(n: usize, table: &[usize]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c];
            if seen[v] == r {
                return Err(Error::NotLatin {
                    row: r,
                    col: c,
                    axis: "row",
                });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c];
            if seen[v] == c {
                return Err(Error::NotLatin {
                    row: r,
                    col: c,
                    axis: "column",
                });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

/// A generating set of the magma `(0..n, table)`, grown greedily.
fn magma_generators(n: usize, table: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for cand in 0..n {
        if inside[cand] {
            continue;
        }
        gens.push(cand);
        inside[cand] = true;
        members.push(cand);
        // close under all products
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for p in [table[a * n + b], table[b * n + a]] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
    gens
}

/// A small generating set: greedily add the element of largest order not yet
/// covered.
pub fn generating_set<G: GroupOps + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.order();
    let mut by_order: Vec<(usize, usize)> = (1..n).map(|a| (g.element_order(a), a)).collect();
    by_order.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut gens = Vec::new();
    let mut current = subgroup_closure(g, &[]);
    for (_, a) in by_order {
        if current.order() == n {
            break;
        }
        if !current.contains(a) {
            gens.push(a);
            current = subgroup_closure(g, &gens);
        }
    }
    gens
}

pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images_unchecked(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
