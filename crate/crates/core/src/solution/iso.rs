use super::Solution;
use crate::perm::Permutation;

/// Whether `F` intertwines the two solutions: `F(f_x(y)) = f'_{F(x)}(F(y))`
/// and `F(g_y(x)) = g'_{F(y)}(F(x))`.
pub fn is_morphism(s1: &Solution, s2: &Solution, map: &[usize]) -> bool {
    let n = s1.size();
    map.len() == n
        && map.iter().all(|&v| v < s2.size())
        && (0..n).all(|x| {
            (0..n).all(|y| {
                map[s1.f(x, y)] == s2.f(map[x], map[y]) && map[s1.g(y, x)] == s2.g(map[y], map[x])
            })
        })
}

/// Sorted multiset of fibre sizes, or the cycle type for a bijective row.
fn row_shape(row: &[usize]) -> Vec<usize> {
    match Permutation::from_images(row.to_vec()) {
        Ok(p) => p.cycle_type(),
        Err(_) => {
            let mut counts = vec![0; row.len()];
            for &v in row {
                counts[v] += 1;
            }
            counts.sort_unstable();
            // the leading 0 marks a non-bijective row
            let mut v = vec![0];
            v.extend(counts);
            v
        }
    }
}

fn signatures(s: &Solution) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    (0..s.size())
        .map(|x| {
            (
                row_shape(s.f_row(x)),
                row_shape(s.g_row(x)),
                s.r(x, x) == (x, x),
            )
        })
        .collect()
}

struct Search<'a> {
    s1: &'a Solution,
    s2: &'a Solution,
    map: Vec<usize>,
    inv: Vec<usize>,
    trail: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

const FREE: usize = usize::MAX;

impl Search<'_> {
    /// Assign `x ↦ v` and everything it forces; false on contradiction.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((a, b)) = queue.pop() {
            if self.map[a] != FREE {
                if self.map[a] != b {
                    return false;
                }
                continue;
            }
            if self.inv[b] != FREE || !self.candidates[a].contains(&b) {
                return false;
            }
            self.map[a] = b;
            self.inv[b] = a;
            self.trail.push(a);
            // every pair with a mapped partner now forces two values
            for &c in &self.trail.clone() {
                let d = self.map[c];
                for (p, q, pi, qi) in [(a, c, b, d), (c, a, d, b)] {
                    queue.push((self.s1.f(p, q), self.s2.f(pi, qi)));
                    queue.push((self.s1.g(q, p), self.s2.g(qi, pi)));
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().expect("non-empty");
            self.inv[self.map[a]] = FREE;
            self.map[a] = FREE;
        }
    }

    fn dfs(&mut self) -> bool {
        let Some(x) = self.map.iter().position(|&v| v == FREE) else {
            return true;
        };
        for v in self.candidates[x].clone() {
            if self.inv[v] != FREE {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, v) && self.dfs() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// The lexicographically least isomorphism `s1 → s2`, if any.
pub fn solution_isomorphism(s1: &Solution, s2: &Solution) -> Option<Permutation> {
    let n = s1.size();
    if n != s2.size() {
        return None;
    }
    let sig1 = signatures(s1);
    let sig2 = signatures(s2);
    let mut a = sig1.clone();
    let mut b = sig2.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates = (0..n)
        .map(|x| (0..n).filter(|&y| sig2[y] == sig1[x]).collect())
        .collect();
    let mut search = Search {
        s1,
        s2,
        map: vec![FREE; n],
        inv: vec![FREE; n],
        trail: Vec::new(),
        candidates,
    };
    if !search.dfs() {
        return None;
    }
    debug_assert!(is_morphism(s1, s2, &search.map));
    Some(Permutation::from_images_unchecked(search.map))
}
