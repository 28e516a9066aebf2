//! Monomial expansion of the modified Macdonald polynomials as a sum over
//! fillings of the diagram, weighted by `q^inv t^maj`.

use std::collections::BTreeMap;

use crate::qt::{IntPoly, QtRational};
use crate::symfunc::{Basis, Partition, SymFun};

struct Geometry {
    /// cells in reading order: rows from the top down, left to right
    n: usize,
    /// pairs `(i, j)`, `i` read first, that attack each other
    attacks: Vec<(usize, usize)>,
    /// `(cell, cell directly below, leg + 1, arm)`
    below: Vec<(usize, usize, u32, u32)>,
}

fn geometry(mu: &Partition) -> Geometry {
    let mut cells: Vec<(u32, u32)> = mu.cells().map(|c| (c.row, c.col)).collect();
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let pos = |r: u32, c: u32| cells.iter().position(|&x| x == (r, c)).unwrap();
    let mut attacks = Vec::new();
    for (i, &(r1, c1)) in cells.iter().enumerate() {
        for (j, &(r2, c2)) in cells.iter().enumerate().skip(i + 1) {
            let same_row = r1 == r2;
            let upper_right = r1 == r2 + 1 && c1 > c2;
            if same_row || upper_right {
                attacks.push((i, j));
            }
        }
    }
    let mut below = Vec::new();
    for (i, &(r, c)) in cells.iter().enumerate() {
        if r > 0 {
            let cell = crate::symfunc::Cell { row: r, col: c };
            below.push((i, pos(r - 1, c), mu.leg(cell) + 1, mu.arm(cell)));
        }
    }
    Geometry { n: cells.len(), attacks, below }
}

fn stats(g: &Geometry, fill: &[u32]) -> (u32, u32) {
    let mut inv = 0i64;
    for &(i, j) in &g.attacks {
        if fill[i] > fill[j] {
            inv += 1;
        }
    }
    let mut maj = 0;
    for &(u, v, leg1, arm) in &g.below {
        if fill[u] > fill[v] {
            maj += leg1;
            inv -= arm as i64;
        }
    }
    debug_assert!(inv >= 0);
    (inv as u32, maj)
}

/// Calls `f` on every distinct permutation of `items`, starting from sorted.
fn for_each_multiset_perm(items: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    items.sort_unstable();
    loop {
        f(items);
        // next lexicographic permutation
        let n = items.len();
        if n < 2 {
            return;
        }
        let mut i = n - 1;
        while i > 0 && items[i - 1] >= items[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = n - 1;
        while items[j] <= items[i - 1] {
            j -= 1;
        }
        items.swap(i - 1, j);
        items[i..].reverse();
    }
}

/// Coefficient of `x^lambda` for every `lambda |- |mu|`.
pub(crate) fn monomial_coefficients(mu: &Partition) -> BTreeMap<Partition, IntPoly> {
    let g = geometry(mu);
    let mut out = BTreeMap::new();
    for lam in Partition::all(mu.size()) {
        let mut word: Vec<u32> = lam
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(letter, &mult)| std::iter::repeat_n(letter as u32, mult as usize))
            .collect();
        debug_assert_eq!(word.len(), g.n);
        let mut poly = IntPoly::zero();
        for_each_multiset_perm(&mut word, &mut |w| {
            let (inv, maj) = stats(&g, w);
            poly.add_term((inv, maj), 1.into());
        });
        out.insert(lam, poly);
    }
    out
}

/// `H~_mu` in the Schur basis.
pub(crate) fn htilde_schur(mu: &Partition, bound: u32) -> SymFun {
    let m = monomial_coefficients(mu);
    SymFun::from_terms(Basis::M, bound, m.into_iter().map(|(l, p)| (l, QtRational::from_poly(p))))
        .expect("size within bound")
        .to_basis(Basis::S)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_a_multiset() {
        let mut n = 0;
        for_each_multiset_perm(&mut [0, 0, 1, 2], &mut |_| n += 1);
        assert_eq!(n, 12);
    }

    #[test]
    fn degree_two() {
        let two = Partition::new(vec![2]).unwrap();
        let h = htilde_schur(&two, 2);
        let s2 = SymFun::s(&two, 2).unwrap();
        let s11 = SymFun::s(&Partition::column(2), 2).unwrap();
        assert_eq!(h, s2.add(&s11.scale(&QtRational::q())));
        let h = htilde_schur(&Partition::column(2), 2);
        assert_eq!(h, s2.add(&s11.scale(&QtRational::t())));
    }
}
