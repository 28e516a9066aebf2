//! Carlitz insertion for `inv`, `dinv` and `maj`, its exact inverses, and
//! the bijections `phi` (dinv to inv) and `theta` (maj to inv).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{inv, Omp, Stat};
use crate::error::{Error, Result};

/// A labelled place for one new letter: a block (`new_block = false`) or a
/// gap between blocks. For `maj` the label is the gap label of the star model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Slot {
    pub label: usize,
    pub new_block: bool,
}

/// One recorded deletion: the letter, the statistic drop `c` and whether the
/// number of blocks went down (`b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Deletion {
    pub letter: u32,
    pub c: u32,
    pub b: bool,
}

fn slot_of(stat: Stat, (c, b): (u32, bool)) -> Slot {
    let shift = usize::from(stat == Stat::Maj && !b);
    Slot { label: c as usize + shift, new_block: b }
}

fn data_of(stat: Stat, s: Slot) -> (u32, bool) {
    let shift = usize::from(stat == Stat::Maj && !s.new_block);
    ((s.label - shift) as u32, s.new_block)
}

/// Position in the insertion order: smaller goes first.
fn processing_key(stat: Stat, s: Slot) -> (i64, i64) {
    let b = i64::from(s.new_block);
    match stat {
        Stat::Inv | Stat::Dinv => (-(s.label as i64), b),
        Stat::Maj => (-(s.label as i64), -b),
    }
}

/// Block index carrying each label, label 0 first.
fn block_labels(pi: &Omp, stat: Stat) -> Vec<usize> {
    let nb = pi.num_blocks();
    match stat {
        Stat::Dinv => {
            let mut order: Vec<usize> = (0..nb).collect();
            order.sort_by_key(|&i| (std::cmp::Reverse(pi.blocks()[i].len()), i));
            order
        }
        _ => (0..nb).rev().collect(),
    }
}

fn no_slot(label: usize, available: usize) -> Error {
    Error::NoSlot { label, available }
}

fn blockwise_step(pi: &Omp, l: u32, s: Slot, stat: Stat) -> Result<Omp> {
    let nb = pi.num_blocks();
    let mut blocks = pi.blocks().to_vec();
    if s.new_block {
        if s.label > nb {
            return Err(no_slot(s.label, nb + 1));
        }
        blocks.insert(nb - s.label, vec![l]);
    } else {
        let labels = block_labels(pi, stat);
        let &bi = labels.get(s.label).ok_or_else(|| no_slot(s.label, nb))?;
        if blocks[bi].contains(&l) {
            return Err(Error::InvalidOmp(format!("block {bi} of {pi} already holds {l}")));
        }
        blocks[bi].insert(0, l);
    }
    Omp::new(blocks)
}

/// The concatenated word and the star positions: `p` is a star when the
/// letters at `p - 1` and `p` share a block.
struct StarWord {
    sigma: Vec<u32>,
    stars: BTreeSet<usize>,
}

impl StarWord {
    fn of(pi: &Omp) -> Self {
        let mut sigma = Vec::new();
        let mut stars = BTreeSet::new();
        for b in pi.blocks() {
            for (i, &x) in b.iter().enumerate() {
                sigma.push(x);
                if i + 1 < b.len() {
                    stars.insert(sigma.len());
                }
            }
        }
        Self { sigma, stars }
    }

    fn to_omp(&self) -> Option<Omp> {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, &x) in self.sigma.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if self.stars.contains(&i) => {
                    if *b.last().unwrap() <= x {
                        return None;
                    }
                    b.push(x)
                }
                _ => blocks.push(vec![x]),
            }
        }
        Some(Omp::from_sorted(blocks))
    }

    /// The end of the word always counts as a descent.
    fn is_desc(&self, g: usize) -> bool {
        g == self.sigma.len() || (g > 0 && self.sigma[g - 1] > self.sigma[g])
    }

    fn inner_descents(&self, from: usize) -> Vec<usize> {
        (from.max(1)..self.sigma.len()).filter(|&d| self.is_desc(d)).collect()
    }

    /// Gap positions by label: descents right to left, then the other gaps left to right.
    fn gap_labels(&self) -> Vec<usize> {
        let gaps: Vec<usize> = (0..=self.sigma.len()).filter(|g| !self.stars.contains(g)).collect();
        let mut out: Vec<usize> = gaps.iter().rev().copied().filter(|&g| self.is_desc(g)).collect();
        out.extend(gaps.iter().copied().filter(|&g| !self.is_desc(g)));
        out
    }
}

fn maj_step(pi: &Omp, l: u32, s: Slot) -> Result<Omp> {
    let w = StarWord::of(pi);
    let labels = w.gap_labels();
    let &g = labels.get(s.label).ok_or_else(|| no_slot(s.label, labels.len()))?;
    let mut sigma = w.sigma.clone();
    sigma.insert(g, l);
    let mut out = StarWord { sigma, stars: BTreeSet::new() };
    let mut right = Vec::new();
    for &p in &w.stars {
        if p < g {
            out.stars.insert(p);
        } else {
            right.push(p + 1);
        }
    }
    let descs = out.inner_descents(g + 1);
    for p in right {
        let i = descs.iter().position(|&d| d == p).expect("stars sit on descents");
        if i == 0 {
            return Err(Error::InvalidOmp(format!("no descent left of a star after inserting {l} into {pi}")));
        }
        out.stars.insert(descs[i - 1]);
    }
    if !s.new_block {
        let last = *out
            .inner_descents(1)
            .last()
            .ok_or_else(|| Error::InvalidOmp(format!("no inner descent after inserting {l} into {pi}")))?;
        if !out.stars.insert(last) {
            return Err(Error::InvalidOmp(format!("rightmost descent already starred after inserting {l} into {pi}")));
        }
    }
    out.to_omp().ok_or_else(|| Error::InvalidOmp(format!("insertion of {l} into {pi} breaks a block")))
}

fn step(pi: &Omp, l: u32, s: Slot, stat: Stat) -> Result<Omp> {
    match stat {
        Stat::Maj => maj_step(pi, l, s),
        _ => blockwise_step(pi, l, s, stat),
    }
}

/// Inserts one copy of `letter` with data `(c, b)`.
pub fn insert_one(pi: &Omp, letter: u32, data: (u32, bool), stat: Stat) -> Result<Omp> {
    step(pi, letter, slot_of(stat, data), stat)
}

/// Inserts `data.len()` copies of `letter`, larger than every letter of
/// `pi`, in the processing order of the statistic.
pub fn insert(pi: &Omp, letter: u32, data: &[(u32, bool)], stat: Stat) -> Result<Omp> {
    if letter == 0 || (!pi.is_empty() && letter <= pi.max_letter()) {
        return Err(Error::Precondition(format!("letter {letter} does not exceed the letters of {pi}")));
    }
    let mut slots: Vec<Slot> = data.iter().map(|&d| slot_of(stat, d)).collect();
    slots.sort_by_key(|&s| processing_key(stat, s));
    let mut cur = pi.clone();
    for s in slots {
        cur = step(&cur, letter, s, stat)?;
    }
    Ok(cur)
}

/// Every single-step un-insertion of one copy of `l`.
fn unstep_candidates(pi: &Omp, l: u32, stat: Stat) -> Vec<(Slot, Omp)> {
    let mut out = Vec::new();
    match stat {
        Stat::Maj => {
            let w = StarWord::of(pi);
            for g in (0..w.sigma.len()).filter(|&g| w.sigma[g] == l) {
                for new_block in [false, true] {
                    if let Some(c) = maj_unstep(&w, g, new_block) {
                        out.push(c);
                    }
                }
            }
        }
        _ => {
            for (bi, b) in pi.blocks().iter().enumerate() {
                if !b.contains(&l) {
                    continue;
                }
                let mut blocks = pi.blocks().to_vec();
                let slot = if b.len() == 1 {
                    blocks.remove(bi);
                    Slot { label: blocks.len() - bi, new_block: true }
                } else {
                    blocks[bi].retain(|&x| x != l);
                    let base = Omp::from_sorted(blocks.clone());
                    let label = block_labels(&base, stat).iter().position(|&i| i == bi).unwrap();
                    Slot { label, new_block: false }
                };
                out.push((slot, Omp::from_sorted(blocks)));
            }
        }
    }
    out.retain(|(s, base)| step(base, l, *s, stat).as_ref() == Ok(pi));
    out
}

fn maj_unstep(w: &StarWord, g: usize, new_block: bool) -> Option<(Slot, Omp)> {
    let mut stars = w.stars.clone();
    if !new_block {
        let last = *w.inner_descents(1).last()?;
        if !stars.remove(&last) {
            return None;
        }
    }
    let descs = w.inner_descents(g + 1);
    let mut moved: BTreeSet<usize> = stars.iter().copied().filter(|&p| p < g).collect();
    for p in stars.iter().copied().filter(|&p| p > g) {
        let i = descs.iter().position(|&d| d == p)?;
        moved.insert(*descs.get(i + 1)?);
    }
    let mut sigma = w.sigma.clone();
    sigma.remove(g);
    let mut shifted = BTreeSet::new();
    for p in moved {
        if p < g {
            shifted.insert(p);
        } else if p - 1 == g {
            return None;
        } else {
            shifted.insert(p - 1);
        }
    }
    let base = StarWord { sigma, stars: shifted };
    if base.stars.iter().any(|&p| p == 0 || p >= base.sigma.len() || !base.is_desc(p)) {
        return None;
    }
    let label = base.gap_labels().iter().position(|&x| x == g)?;
    if !new_block && label == 0 {
        return None;
    }
    let omp = if base.sigma.is_empty() { Omp::empty() } else { base.to_omp()? };
    Some((Slot { label, new_block }, omp))
}

/// All ways of writing `pi` as `insert(base, letter, data, stat)`; each
/// `data` is sorted. Exact inverse of [`insert`].
pub fn delete(pi: &Omp, letter: u32, stat: Stat) -> Vec<(Omp, Vec<(u32, bool)>)> {
    fn go(
        pi: &Omp,
        l: u32,
        stat: Stat,
        last: Option<(i64, i64)>,
        taken: &mut Vec<Slot>,
        out: &mut BTreeSet<(Omp, Vec<Slot>)>,
    ) {
        if !pi.blocks().iter().any(|b| b.contains(&l)) {
            let mut s = taken.clone();
            s.sort();
            out.insert((pi.clone(), s));
            return;
        }
        for (slot, base) in unstep_candidates(pi, l, stat) {
            let key = processing_key(stat, slot);
            if last.is_some_and(|k| key > k) {
                continue;
            }
            taken.push(slot);
            go(&base, l, stat, Some(key), taken, out);
            taken.pop();
        }
    }
    let mut found = BTreeSet::new();
    go(pi, letter, stat, None, &mut Vec::new(), &mut found);
    let mut out = Vec::new();
    for (base, slots) in found {
        let mut data: Vec<(u32, bool)> = slots.iter().map(|&s| data_of(stat, s)).collect();
        data.sort();
        if insert(&base, letter, &data, stat).as_ref() == Ok(pi) && !out.iter().any(|(b, d)| b == &base && d == &data) {
            out.push((base, data));
        }
    }
    out
}

/// Removes one copy of the largest letter, choosing the copy whose removal
/// lowers `stat` least and preferring removals that empty a block, then the
/// leftmost block. `c` is the actual drop of the statistic.
/// Fails if every removal raises the statistic.
pub fn delete_step(pi: &Omp, stat: &dyn Fn(&Omp) -> u32) -> Result<Option<(Omp, Deletion)>> {
    let l = pi.max_letter();
    if l == 0 {
        return Ok(None);
    }
    let before = i64::from(stat(pi));
    let mut best: Option<((i64, bool, usize), Omp)> = None;
    for (bi, b) in pi.blocks().iter().enumerate() {
        if !b.contains(&l) {
            continue;
        }
        let mut blocks = pi.blocks().to_vec();
        let emptied = b.len() == 1;
        if emptied {
            blocks.remove(bi);
        } else {
            blocks[bi].retain(|&x| x != l);
        }
        let base = Omp::from_sorted(blocks);
        let key = (before - i64::from(stat(&base)), !emptied, bi);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, base));
        }
    }
    let Some(((c, kept, _), base)) = best else { return Ok(None) };
    let c = u32::try_from(c).map_err(|_| Error::Precondition(format!("deleting {l} from {pi} raises the statistic")))?;
    Ok(Some((base, Deletion { letter: l, c, b: !kept })))
}

fn rebuild(zeros: usize, log: &[Deletion]) -> Result<Omp> {
    let mut by_letter: BTreeMap<u32, Vec<(u32, bool)>> = BTreeMap::new();
    for d in log {
        by_letter.entry(d.letter).or_default().push((d.c, d.b));
    }
    let mut cur = Omp::from_sorted(vec![vec![0]; zeros]);
    for (l, data) in by_letter {
        cur = insert(&cur, l, &data, Stat::Inv)?;
    }
    Ok(cur)
}

/// The deletion record of [`phi`] for the given statistic.
pub fn phi_log(pi: &Omp, stat: &dyn Fn(&Omp) -> u32) -> Result<(Omp, Vec<Deletion>)> {
    let mut cur = pi.clone();
    let mut log = Vec::new();
    while let Some((base, d)) = delete_step(&cur, stat)? {
        log.push(d);
        cur = base;
    }
    Ok((cur, log))
}

/// Type-preserving bijection with `inv(phi(pi)) = dinv(pi)`.
pub fn phi(pi: &Omp) -> Omp {
    phi_with(pi, &super::dinv).expect("dinv deletion data is always insertable")
}

/// [`phi`] with the deletion statistic supplied by the caller. Fails when
/// the deletion record it produces cannot be replayed by inv insertion.
pub fn phi_with(pi: &Omp, stat: &dyn Fn(&Omp) -> u32) -> Result<Omp> {
    let (base, log) = phi_log(pi, stat)?;
    rebuild(base.num_blocks(), &log)
}

/// Deletion record of [`theta`]: each letter is removed by inverting the maj
/// insertion, keeping the unique decomposition that inv insertion accepts.
pub fn theta_log(pi: &Omp) -> (Omp, Vec<Deletion>) {
    let mut cur = pi.clone();
    let mut log = Vec::new();
    loop {
        let l = cur.max_letter();
        if l == 0 {
            return (cur, log);
        }
        let mut valid = delete(&cur, l, Stat::Maj).into_iter().filter(|(base, data)| {
            let total: u32 = data.iter().map(|d| d.0).sum();
            insert(base, l, data, Stat::Inv).is_ok_and(|img| inv(&img) == inv(base) + total)
        });
        let (base, data) = valid.next().unwrap_or_else(|| panic!("no maj decomposition of {cur}"));
        debug_assert!(valid.next().is_none(), "ambiguous maj decomposition of {cur}");
        log.extend(data.into_iter().rev().map(|(c, b)| Deletion { letter: l, c, b }));
        cur = base;
    }
}

/// Type-preserving bijection with `inv(theta(pi)) = maj(pi)`.
pub fn theta(pi: &Omp) -> Omp {
    let (base, log) = theta_log(pi);
    rebuild(base.num_blocks(), &log).expect("maj decompositions are checked against inv insertion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omp::{dinv, maj};

    fn p(s: &str) -> Omp {
        s.parse().unwrap()
    }

    #[test]
    fn phi_worked_example() {
        let pi = p("0|3|20|1|310|32");
        let (base, log) = phi_log(&pi, &dinv).unwrap();
        assert_eq!(base, p("0|0|0"));
        let rows: Vec<(u32, bool, u32)> = log.iter().map(|d| (d.letter, d.b, d.c)).collect();
        assert_eq!(
            rows,
            vec![(3, false, 1), (3, true, 4), (3, false, 4), (2, true, 0), (2, false, 2), (1, true, 1), (1, false, 2)]
        );
        assert_eq!(phi(&pi), p("310|3|20|1|30|2"));
    }

    #[test]
    fn insertion_table_replay() {
        let table = [
            (1, (2, false), "10|0|0"),
            (1, (1, true), "10|0|1|0"),
            (2, (2, false), "10|20|1|0"),
            (2, (0, true), "10|20|1|0|2"),
            (3, (4, false), "310|20|1|0|2"),
            (3, (4, true), "310|3|20|1|0|2"),
            (3, (1, false), "310|3|20|1|30|2"),
        ];
        let mut cur = p("0|0|0");
        for (l, d, expect) in table {
            let next = insert_one(&cur, l, d, Stat::Inv).unwrap();
            assert_eq!(inv(&next), inv(&cur) + d.0);
            assert_eq!(next.num_blocks(), cur.num_blocks() + usize::from(d.1));
            assert_eq!(next, p(expect));
            cur = next;
        }
    }

    #[test]
    fn trivial_insertions() {
        for stat in Stat::ALL {
            let one = insert(&Omp::empty(), 1, &[(0, true)], stat).unwrap();
            assert_eq!(one, p("1"));
            assert_eq!(stat.eval(&one), 0);
        }
        assert_eq!(phi(&Omp::empty()), Omp::empty());
        assert_eq!(theta(&Omp::empty()), Omp::empty());
        assert!(matches!(insert(&p("0"), 1, &[(3, false)], Stat::Inv), Err(Error::NoSlot { .. })));
        assert!(insert(&p("2"), 1, &[(0, true)], Stat::Inv).is_err());
    }

    #[test]
    fn theta_transports_maj() {
        for s in ["10|1|320|21", "310|60|5|42", "0|3|20|1|310|32"] {
            let pi = p(s);
            let img = theta(&pi);
            assert_eq!(inv(&img), maj(&pi));
            assert_eq!(img.content(), pi.content());
            assert_eq!((img.zeros(), img.num_blocks()), (pi.zeros(), pi.num_blocks()));
        }
    }
}
