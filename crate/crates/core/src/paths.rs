//! Partially labelled decorated Dyck paths.
//!
//! Rows are numbered from 1 at the bottom. The label of row `i` sits on the
//! `i`-th north step; labels in a column strictly increase upwards and the
//! first column carries no 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qt::QtRational;
use crate::symfunc::{Basis, Partition, SymFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathJson", into = "PathJson")]
pub struct PldPath {
    steps: Vec<Step>,
    labels: Vec<u32>,
    decorated: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    steps: String,
    labels: Vec<u32>,
    decorated_rows: Vec<usize>,
}

impl TryFrom<PathJson> for PldPath {
    type Error = Error;
    fn try_from(j: PathJson) -> Result<Self> {
        PldPath::new(parse_steps(&j.steps)?, j.labels, j.decorated_rows)
    }
}

impl From<PldPath> for PathJson {
    fn from(p: PldPath) -> Self {
        PathJson { steps: steps_string(&p.steps), labels: p.labels, decorated_rows: p.decorated.into_iter().collect() }
    }
}

pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            _ => Err(Error::InvalidPath(format!("unknown step {c:?}"))),
        })
        .collect()
}

pub fn steps_string(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

impl PldPath {
    /// Validates every structural constraint.
    pub fn new(steps: Vec<Step>, labels: Vec<u32>, decorated_rows: impl IntoIterator<Item = usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidPath(m));
        let (mut y, mut x) = (0usize, 0usize);
        for s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if x > y {
                return bad("the path goes below the diagonal".into());
            }
        }
        if x != y {
            return bad("the path does not end on the diagonal".into());
        }
        if labels.len() != y {
            return bad(format!("{} labels for {} north steps", labels.len(), y));
        }
        let p = Self { steps, labels, decorated: decorated_rows.into_iter().collect() };
        let cols = p.columns();
        for i in 0..p.labels.len() {
            if i > 0 && cols[i] == cols[i - 1] && p.labels[i] <= p.labels[i - 1] {
                return bad(format!("labels not increasing in the column of row {}", i + 1));
            }
            if p.labels[i] == 0 && cols[i] == 0 {
                return bad("0 in the first column".into());
            }
            if p.labels[i] == 0 && i > 0 && cols[i] == cols[i - 1] {
                return bad(format!("0 in row {} is not a zero valley", i + 1));
            }
        }
        let rises: BTreeSet<usize> = p.rises().into_iter().collect();
        if let Some(r) = p.decorated.iter().find(|r| !rises.contains(r)) {
            return bad(format!("decorated row {r} is not a rise"));
        }
        Ok(p)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn decorated_rows(&self) -> &BTreeSet<usize> {
        &self.decorated
    }

    /// `m + n`.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// `m`, the number of zero labels.
    pub fn zeros(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 0).count()
    }

    /// `n`, the number of nonzero labels.
    pub fn positives(&self) -> usize {
        self.size() - self.zeros()
    }

    /// `k`, the number of decorated rises.
    pub fn decorations(&self) -> usize {
        self.decorated.len()
    }

    /// x-coordinate of each north step, bottom to top.
    pub fn columns(&self) -> Vec<usize> {
        let mut x = 0;
        let mut out = Vec::with_capacity(self.labels.len());
        for s in &self.steps {
            match s {
                Step::N => out.push(x),
                Step::E => x += 1,
            }
        }
        out
    }

    pub fn area_word(&self) -> Vec<u32> {
        self.columns().iter().enumerate().map(|(i, &x)| (i - x) as u32).collect()
    }

    /// Rows (1-based) whose north step follows another north step.
    pub fn rises(&self) -> Vec<usize> {
        let a = self.area_word();
        (1..a.len()).filter(|&i| a[i] > a[i - 1]).map(|i| i + 1).collect()
    }

    pub fn area(&self) -> u32 {
        self.area_word()
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.decorated.contains(&(i + 1)))
            .map(|(_, a)| a)
            .sum()
    }

    /// Primary and secondary inversions.
    pub fn dinv_pairs(&self) -> (u32, u32) {
        let a = self.area_word();
        let l = &self.labels;
        let (mut primary, mut secondary) = (0, 0);
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] == a[j] && l[i] < l[j] {
                    primary += 1;
                } else if a[i] == a[j] + 1 && l[i] > l[j] {
                    secondary += 1;
                }
            }
        }
        (primary, secondary)
    }

    pub fn dinv(&self) -> u32 {
        let (p, s) = self.dinv_pairs();
        p + s
    }

    /// Multiplicity of each positive label: entry `i` counts label `i + 1`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.labels.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0; max];
        for &l in &self.labels {
            if l > 0 {
                out[l as usize - 1] += 1;
            }
        }
        out
    }

    /// Positive labels along the diagonals, bottom to top.
    pub fn dinv_reading_word(&self) -> Vec<u32> {
        let a = self.area_word();
        let mut rows: Vec<usize> = (0..a.len()).collect();
        rows.sort_by_key(|&i| (a[i], i));
        rows.into_iter().map(|i| self.labels[i]).filter(|&l| l > 0).collect()
    }

    /// Positive labels along the rows, bottom to top.
    pub fn pmaj_reading_word(&self) -> Vec<u32> {
        self.labels.iter().copied().filter(|&l| l > 0).collect()
    }

    pub fn reading_words(&self) -> (Vec<u32>, Vec<u32>) {
        (self.dinv_reading_word(), self.pmaj_reading_word())
    }

    /// Lattice points on the diagonal, both ends included.
    pub fn diagonal_touches(&self) -> usize {
        let (mut x, mut y) = (0, 0);
        let mut touches = 1;
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if x == y {
                touches += 1;
            }
        }
        touches
    }

    /// `(start, end)` row ranges of the maximal vertical stretches.
    pub fn stretches(&self) -> Vec<(usize, usize)> {
        let cols = self.columns();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (i, &c) in cols.iter().enumerate() {
            match out.last_mut() {
                Some(last) if cols[last.1 - 1] == c => last.1 = i + 1,
                _ => out.push((i, i + 1)),
            }
        }
        out
    }
}

impl fmt::Display for PldPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(u32::to_string).collect();
        let rows: Vec<String> = self.decorated.iter().map(usize::to_string).collect();
        write!(f, "{} [{}] *{{{}}}", steps_string(&self.steps), labels.join(","), rows.join(","))
    }
}

/// Accepts the printed form `NNEE [1,2] *{2}` (the decoration set may be
/// omitted) and the JSON form.
impl FromStr for PldPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let bad = || Error::Parse(format!("cannot read path {s:?}"));
        let (steps, rest) = s.split_once('[').ok_or_else(bad)?;
        let (labels, rest) = rest.split_once(']').ok_or_else(bad)?;
        let numbers = |t: &str| -> Result<Vec<u64>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u64>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                .collect()
        };
        let rest = rest.trim();
        let decorated = if rest.is_empty() {
            Vec::new()
        } else {
            let inner = rest.strip_prefix("*{").and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
            numbers(inner)?
        };
        let labels = numbers(labels)?.into_iter().map(|x| u32::try_from(x).map_err(|_| bad())).collect::<Result<_>>()?;
        PldPath::new(parse_steps(steps)?, labels, decorated.into_iter().map(|x| x as usize))
    }
}

/// All Dyck words of the given size, lexicographic with `E < N`.
pub fn dyck_words(size: usize) -> Vec<Vec<Step>> {
    fn go(size: usize, n: usize, e: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if e == size {
            out.push(cur.clone());
            return;
        }
        if e < n {
            cur.push(Step::E);
            go(size, n, e + 1, cur, out);
            cur.pop();
        }
        if n < size {
            cur.push(Step::N);
            go(size, n + 1, e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Which positive labels are available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelBudget {
    /// any positive label up to the bound, `n` of them in total
    MaxLabel { n: usize, max_label: u32 },
    /// entry `i` is the number of labels `i + 1`
    Content(Vec<u32>),
}

impl LabelBudget {
    fn positives(&self) -> usize {
        match self {
            LabelBudget::MaxLabel { n, .. } => *n,
            LabelBudget::Content(c) => c.iter().sum::<u32>() as usize,
        }
    }
}

struct Labeller<'a> {
    cols: Vec<usize>,
    budget: &'a LabelBudget,
    remaining: Vec<u32>,
    labels: Vec<u32>,
}

impl Labeller<'_> {
    fn bottom(&self, i: usize) -> bool {
        i == 0 || self.cols[i] != self.cols[i - 1]
    }

    fn go(&mut self, i: usize, zeros_left: usize, visit: &mut dyn FnMut(&[u32])) {
        let rows = self.cols.len();
        if i == rows {
            if zeros_left == 0 {
                visit(&self.labels);
            }
            return;
        }
        let slots_after = (i + 1..rows).filter(|&r| self.bottom(r) && self.cols[r] > 0).count();
        let bottom = self.bottom(i);
        if bottom && self.cols[i] > 0 && zeros_left > 0 {
            self.labels.push(0);
            self.go(i + 1, zeros_left - 1, visit);
            self.labels.pop();
        }
        if zeros_left > slots_after {
            return;
        }
        let low = if bottom { 1 } else { self.labels[i - 1] + 1 };
        let high = match self.budget {
            LabelBudget::MaxLabel { max_label, .. } => *max_label,
            LabelBudget::Content(c) => c.len() as u32,
        };
        for l in low.max(1)..=high {
            if let LabelBudget::Content(_) = self.budget {
                if self.remaining[l as usize - 1] == 0 {
                    continue;
                }
                self.remaining[l as usize - 1] -= 1;
            }
            self.labels.push(l);
            self.go(i + 1, zeros_left, visit);
            self.labels.pop();
            if let LabelBudget::Content(_) = self.budget {
                self.remaining[l as usize - 1] += 1;
            }
        }
    }
}

/// `k`-subsets of `items` in lexicographic order.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i].clone());
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Calls `visit` on every path with `m` zero labels and `k` decorated rises,
/// ordered by step word, then label word, then decoration set.
pub fn for_each_pld(m: usize, k: usize, budget: &LabelBudget, mut visit: impl FnMut(PldPath)) {
    let size = m + budget.positives();
    for steps in dyck_words(size) {
        let skeleton = PldPath { steps: steps.clone(), labels: vec![0; size], decorated: BTreeSet::new() };
        let rises = skeleton.rises();
        if rises.len() < k {
            continue;
        }
        let decorations = combinations(&rises, k);
        let remaining = match budget {
            LabelBudget::Content(c) => c.clone(),
            LabelBudget::MaxLabel { .. } => Vec::new(),
        };
        let mut lab = Labeller { cols: skeleton.columns(), budget, remaining, labels: Vec::with_capacity(size) };
        lab.go(0, m, &mut |labels| {
            for d in &decorations {
                visit(PldPath { steps: steps.clone(), labels: labels.to_vec(), decorated: d.iter().copied().collect() });
            }
        });
    }
}

/// `PLD(m, n)^{*k}` with positive labels in `1..=max_label`.
pub fn enumerate_pld(m: usize, n: usize, k: usize, max_label: u32) -> Vec<PldPath> {
    let mut out = Vec::new();
    for_each_pld(m, k, &LabelBudget::MaxLabel { n, max_label }, |p| out.push(p));
    out
}

/// Paths whose positive labels have exactly the given multiplicities.
pub fn enumerate_pld_with_content(m: usize, k: usize, content: &[u32]) -> Vec<PldPath> {
    let mut out = Vec::new();
    for_each_pld(m, k, &LabelBudget::Content(content.to_vec()), |p| out.push(p));
    out
}

/// Coefficient of `q^dinv t^area`, as a symmetric function in the monomial basis.
pub type QtSeries = BTreeMap<(u32, u32), SymFun>;

/// `sum_P q^dinv t^area x^P` over `PLD(m, n)^{*k}`, in `num_vars` variables,
/// read off from the monomials `x^lambda` with `lambda` a partition.
pub fn pld_polynomial(m: usize, n: usize, k: usize, num_vars: usize) -> QtSeries {
    pld_polynomial_with(m, n, k, num_vars, |p| (p.dinv(), p.area()))
}

/// [`pld_polynomial`] with the statistics supplied by the caller.
pub fn pld_polynomial_with<F>(m: usize, n: usize, k: usize, num_vars: usize, stats: F) -> QtSeries
where
    F: Fn(&PldPath) -> (u32, u32) + Sync,
{
    let shapes: Vec<Partition> = Partition::all(n as u32).into_iter().filter(|l| l.len() <= num_vars).collect();
    let counts: Vec<(Partition, BTreeMap<(u32, u32), u64>)> = shapes
        .into_par_iter()
        .map(|lam| {
            let mut c: BTreeMap<(u32, u32), u64> = BTreeMap::new();
            for_each_pld(m, k, &LabelBudget::Content(lam.parts().to_vec()), |p| {
                *c.entry(stats(&p)).or_default() += 1;
            });
            (lam, c)
        })
        .collect();
    series_from_counts(n as u32, counts)
}

/// Assembles per-shape counts into a q,t-indexed family of symmetric functions.
pub fn series_from_counts<K: Ord + Copy>(
    n: u32,
    counts: Vec<(Partition, BTreeMap<K, u64>)>,
) -> BTreeMap<K, SymFun> {
    let mut by_key: BTreeMap<K, Vec<(Partition, QtRational)>> = BTreeMap::new();
    for (lam, c) in counts {
        for (key, v) in c {
            by_key.entry(key).or_default().push((lam.clone(), QtRational::from_int(v as i64)));
        }
    }
    by_key
        .into_iter()
        .map(|(key, terms)| (key, SymFun::from_terms(Basis::M, n, terms).expect("degree n fits bound n")))
        .collect()
}

/// Collapses a series to one symmetric function with `q^a t^b` coefficients.
pub fn series_to_symfun(series: &QtSeries, n: u32) -> SymFun {
    let mut out = SymFun::zero(Basis::M, n);
    for (&(a, b), f) in series {
        out = out.add(&f.scale(&QtRational::from_poly(crate::qt::IntPoly::monomial(1, a, b))));
    }
    out
}

/// Checks that, in every `(dinv, area)` degree, the number of paths with a
/// given label content depends only on the sorted content.
pub fn pld_is_symmetric(m: usize, n: usize, k: usize, max_label: u32) -> bool {
    let mut counts: BTreeMap<((u32, u32), Vec<u32>), u64> = BTreeMap::new();
    for_each_pld(m, k, &LabelBudget::MaxLabel { n, max_label }, |p| {
        let mut c = p.content();
        c.resize(max_label as usize, 0);
        *counts.entry(((p.dinv(), p.area()), c)).or_default() += 1;
    });
    let mut classes: BTreeMap<((u32, u32), Vec<u32>), BTreeSet<u64>> = BTreeMap::new();
    let mut sizes: BTreeMap<((u32, u32), Vec<u32>), usize> = BTreeMap::new();
    for ((deg, c), v) in &counts {
        let mut key = c.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        classes.entry((*deg, key.clone())).or_default().insert(*v);
        *sizes.entry((*deg, key)).or_default() += 1;
    }
    classes.iter().all(|(key, vals)| vals.len() == 1 && sizes[key] == distinct_permutations(&key.1))
}

fn distinct_permutations(v: &[u32]) -> usize {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in v {
        *mult.entry(x).or_default() += 1;
    }
    let fact = |n: usize| (1..=n).product::<usize>();
    mult.values().fold(fact(v.len()), |acc, &k| acc / fact(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure1() -> PldPath {
        PldPath::new(parse_steps("NNEENNNEENNNEEEE").unwrap(), vec![1, 3, 0, 4, 6, 0, 2, 6], [4, 7]).unwrap()
    }

    fn figure2() -> PldPath {
        PldPath::new(parse_steps("NNEENNNEEENNEENE").unwrap(), vec![2, 3, 0, 1, 4, 0, 5, 0], [2, 4, 5, 7]).unwrap()
    }

    fn figure3() -> PldPath {
        PldPath::new(parse_steps("NNNENNENNNEEEEEE").unwrap(), vec![2, 4, 5, 0, 6, 0, 1, 3], [2, 5, 7, 8]).unwrap()
    }

    #[test]
    fn text_round_trip() {
        for p in [figure1(), figure2(), figure3()] {
            assert_eq!(p.to_string().parse::<PldPath>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap().parse::<PldPath>().unwrap(), p);
        }
        assert_eq!("NE [1]".parse::<PldPath>().unwrap().labels(), &[1]);
        assert!("NE 1".parse::<PldPath>().is_err());
        assert!("NNEE [1,2] *{7}".parse::<PldPath>().is_err());
    }

    #[test]
    fn figure_statistics() {
        let p = figure1();
        assert_eq!(p.area(), 7);
        assert_eq!(p.dinv_pairs(), (1, 2));
        assert_eq!((p.zeros(), p.positives(), p.decorations()), (2, 6, 2));
        let bare = PldPath::new(p.steps.clone(), p.labels.clone(), []).unwrap();
        assert_eq!(bare.dinv(), 3);
        let f3 = figure3();
        assert_eq!(f3.area_word(), vec![0, 1, 2, 2, 3, 3, 4, 5]);
        assert_eq!(f3.area(), 7);
        assert_eq!(f3.dinv(), 0);
        assert_eq!(figure2().area(), 0);
    }

    #[test]
    fn reading_words_of_figure2() {
        let (d, p) = figure2().reading_words();
        assert_eq!(d, vec![2, 3, 1, 5, 4]);
        assert_eq!(p, vec![2, 3, 1, 4, 5]);
    }

    #[test]
    fn rejects_invalid_paths() {
        let s = parse_steps("NENE").unwrap();
        assert!(PldPath::new(s.clone(), vec![0, 1], []).is_err());
        assert!(PldPath::new(s.clone(), vec![1, 1], []).is_ok());
        assert!(PldPath::new(s, vec![1, 1], [2]).is_err());
        assert!(PldPath::new(parse_steps("ENNE").unwrap(), vec![1, 2], []).is_err());
        assert!(PldPath::new(parse_steps("NNEE").unwrap(), vec![2, 1], []).is_err());
    }

    #[test]
    fn smallest_enumerations() {
        let one = enumerate_pld(0, 1, 0, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(steps_string(one[0].steps()), "NE");
        let with_zero = enumerate_pld(1, 1, 0, 1);
        // N E N E with labels 1, 0
        assert_eq!(with_zero.len(), 1);
        assert_eq!(with_zero[0].labels(), &[1, 0]);
        assert!(enumerate_pld_with_content(2, 2, &figure1().content()).contains(&figure1()));
    }

    #[test]
    fn json_round_trip() {
        let p = figure1();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"steps":"NNEENNNEENNNEEEE","labels":[1,3,0,4,6,0,2,6],"decorated_rows":[4,7]}"#);
        assert_eq!(s.parse::<PldPath>().unwrap(), p);
    }

    #[test]
    fn small_polynomial() {
        let s = pld_polynomial(0, 1, 0, 1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[&(0, 0)], SymFun::m(&Partition::new(vec![1]).unwrap(), 1).unwrap());
        assert!(pld_is_symmetric(1, 2, 0, 3));
        assert!(pld_is_symmetric(0, 3, 1, 3));
    }
}
