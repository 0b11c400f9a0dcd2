//! Todd–Coxeter coset enumeration (HLT strategy with lookahead).
//!
//! Realizes a [`Presentation`] as a concrete permutation action on cosets:
//! over the trivial subgroup the cosets are the group elements themselves,
//! which is how presentations become dense multiplication tables.
//!
//! The enumerator is the classic relator-scanning variant: new cosets are
//! numbered in definition order, scans fill gaps eagerly, coincidences are
//! processed to completion through a union-find queue, and when the coset
//! limit is reached a deduction-only lookahead pass plus table compaction
//! tries to recover before the enumeration is declared overflowed.  All
//! scan orders are fixed, so the output is deterministic for a given input.

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};
use crate::presentation::{Presentation, Word};

/// Default ceiling on simultaneously live cosets (2^16).
pub const DEFAULT_MAX_COSETS: usize = 1 << 16;

const UNDEF: u32 = u32::MAX;

/// Outcome of an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetStatus {
    /// The table closed: every entry defined, every relator verified.
    Complete,
    /// The coset limit was exhausted even after lookahead; the table is
    /// partial and must not be used to build a group.
    Overflowed,
}

/// The result of a Todd–Coxeter run: the action of each generator (and its
/// inverse) on cosets, with coset 1 of mathematical convention stored as
/// index 0.
#[derive(Debug, Clone)]
pub struct CosetTable {
    ngens: usize,
    /// Flat row-major table, `ncosets x 2*ngens`; column `2g` is the action
    /// of generator `g`, column `2g+1` its inverse.
    rows: Vec<u32>,
    pub status: CosetStatus,
    /// How many cosets were ever defined, including ones later merged away.
    pub total_defined: usize,
}

impl CosetTable {
    pub fn ncosets(&self) -> usize {
        if self.ngens == 0 {
            1
        } else {
            self.rows.len() / (2 * self.ngens)
        }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_complete(&self) -> bool {
        self.status == CosetStatus::Complete
    }

    fn entry(&self, coset: usize, col: usize) -> u32 {
        self.rows[coset * 2 * self.ngens + col]
    }

    /// Coset reached from `coset` by generator `g`, if defined.
    pub fn gen_action(&self, coset: usize, g: usize) -> Option<usize> {
        match self.entry(coset, 2 * g) {
            UNDEF => None,
            c => Some(c as usize),
        }
    }

    /// Coset reached from `coset` by the inverse of generator `g`.
    pub fn inv_action(&self, coset: usize, g: usize) -> Option<usize> {
        match self.entry(coset, 2 * g + 1) {
            UNDEF => None,
            c => Some(c as usize),
        }
    }
}

/// Expand a word into a column sequence: `x^-2` becomes two inverse-column
/// steps, and so on.
fn word_to_cols(w: &Word) -> Vec<usize> {
    let mut cols = Vec::with_capacity(w.length());
    for &(g, e) in w.syllables() {
        let col = if e > 0 { 2 * g } else { 2 * g + 1 };
        for _ in 0..e.unsigned_abs() {
            cols.push(col);
        }
    }
    cols
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    /// Union-find parents; merges always keep the smaller index, so the
    /// representative of a class is its minimum.
    parent: Vec<u32>,
    queue: std::collections::VecDeque<u32>,
    n_live: usize,
    max_cosets: usize,
    phys_cap: usize,
    total_defined: usize,
    relators: Vec<Vec<usize>>,
    subgens: Vec<Vec<usize>>,
}

impl Enumerator {
    fn nrows(&self) -> usize {
        self.table.len() / self.ncols
    }

    fn entry(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.ncols + col] = v;
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn is_live(&mut self, c: u32) -> bool {
        self.rep(c) == c
    }

    fn try_define(&mut self, from: u32, col: usize) -> Option<u32> {
        if self.n_live >= self.max_cosets || self.nrows() >= self.phys_cap {
            return None;
        }
        let new = self.nrows() as u32;
        self.table.extend(std::iter::repeat(UNDEF).take(self.ncols));
        self.parent.push(new);
        self.n_live += 1;
        self.total_defined += 1;
        self.set(from, col, new);
        self.set(new, col ^ 1, from);
        Some(new)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, dead) = if a < b { (a, b) } else { (b, a) };
        self.parent[dead as usize] = keep;
        self.n_live -= 1;
        self.queue.push_back(dead);
    }

    /// Drain the coincidence queue, transferring each dead coset's edges to
    /// its representative and queueing any secondary coincidences exposed
    /// along the way.
    fn process_coincidences(&mut self) {
        while let Some(dead) = self.queue.pop_front() {
            for col in 0..self.ncols {
                let delta = self.entry(dead, col);
                if delta == UNDEF {
                    continue;
                }
                // Drop the reverse pointer into the dead coset, if it is
                // still there; the forward edge is transferred below.
                if self.entry(delta, col ^ 1) == dead {
                    self.set(delta, col ^ 1, UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(delta);
                let existing = self.entry(mu, col);
                if existing != UNDEF {
                    self.merge(nu, existing);
                } else {
                    let back = self.entry(nu, col ^ 1);
                    if back != UNDEF {
                        self.merge(mu, back);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                    }
                }
            }
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        self.process_coincidences();
    }

    /// Scan `word` from `alpha` with both pointers, filling the last gap by
    /// deduction and earlier gaps by defining new cosets.  Returns `None`
    /// when a needed definition would exceed the table limits.
    fn scan_and_fill(&mut self, alpha: u32, word: &[usize]) -> Option<()> {
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = word.len();
        loop {
            while i < j {
                let d = self.entry(f, word[i]);
                if d == UNDEF {
                    break;
                }
                f = d;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j > i {
                let d = self.entry(b, word[j - 1] ^ 1);
                if d == UNDEF {
                    break;
                }
                b = d;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Some(());
            } else if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Some(());
            } else {
                let new = self.try_define(f, word[i])?;
                f = new;
                i += 1;
            }
        }
    }

    /// Deduction-only scan used by the lookahead pass: no new cosets.
    fn scan(&mut self, alpha: u32, word: &[usize]) {
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = word.len();
        while i < j {
            let d = self.entry(f, word[i]);
            if d == UNDEF {
                break;
            }
            f = d;
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j > i {
            let d = self.entry(b, word[j - 1] ^ 1);
            if d == UNDEF {
                break;
            }
            b = d;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.set(f, word[i], b);
            self.set(b, word[i] ^ 1, f);
        }
    }

    fn lookahead(&mut self) {
        let mut c = 0u32;
        while (c as usize) < self.nrows() {
            if self.is_live(c) {
                let relators = std::mem::take(&mut self.relators);
                for r in &relators {
                    self.scan(c, r);
                    if !self.is_live(c) {
                        break;
                    }
                }
                self.relators = relators;
            }
            c += 1;
        }
    }

    /// Renumber live cosets by first appearance, dropping dead rows.
    fn compact(&mut self) {
        let nrows = self.nrows();
        let mut map = vec![UNDEF; nrows];
        let mut next = 0u32;
        for c in 0..nrows as u32 {
            if self.rep(c) == c {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut table = vec![UNDEF; next as usize * self.ncols];
        for c in 0..nrows as u32 {
            if map[c as usize] == UNDEF {
                continue;
            }
            let to = map[c as usize] as usize;
            for col in 0..self.ncols {
                let d = self.entry(c, col);
                if d != UNDEF {
                    let d = self.rep(d);
                    table[to * self.ncols + col] = map[d as usize];
                }
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        debug_assert_eq!(self.n_live, next as usize);
    }

    /// Full table check after completion: totality, per-column bijectivity,
    /// and closure of every relator at every coset.
    fn verify(&mut self) {
        let n = self.nrows();
        for col in 0..self.ncols {
            let mut seen = vec![false; n];
            for c in 0..n as u32 {
                let d = self.entry(c, col);
                assert!(d != UNDEF, "incomplete table passed verification");
                assert!(
                    !seen[d as usize],
                    "generator action is not a permutation of cosets"
                );
                seen[d as usize] = true;
                assert_eq!(
                    self.entry(d, col ^ 1),
                    c,
                    "inverse action does not invert the generator action"
                );
            }
        }
        let relators = std::mem::take(&mut self.relators);
        for c in 0..n as u32 {
            for r in &relators {
                let mut x = c;
                for &col in r {
                    x = self.entry(x, col);
                }
                assert_eq!(x, c, "relator fails to close at a coset");
            }
        }
        self.relators = relators;
        let subgens = std::mem::take(&mut self.subgens);
        for w in &subgens {
            let mut x = 0u32;
            for &col in w {
                x = self.entry(x, col);
            }
            assert_eq!(x, 0, "subgroup word fails to fix the subgroup coset");
        }
        self.subgens = subgens;
    }

    /// Deduction-only lookahead plus compaction after the table filled up.
    /// Returns false when no room could be recovered, i.e. real overflow.
    fn recover(&mut self) -> bool {
        self.lookahead();
        self.compact();
        if self.total_defined > self.max_cosets.saturating_mul(64) {
            return false;
        }
        self.n_live < self.max_cosets
    }

    fn run(&mut self) -> CosetStatus {
        let mut cur = 0u32;
        // Compaction renumbers cosets, so after a recovery everything is
        // rescanned from the start — including the subgroup words, whose
        // scans may themselves have been interrupted.
        let mut need_subgens = true;
        'outer: loop {
            if need_subgens {
                let subgens = std::mem::take(&mut self.subgens);
                let mut interrupted = false;
                for w in &subgens {
                    if self.scan_and_fill(0, w).is_none() {
                        interrupted = true;
                        break;
                    }
                }
                self.subgens = subgens;
                if interrupted {
                    if !self.recover() {
                        return CosetStatus::Overflowed;
                    }
                    cur = 0;
                    continue;
                }
                need_subgens = false;
            }
            if cur as usize >= self.nrows() {
                break;
            }
            if !self.is_live(cur) {
                cur += 1;
                continue;
            }
            let relators = std::mem::take(&mut self.relators);
            let mut interrupted = false;
            for r in &relators {
                if self.scan_and_fill(cur, r).is_none() {
                    interrupted = true;
                    break;
                }
                if !self.is_live(cur) {
                    break;
                }
            }
            self.relators = relators;
            if !interrupted && self.is_live(cur) {
                for col in 0..self.ncols {
                    if self.entry(cur, col) == UNDEF && self.try_define(cur, col).is_none() {
                        interrupted = true;
                        break;
                    }
                }
            }
            if interrupted {
                if !self.recover() {
                    return CosetStatus::Overflowed;
                }
                cur = 0;
                need_subgens = true;
                continue 'outer;
            }
            cur += 1;
        }

        self.compact();
        self.verify();
        CosetStatus::Complete
    }
}

/// Enumerate the cosets of the subgroup generated by `subgroup_words` in
/// the group given by `p`.  With no subgroup words this is the regular
/// action, and the coset count is the group order.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::Input("max_cosets must be at least 1".into()));
    }
    if p.gens.is_empty() {
        return Err(Error::Presentation("presentation has no generators".into()));
    }
    let ncols = 2 * p.gens.len();
    let mut e = Enumerator {
        ncols,
        table: vec![UNDEF; ncols],
        parent: vec![0],
        queue: std::collections::VecDeque::new(),
        n_live: 1,
        max_cosets,
        phys_cap: max_cosets.saturating_mul(2).saturating_add(16),
        total_defined: 1,
        relators: p.relators.iter().map(word_to_cols).collect(),
        subgens: subgroup_words.iter().map(word_to_cols).collect(),
    };
    let status = e.run();
    Ok(CosetTable {
        ngens: p.gens.len(),
        rows: e.table,
        status,
        total_defined: e.total_defined,
    })
}

/// Shortest word reaching each coset from coset 0, as column sequences.
/// Breadth-first, trying plain generators before inverses so labels read
/// naturally.
fn coset_words(ct: &CosetTable) -> Vec<Vec<usize>> {
    let n = ct.ncosets();
    let d = ct.ngens();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[0] = Some(Vec::new());
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &c in &frontier {
            let order: Vec<usize> =
                (0..d).map(|g| 2 * g).chain((0..d).map(|g| 2 * g + 1)).collect();
            for col in order {
                let to = ct.entry(c, col) as usize;
                if words[to].is_none() {
                    let mut w = words[c].clone().unwrap();
                    w.push(col);
                    words[to] = Some(w);
                    next.push(to);
                }
            }
        }
        frontier = next;
    }
    words.into_iter().map(|w| w.expect("coset unreachable from 0")).collect()
}

fn render_cols(cols: &[usize], gen_names: &[String]) -> String {
    if cols.is_empty() {
        return "1".to_string();
    }
    let mut runs: Vec<(usize, i64)> = Vec::new();
    for &col in cols {
        let g = col / 2;
        let e: i64 = if col % 2 == 0 { 1 } else { -1 };
        match runs.last_mut() {
            Some((lg, le)) if *lg == g && (*le > 0) == (e > 0) => *le += e,
            _ => runs.push((g, e)),
        }
    }
    runs.iter()
        .map(|&(g, e)| {
            if e == 1 {
                gen_names[g].clone()
            } else {
                format!("{}^{}", gen_names[g], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Turn a complete coset table into a multiplication table.  Over the
/// trivial subgroup the cosets are the elements of the presented group;
/// over a normal subgroup they form the quotient.  (Over a non-normal
/// subgroup the coset product is not well defined, and table validation
/// rejects it.)  Labels are the shortest generator words found by the
/// enumeration.
pub fn table_from_cosets(ct: &CosetTable, p: &Presentation) -> Result<GroupTable> {
    if !ct.is_complete() {
        return Err(Error::Table(
            "cannot build a multiplication table from an overflowed enumeration".into(),
        ));
    }
    let n = ct.ncosets();
    let words = coset_words(ct);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for w in &words {
            let mut x = i as u32;
            for &col in w {
                x = ct.entry(x as usize, col);
            }
            row.push(x as usize);
        }
        rows.push(row);
    }
    let labels = words.iter().map(|w| render_cols(w, &p.gens)).collect();
    GroupTable::from_rows(rows, Some(labels))
}

/// A presentation realized as a concrete group: the table plus the element
/// index of each generator.
#[derive(Debug, Clone)]
pub struct Realization {
    pub table: GroupTable,
    pub gen_images: Vec<Elem>,
}

/// Enumerate over the trivial subgroup and build the group's table.
/// Overflow surfaces as [`Error::CosetOverflow`].
pub fn realize_presentation(p: &Presentation, max_cosets: usize) -> Result<Realization> {
    let ct = todd_coxeter(p, &[], max_cosets)?;
    if !ct.is_complete() {
        return Err(Error::CosetOverflow { limit: max_cosets });
    }
    let table = table_from_cosets(&ct, p)?;
    let gen_images = (0..p.gens.len())
        .map(|g| ct.gen_action(0, g).expect("complete table"))
        .collect();
    Ok(Realization { table, gen_images })
}
