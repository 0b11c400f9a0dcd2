//! Dense multiplication tables for finite groups.
//!
//! Everything downstream (structure reports, automorphism search, theorem
//! checks) works against a [`GroupTable`]: a fully materialized `n x n`
//! product table with the identity pinned at index 0. Construction always
//! validates the group axioms, so the rest of the crate can index freely
//! without re-checking anything.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Index of a group element inside its table. Dense tables make a plain
/// index the cheapest possible element representation.
pub type Elem = usize;

/// Largest group order we will materialize as a dense table. At this size a
/// table is ~134 MB of products; beyond it, dense methods stop being the
/// right tool.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Above this order, associativity is spot-checked on random triples instead
/// of all `n^3` of them.
pub const FULL_ASSOC_LIMIT: usize = 512;

/// Number of random triples sampled when the exhaustive check is skipped.
pub const ASSOC_SAMPLES: usize = 100_000;

/// Knobs for table construction. The defaults are right for everything in
/// the bundled corpus; the cap exists so a hostile input file cannot ask for
/// gigabytes.
#[derive(Debug, Clone)]
pub struct TableOptions {
    pub max_order: usize,
    pub full_assoc_limit: usize,
    pub assoc_samples: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            max_order: DEFAULT_MAX_ORDER,
            full_assoc_limit: FULL_ASSOC_LIMIT,
            assoc_samples: ASSOC_SAMPLES,
        }
    }
}

/// A finite group as a dense product table.
///
/// Invariants, enforced at construction:
/// * index 0 is the two-sided identity;
/// * every row and every column is a permutation of `0..n`;
/// * the table is associative (exhaustively for `n <= 512`, sampled above);
/// * `product[i][inverse[i]] == 0`.
///
/// Tables are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    product: Vec<u32>, // row-major, stride n
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Build a table from raw rows, validating the axioms.
    ///
    /// If the rows describe a genuine group whose identity sits at some
    /// index other than 0, the table is canonicalized by swapping that
    /// element with index 0, so downstream code and tests are stable under
    /// relabeling. A table with no two-sided identity at all is rejected.
    pub fn from_rows(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<GroupTable> {
        Self::from_rows_with(rows, labels, &TableOptions::default())
    }

    pub fn from_rows_with(
        mut rows: Vec<Vec<usize>>,
        mut labels: Option<Vec<String>>,
        opts: &TableOptions,
    ) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Table("table has no rows".into()));
        }
        if n > opts.max_order {
            return Err(Error::OrderCap { order: n, cap: opts.max_order });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Table(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Table(format!(
                    "row {i} contains index {bad}, out of range for order {n}"
                )));
            }
        }
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(Error::Table(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
        }

        // Locate the two-sided identity and move it to index 0.
        let e = (0..n)
            .find(|&e| (0..n).all(|i| rows[e][i] == i && rows[i][e] == i))
            .ok_or_else(|| Error::Table("no two-sided identity element".into()))?;
        if e != 0 {
            let perm: Vec<usize> = (0..n)
                .map(|i| if i == 0 { e } else if i == e { 0 } else { i })
                .collect();
            let mut swapped = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    swapped[a][b] = perm[rows[perm[a]][perm[b]]];
                }
            }
            rows = swapped;
            if let Some(ref mut l) = labels {
                l.swap(0, e);
            }
        }

        // Latin property: rows and columns both hit every element once.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                if std::mem::replace(&mut seen[rows[i][j]], true) {
                    return Err(Error::Table(format!(
                        "row {i} repeats element {}",
                        rows[i][j]
                    )));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                if std::mem::replace(&mut seen[rows[j][i]], true) {
                    return Err(Error::Table(format!(
                        "column {i} repeats element {}",
                        rows[j][i]
                    )));
                }
            }
        }

        let product: Vec<u32> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| v as u32))
            .collect();
        let at = |a: usize, b: usize| product[a * n + b] as usize;

        // Associativity: exhaustive while cheap, sampled beyond that.
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::Table(format!(
                    "associativity fails on triple ({a}, {b}, {c}): \
                     ({a}*{b})*{c} = {} but {a}*({b}*{c}) = {}",
                    at(at(a, b), c),
                    at(a, at(b, c))
                )));
            }
            Ok(())
        };
        if n <= opts.full_assoc_limit {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6F75_7463); // fixed seed: determinism
            for _ in 0..opts.assoc_samples {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }

        let mut inverse = vec![0u32; n];
        for i in 0..n {
            // Latin rows guarantee a right inverse exists; associativity
            // makes it two-sided.
            let j = (0..n).find(|&j| at(i, j) == 0).unwrap();
            inverse[i] = j as u32;
        }

        Ok(GroupTable { n, product, inverse, labels })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.product[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    /// `g^-1 * x * g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let (mut base, mut k) = if k < 0 { (self.inv(x), -k) } else { (x, k) };
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `x^k = 1`. Always divides the group order.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        debug_assert_eq!(self.n % k, 0, "element order must divide group order");
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<GroupTable> {
        if labels.len() != self.n {
            return Err(Error::Table(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Subgroup generated by `seed`: breadth-first closure under right
    /// multiplication by the seed elements. Finiteness makes inverses come
    /// along for free.
    pub fn closure(&self, seed: &[Elem]) -> SubgroupSet {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut queue: Vec<Elem> = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in seed {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        let members: Vec<Elem> = (0..self.n).filter(|&i| member[i]).collect();
        SubgroupSet::trusted(self.n, members)
    }

    /// `C_G(x)`: everything commuting with `x`.
    pub fn centralizer(&self, x: Elem) -> SubgroupSet {
        let members: Vec<Elem> = (0..self.n)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        SubgroupSet::trusted(self.n, members)
    }

    /// Centralizer of a whole subset.
    pub fn centralizer_of_set(&self, xs: &[Elem]) -> SubgroupSet {
        let members: Vec<Elem> = (0..self.n)
            .filter(|&g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        SubgroupSet::trusted(self.n, members)
    }

    /// All conjugacy classes, plus the class id of every element.
    ///
    /// Classes are returned sorted by their smallest member, each class
    /// itself ascending, so the identity class `{0}` always comes first and
    /// the output is stable across runs.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for x in 0..self.n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut orbit = Vec::new();
            for g in 0..self.n {
                let y = self.conj(x, g);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Serialize in the table file format: order, rows, then one `# i label`
    /// line per element when labels are present. Byte-deterministic.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.n.to_string());
        out.push('\n');
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                out.push_str(&format!("# {i} {l}\n"));
            }
        }
        out
    }
}

/// Parse the table file format.
///
/// Line 1 is the order `n`; the next `n` non-blank lines are rows of `n`
/// space-separated element indices (`row i`, `column j` holding `i*j`).
/// Trailing comment lines of the shape `# <index> <label>` attach element
/// labels; other `#` lines are plain comments. Axiom violations are fatal.
pub fn parse_table_str(text: &str) -> Result<GroupTable> {
    parse_table_str_with(text, &TableOptions::default())
}

pub fn parse_table_str_with(text: &str, opts: &TableOptions) -> Result<GroupTable> {
    let mut n: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut label_lines: Vec<(usize, String, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            // After the rows, `# <index> <label>` lines carry element names.
            let mut parts = rest.split_whitespace();
            if let (Some(first), Some(second)) = (parts.next(), parts.next()) {
                if let Ok(idx) = first.parse::<usize>() {
                    let mut label = second.to_string();
                    for extra in parts {
                        label.push(' ');
                        label.push_str(extra);
                    }
                    label_lines.push((idx, label, lineno));
                }
            }
            continue;
        }
        match n {
            None => {
                let v = line.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("expected group order, found {line:?}"),
                })?;
                if v == 0 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: "group order must be at least 1".into(),
                    });
                }
                n = Some(v);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("unexpected extra row; table has {n} rows"),
                    });
                }
                let mut row = Vec::with_capacity(n);
                for tok in line.split_whitespace() {
                    let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("bad table entry {tok:?}"),
                    })?;
                    row.push(v);
                }
                if row.len() != n {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("row has {} entries, expected {n}", row.len()),
                    });
                }
                rows.push(row);
            }
        }
    }

    let n = n.ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: "empty table file".into(),
    })?;
    if rows.len() != n {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("table declares order {n} but has {} rows", rows.len()),
        });
    }

    let labels = if label_lines.is_empty() {
        None
    } else {
        let mut labels = vec![String::new(); n];
        for (idx, label, lineno) in label_lines {
            if idx >= n {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("label index {idx} out of range for order {n}"),
                });
            }
            labels[idx] = label;
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("element {i} has no label but others do"),
                });
            }
        }
        Some(labels)
    };

    GroupTable::from_rows_with(rows, labels, opts)
}

/// Conjugacy classes of a table, in canonical order.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    /// Each class sorted ascending; classes ordered by smallest member.
    pub classes: Vec<Vec<Elem>>,
    /// `class_of[x]` indexes into `classes`.
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Smallest element of the class of `x`.
    pub fn representative(&self, x: Elem) -> Elem {
        self.classes[self.class_of[x]][0]
    }

    pub fn same_class(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// A subgroup, stored as a sorted member list plus a bitmask for O(1)
/// membership tests. Closure under product is part of the contract: the
/// checked constructor verifies it, the internal one is only fed sets that
/// are closed by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    parent_order: usize,
    members: Vec<Elem>,
    mask: Vec<u64>,
}

impl SubgroupSet {
    /// Checked constructor: `members` must be non-empty, in range, and
    /// closed under the parent's product (inverses then come for free).
    pub fn new(t: &GroupTable, mut members: Vec<Elem>) -> Result<SubgroupSet> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::Input("a subgroup cannot be empty".into()));
        }
        if let Some(&bad) = members.iter().find(|&&m| m >= t.order()) {
            return Err(Error::Input(format!(
                "element {bad} out of range for order {}",
                t.order()
            )));
        }
        let set = SubgroupSet::trusted(t.order(), members);
        for &a in &set.members {
            for &b in &set.members {
                if !set.contains(t.mul(a, b)) {
                    return Err(Error::Input(format!(
                        "set is not closed: {a} * {b} = {} escapes",
                        t.mul(a, b)
                    )));
                }
            }
        }
        if !set.contains(0) {
            return Err(Error::Input("subgroup is missing the identity".into()));
        }
        Ok(set)
    }

    /// For member lists that are closed by construction.
    pub(crate) fn trusted(parent_order: usize, members: Vec<Elem>) -> SubgroupSet {
        let mut mask = vec![0u64; (parent_order + 63) / 64];
        for &m in &members {
            mask[m / 64] |= 1 << (m % 64);
        }
        SubgroupSet { parent_order, members, mask }
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Index `[G : H]`.
    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_abelian(&self, t: &GroupTable) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
    }

    /// Normal iff every conjugate of every member stays inside.
    pub fn is_normal(&self, t: &GroupTable) -> bool {
        self.members
            .iter()
            .all(|&h| (0..t.order()).all(|g| self.contains(t.conj(h, g))))
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.mask
            .iter()
            .zip(&other.mask)
            .all(|(a, b)| a & !b == 0)
    }

    /// Proper subset.
    pub fn is_proper_subset_of(&self, other: &SubgroupSet) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let members: Vec<Elem> = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        SubgroupSet::trusted(self.parent_order, members)
    }

    /// Is every coset `xH = Hx`? Same as `is_normal` but phrased on cosets;
    /// kept for tests that want the literal definition.
    pub fn cyclic_generator(&self, t: &GroupTable) -> Option<Elem> {
        self.members
            .iter()
            .copied()
            .find(|&g| t.element_order(g) == self.members.len())
    }

    pub fn is_cyclic(&self, t: &GroupTable) -> bool {
        self.cyclic_generator(t).is_some()
    }
}

/// A quotient `G/N` as a fresh table, plus the projection `G -> G/N`.
///
/// Cosets are numbered in order of first appearance while scanning
/// `g = 0, 1, ...`, which puts the identity coset `N` at index 0 and makes
/// quotients of equal inputs identical.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub table: GroupTable,
    pub projection: Vec<Elem>,
}

/// Form `G/N`. Errors if `N` is not normal (with an escaping conjugate as
/// witness).
pub fn quotient(t: &GroupTable, n: &SubgroupSet) -> Result<QuotientGroup> {
    if n.parent_order() != t.order() {
        return Err(Error::Input(format!(
            "subgroup of a group of order {} used inside order {}",
            n.parent_order(),
            t.order()
        )));
    }
    for &h in n.members() {
        for g in 0..t.order() {
            if !n.contains(t.conj(h, g)) {
                return Err(Error::Input(format!(
                    "cannot form quotient: subgroup is not normal \
                     (conjugate of {h} by {g} is {}, outside the subgroup)",
                    t.conj(h, g)
                )));
            }
        }
    }

    let order = t.order() / n.len();
    let mut coset_of = vec![usize::MAX; t.order()];
    let mut reps: Vec<Elem> = Vec::with_capacity(order);
    for g in 0..t.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &h in n.members() {
            coset_of[t.mul(g, h)] = id;
        }
    }
    debug_assert_eq!(reps.len(), order);

    let rows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[t.mul(a, b)]).collect())
        .collect();
    let table = GroupTable::from_rows(rows, None)?;
    Ok(QuotientGroup { table, projection: coset_of })
}
