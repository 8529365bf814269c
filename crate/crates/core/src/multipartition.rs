//! Partitions, multipartitions, nodes and multicharges.
//!
//! Components and rows are 1-based throughout: the node `(a, b, c)` is the
//! box in row `a`, column `b` of component `c`, and its content under a
//! multicharge `s` is `b - a + s_c`.
//!
//! The text format is the one used everywhere else in the crate: parts are
//! joined by `.`, the empty partition is `-`, components are joined by `|`
//! and multicharges are comma-separated integers. Parsing only accepts the
//! canonical spelling, so printing a parsed value reproduces its input
//! byte for byte.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                column: pos + 2,
                reason: "parts must be weakly decreasing".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                column: parts.iter().position(|&p| p == 0).unwrap() + 1,
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// True iff no part value is repeated `e` or more times.
    pub fn is_e_regular(&self, e: i64) -> Result<bool> {
        if e < 2 {
            return Err(Error::InvalidLevel(e));
        }
        let e = e as usize;
        Ok(self.parts.chunk_by(|a, b| a == b).all(|run| run.len() < e))
    }

    /// All partitions of `n`, in reverse lexicographic order
    /// (`n` first, `1.1.….1` last).
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Row ends: `(row, col)` of every removable box.
    pub(crate) fn removable_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = &self.parts;
        (0..p.len())
            .filter(move |&r| r + 1 == p.len() || p[r] > p[r + 1])
            .map(move |r| (r + 1, p[r]))
    }

    /// `(row, col)` of every addable slot, including the first box of the
    /// next empty row.
    pub(crate) fn addable_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = &self.parts;
        (0..=p.len())
            .filter(move |&r| r == 0 || r == p.len() || p[r - 1] > p[r])
            .map(move |r| (r + 1, p.get(r).copied().unwrap_or(0) + 1))
    }

    fn add_cell(&mut self, row: usize, col: usize) {
        debug_assert_eq!(self.row(row) + 1, col);
        if row > self.parts.len() {
            debug_assert_eq!(row, self.parts.len() + 1);
            self.parts.push(1);
        } else {
            self.parts[row - 1] += 1;
        }
        debug_assert!(row == 1 || self.parts[row - 2] >= self.parts[row - 1]);
    }

    fn remove_cell(&mut self, row: usize, col: usize) {
        debug_assert_eq!(self.row(row), col);
        self.parts[row - 1] -= 1;
        if self.parts[row - 1] == 0 {
            self.parts.pop();
        }
        debug_assert!(self.row(row) >= self.row(row + 1));
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, s, 0)
    }
}

/// Parses the partition `text`, which starts at byte `offset` of `input`.
fn parse_partition(input: &str, text: &str, offset: usize) -> Result<Partition> {
    let err = |col: usize, reason: &str| Error::Parse {
        input: input.to_string(),
        column: offset + col + 1,
        reason: reason.to_string(),
    };
    if text == "-" {
        return Ok(Partition::empty());
    }
    if text.is_empty() {
        return Err(err(0, "empty partition must be written as '-'"));
    }
    let mut parts = Vec::new();
    let mut col = 0;
    for token in text.split('.') {
        let value = parse_int(input, token, offset + col, false)? as usize;
        if value == 0 {
            return Err(err(col, "parts must be positive"));
        }
        if parts.last().is_some_and(|&last| last < value) {
            return Err(err(col, "parts must be weakly decreasing"));
        }
        parts.push(value);
        col += token.len() + 1;
    }
    Ok(Partition { parts })
}

/// Canonical integer token: no sign unless `signed`, no leading zeros, no `-0`.
fn parse_int(input: &str, token: &str, offset: usize, signed: bool) -> Result<i64> {
    let err = |col: usize, reason: &str| Error::Parse {
        input: input.to_string(),
        column: offset + col + 1,
        reason: reason.to_string(),
    };
    let (neg, digits) = match token.strip_prefix('-') {
        Some(rest) if signed => (true, rest),
        _ => (false, token),
    };
    let start = usize::from(neg);
    if digits.is_empty() {
        return Err(err(start, "expected a number"));
    }
    if let Some(pos) = digits.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(err(start + pos, "unexpected character"));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(err(start, "leading zero"));
    }
    if neg && digits == "0" {
        return Err(err(0, "negative zero"));
    }
    let magnitude: i64 = digits
        .parse()
        .map_err(|_| err(start, "number out of range"))?;
    Ok(if neg { -magnitude } else { magnitude })
}

/// A box `(row, col, comp)`; all three are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize, comp: usize) -> Self {
        Self { row, col, comp }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// A multicharge `(s_1, …, s_l)` together with the level `e` it is used at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicharge {
    entries: Vec<i64>,
    e: i64,
}

impl Multicharge {
    pub fn new(entries: Vec<i64>, e: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidLevel(e));
        }
        if entries.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { entries, e })
    }

    /// Parses `"0,2"`-style text.
    pub fn parse(text: &str, e: i64) -> Result<Self> {
        let mut entries = Vec::new();
        let mut col = 0;
        for token in text.split(',') {
            entries.push(parse_int(text, token, col, true)?);
            col += token.len() + 1;
        }
        Self::new(entries, e)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry `c`, 1-based.
    pub fn get(&self, c: usize) -> Option<i64> {
        c.checked_sub(1).and_then(|k| self.entries.get(k)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn level(&self) -> i64 {
        self.e
    }

    /// Same level, entries replaced.
    pub fn with_entries(&self, entries: Vec<i64>) -> Result<Self> {
        Self::new(entries, self.e)
    }

    /// Reduces `i` into `0..e`.
    pub fn residue_of(&self, i: i64) -> i64 {
        i.rem_euclid(self.e)
    }

    pub(crate) fn check_len(&self, mp: &Multipartition) -> Result<()> {
        if mp.level() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: mp.level(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An `l`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    comps: Vec<Partition>,
}

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { comps })
    }

    /// The empty `l`-partition.
    pub fn empty(l: usize) -> Self {
        assert!(l >= 1, "a multipartition has at least one component");
        Self {
            comps: vec![Partition::empty(); l],
        }
    }

    /// Number of components `l`.
    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.comps
    }

    /// Component `c`, 1-based.
    pub fn component(&self, c: usize) -> Option<&Partition> {
        c.checked_sub(1).and_then(|k| self.comps.get(k))
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Partition::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.iter().all(Partition::is_empty)
    }

    pub fn contains(&self, node: Node) -> bool {
        self.component(node.comp)
            .is_some_and(|p| node.row >= 1 && node.col >= 1 && p.row(node.row) >= node.col)
    }

    /// Adds an addable node. Panics if the node is not addable.
    pub fn with_node_added(&self, node: Node) -> Self {
        let mut out = self.clone();
        let p = &mut out.comps[node.comp - 1];
        assert!(
            p.row(node.row) + 1 == node.col && (node.row == 1 || p.row(node.row - 1) >= node.col),
            "{node} is not addable to {self}"
        );
        p.add_cell(node.row, node.col);
        out
    }

    /// Removes a removable node. Panics if the node is not removable.
    pub fn with_node_removed(&self, node: Node) -> Self {
        let mut out = self.clone();
        let p = &mut out.comps[node.comp - 1];
        assert!(
            p.row(node.row) == node.col && node.col > p.row(node.row + 1),
            "{node} is not removable from {self}"
        );
        p.remove_cell(node.row, node.col);
        out
    }

    /// Rotates components left: `(λ^2, …, λ^l, λ^1)`.
    pub fn rotate_left(&self) -> Self {
        let mut comps = self.comps.clone();
        comps.rotate_left(1);
        Self { comps }
    }

    /// Rotates components right: `(λ^l, λ^1, …, λ^{l-1})`.
    pub fn rotate_right(&self) -> Self {
        let mut comps = self.comps.clone();
        comps.rotate_right(1);
        Self { comps }
    }

    /// Every `l`-partition of rank `n`.
    pub fn all(l: usize, n: usize) -> Vec<Multipartition> {
        assert!(l >= 1);
        let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(l);
        fn go(
            l: usize,
            rest: usize,
            by_size: &[Vec<Partition>],
            prefix: &mut Vec<Partition>,
            out: &mut Vec<Multipartition>,
        ) {
            if prefix.len() + 1 == l {
                for p in &by_size[rest] {
                    prefix.push(p.clone());
                    out.push(Multipartition {
                        comps: prefix.clone(),
                    });
                    prefix.pop();
                }
                return;
            }
            for size in (0..=rest).rev() {
                for p in &by_size[size] {
                    prefix.push(p.clone());
                    go(l, rest - size, by_size, prefix, out);
                    prefix.pop();
                }
            }
        }
        go(l, n, &by_size, &mut prefix, &mut out);
        out
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Self { comps: vec![p] }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multipartition({self})")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        let mut offset = 0;
        for text in s.split('|') {
            comps.push(parse_partition(s, text, offset)?);
            offset += text.len() + 1;
        }
        Ok(Self { comps })
    }
}

/// `b - a + s_c`.
pub fn content(node: Node, charge: &Multicharge) -> Result<i64> {
    match charge.get(node.comp) {
        Some(s) if node.row >= 1 && node.col >= 1 => Ok(node.col as i64 - node.row as i64 + s),
        _ => Err(Error::InvalidNode {
            component: node.comp,
            len: charge.len(),
        }),
    }
}

/// The content reduced into `0..e`.
pub fn residue(node: Node, charge: &Multicharge) -> Result<i64> {
    Ok(charge.residue_of(content(node, charge)?))
}

/// An addable or removable node with its content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Slot {
    pub node: Node,
    pub content: i64,
    pub addable: bool,
}

/// All addable and removable `i`-nodes of `mp`, component by component.
///
/// Panics if the charge length differs from the number of components.
pub(crate) fn i_slots(mp: &Multipartition, charge: &Multicharge, i: i64) -> Vec<Slot> {
    assert_eq!(
        mp.level(),
        charge.len(),
        "multipartition {mp} and charge {charge} have different lengths"
    );
    let i = charge.residue_of(i);
    let mut out = Vec::new();
    for (k, (p, &s)) in mp.comps.iter().zip(&charge.entries).enumerate() {
        let start = out.len();
        let cells = p
            .addable_cells()
            .map(|cell| (cell, true))
            .chain(p.removable_cells().map(|cell| (cell, false)));
        for ((row, col), addable) in cells {
            let content = col as i64 - row as i64 + s;
            if charge.residue_of(content) == i {
                out.push(Slot {
                    node: Node::new(row, col, k + 1),
                    content,
                    addable,
                });
            }
        }
        debug_assert!(
            out[start..]
                .iter()
                .enumerate()
                .all(|(x, a)| out[start + x + 1..].iter().all(|b| a.content != b.content)),
            "two slots on one diagonal in component {}",
            k + 1
        );
    }
    out
}

/// Addable `i`-nodes of `mp`, ordered by component then row.
pub fn addable_nodes(mp: &Multipartition, charge: &Multicharge, i: i64) -> Vec<Node> {
    let mut nodes: Vec<Node> = i_slots(mp, charge, i)
        .into_iter()
        .filter(|s| s.addable)
        .map(|s| s.node)
        .collect();
    nodes.sort_by_key(|n| (n.comp, n.row));
    nodes
}

/// Removable `i`-nodes of `mp`, ordered by component then row.
pub fn removable_nodes(mp: &Multipartition, charge: &Multicharge, i: i64) -> Vec<Node> {
    let mut nodes: Vec<Node> = i_slots(mp, charge, i)
        .into_iter()
        .filter(|s| !s.addable)
        .map(|s| s.node)
        .collect();
    nodes.sort_by_key(|n| (n.comp, n.row));
    nodes
}

/// True iff no part of `p` is repeated `e` or more times.
pub fn is_e_regular(p: &Partition, e: i64) -> Result<bool> {
    p.is_e_regular(e)
}
