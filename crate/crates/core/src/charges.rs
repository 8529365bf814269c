//! The extended affine symmetric group acting on multicharges.
//!
//! `σ_c` swaps entries `c` and `c + 1`, `y_i` adds `e` to entry `i` and
//! `τ = y_l σ_{l-1} ⋯ σ_1` rotates left while adding `e` to the wrapped
//! entry. Two charges are in the same orbit exactly when their multisets of
//! residues mod `e` agree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multipartition::{Multicharge, Multipartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `σ_c`, 1-based.
    Sigma(usize),
    Tau,
    TauInverse,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(c) => write!(f, "s{c}"),
            Generator::Tau => f.write_str("t"),
            Generator::TauInverse => f.write_str("T"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
            column: 1,
            reason: "expected s<c>, t or T".into(),
        };
        match s {
            "t" => Ok(Generator::Tau),
            "T" => Ok(Generator::TauInverse),
            _ => {
                let digits = s.strip_prefix('s').ok_or_else(bad)?;
                if digits.starts_with('0') || digits.starts_with('+') {
                    return Err(bad());
                }
                digits.parse().map(Generator::Sigma).map_err(|_| bad())
            }
        }
    }
}

/// A word in the generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn tokens(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }

    pub fn apply(&self, charge: &Multicharge) -> Result<Multicharge> {
        self.0.iter().try_fold(charge.clone(), |s, g| match *g {
            Generator::Sigma(c) => act_sigma(&s, c),
            Generator::Tau => Ok(act_tau(&s)),
            Generator::TauInverse => Ok(act_tau_inverse(&s)),
        })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens().join(" "))
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<_>>()
            .map(GeneratorWord)
    }
}

fn check_index(index: usize, max: usize) -> Result<()> {
    if index == 0 || index > max {
        return Err(Error::IndexOutOfRange { index, max });
    }
    Ok(())
}

/// `σ_c`: swap entries `c` and `c + 1`.
pub fn act_sigma(charge: &Multicharge, c: usize) -> Result<Multicharge> {
    check_index(c, charge.len() - 1)?;
    let mut s = charge.entries().to_vec();
    s.swap(c - 1, c);
    charge.with_entries(s)
}

/// `y_i`: add `e` to entry `i`.
pub fn act_y(charge: &Multicharge, i: usize) -> Result<Multicharge> {
    check_index(i, charge.len())?;
    let mut s = charge.entries().to_vec();
    s[i - 1] += charge.level();
    charge.with_entries(s)
}

/// `y_i^{-1}`: subtract `e` from entry `i`.
pub fn act_y_inverse(charge: &Multicharge, i: usize) -> Result<Multicharge> {
    check_index(i, charge.len())?;
    let mut s = charge.entries().to_vec();
    s[i - 1] -= charge.level();
    charge.with_entries(s)
}

/// `τ.s = (s_2, …, s_l, s_1 + e)`.
pub fn act_tau(charge: &Multicharge) -> Multicharge {
    let mut s = charge.entries().to_vec();
    s[0] += charge.level();
    s.rotate_left(1);
    charge.with_entries(s).unwrap()
}

/// `τ^{-1}.s = (s_l - e, s_1, …, s_{l-1})`.
pub fn act_tau_inverse(charge: &Multicharge) -> Multicharge {
    let mut s = charge.entries().to_vec();
    s.rotate_right(1);
    s[0] -= charge.level();
    charge.with_entries(s).unwrap()
}

fn sorted_residues(charge: &Multicharge) -> Vec<i64> {
    let mut r: Vec<i64> = charge
        .entries()
        .iter()
        .map(|&s| charge.residue_of(s))
        .collect();
    r.sort_unstable();
    r
}

pub fn same_orbit(s1: &Multicharge, s2: &Multicharge) -> Result<bool> {
    if s1.len() != s2.len() {
        return Err(Error::LengthMismatch {
            expected: s1.len(),
            found: s2.len(),
        });
    }
    if s1.level() != s2.level() {
        return Err(Error::LevelMismatch(s1.level(), s2.level()));
    }
    Ok(sorted_residues(s1) == sorted_residues(s2))
}

pub(crate) fn require_same_orbit(from: &Multicharge, to: &Multicharge) -> Result<()> {
    if same_orbit(from, to)? {
        Ok(())
    } else {
        Err(Error::OrbitMismatch {
            from: from.to_string(),
            to: to.to_string(),
        })
    }
}

/// True iff `0 <= s_1 <= … <= s_l < e`.
pub fn is_fundamental(charge: &Multicharge) -> bool {
    let s = charge.entries();
    s[0] >= 0 && s[s.len() - 1] < charge.level() && s.windows(2).all(|w| w[0] <= w[1])
}

/// The representative of `charge`'s orbit in the fundamental domain,
/// together with a word carrying `charge` to it.
pub fn to_fundamental(charge: &Multicharge) -> (Multicharge, GeneratorWord) {
    let l = charge.len();
    let e = charge.level();
    let mut word = Vec::new();
    let mut s = charge.clone();
    let mut push = |g: Generator, s: &mut Multicharge| {
        *s = GeneratorWord(vec![g]).apply(s).unwrap();
        word.push(g);
    };

    // Walk each out-of-range entry to the front (for τ) or the back
    // (for τ^{-1}) and shift it by ±e until every entry lies in 0..e.
    while let Some(p) = s.entries().iter().position(|&x| !(0..e).contains(&x)) {
        if s.entries()[p] < 0 {
            for c in (1..=p).rev() {
                push(Generator::Sigma(c), &mut s);
            }
            push(Generator::Tau, &mut s);
        } else {
            for c in p + 1..l {
                push(Generator::Sigma(c), &mut s);
            }
            push(Generator::TauInverse, &mut s);
        }
    }

    // Bubble sort with adjacent swaps.
    loop {
        let entries = s.entries().to_vec();
        let Some(c) = entries.windows(2).position(|w| w[0] > w[1]) else {
            break;
        };
        push(Generator::Sigma(c + 1), &mut s);
    }

    let word = GeneratorWord(word);
    let target = charge.with_entries(sorted_residues(charge)).unwrap();
    assert_eq!(word.apply(charge).as_ref(), Ok(&target), "replay of {word}");
    (target, word)
}

/// Explicit characterization of the Uglov set for charges with
/// `0 < s_j - s_i < e` whenever `i < j`.
///
/// Returns [`Error::NotApplicable`] when the charge violates that
/// hypothesis; use [`crate::is_uglov`] instead in that case.
pub fn is_flotw(mp: &Multipartition, charge: &Multicharge) -> Result<bool> {
    charge.check_len(mp)?;
    let s = charge.entries();
    let e = charge.level();
    let l = s.len();
    for j in 1..l {
        for i in 0..j {
            let gap = s[j] - s[i];
            if gap <= 0 || gap >= e {
                return Err(Error::NotApplicable(format!(
                    "charge {charge} needs 0 < s_j - s_i < {e} for all i < j"
                )));
            }
        }
    }
    let comps = mp.components();
    let rows = comps.iter().map(|p| p.len()).max().unwrap_or(0);

    // λ^j_i >= λ^{j+1}_{i + s_{j+1} - s_j}
    for j in 0..l - 1 {
        let shift = (s[j + 1] - s[j]) as usize;
        if (1..=rows).any(|i| comps[j].row(i) < comps[j + 1].row(i + shift)) {
            return Ok(false);
        }
    }
    // λ^l_i >= λ^1_{i + e + s_1 - s_l}
    let shift = (e + s[0] - s[l - 1]) as usize;
    if (1..=rows).any(|i| comps[l - 1].row(i) < comps[0].row(i + shift)) {
        return Ok(false);
    }
    // For each part value k, the residues of the row ends of length k miss
    // at least one class.
    let mut by_value: std::collections::BTreeMap<usize, Vec<bool>> = Default::default();
    for (p, &sj) in comps.iter().zip(s) {
        for (i, &k) in p.parts().iter().enumerate() {
            let res = (k as i64 - (i as i64 + 1) + sj).rem_euclid(e) as usize;
            by_value.entry(k).or_insert_with(|| vec![false; e as usize])[res] = true;
        }
    }
    Ok(by_value.values().all(|seen| seen.iter().any(|&hit| !hit)))
}

/// `s_j - s_i >= n - 1 - e` for all `i < j`.
pub fn is_very_dominant(charge: &Multicharge, n: usize) -> bool {
    let s = charge.entries();
    let bound = n as i64 - 1 - charge.level();
    (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[j] - s[i] >= bound))
}
