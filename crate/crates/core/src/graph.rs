//! Breadth-first generation of the crystal component of the empty
//! multipartition, truncated at a given rank, and its DOT / JSON renderings.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::crystal::f_op;
use crate::multipartition::{Multicharge, Multipartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub from: Multipartition,
    pub residue: i64,
    pub to: Multipartition,
}

/// Vertices grouped by rank and the `f_i` arrows between them.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    charge: Multicharge,
    layers: Vec<Vec<Multipartition>>,
    arrows: Vec<Arrow>,
}

fn sort_canonically(layer: &mut [Multipartition]) {
    layer.sort_by_cached_key(|m| m.to_string());
}

impl CrystalGraph {
    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    /// Layer `r` holds the vertices of rank `r`, sorted by text form.
    pub fn layers(&self) -> &[Vec<Multipartition>] {
        &self.layers
    }

    pub fn layer(&self, rank: usize) -> &[Multipartition] {
        self.layers.get(rank).map_or(&[], Vec::as_slice)
    }

    /// Arrows ordered by source layer, source position, then residue.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, mp: &Multipartition) -> bool {
        self.layers
            .get(mp.rank())
            .is_some_and(|layer| layer.contains(mp))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph crystal {{").unwrap();
        writeln!(
            out,
            "  // e = {}, charge = ({})",
            self.charge.level(),
            self.charge
        )
        .unwrap();
        for layer in &self.layers {
            for v in layer {
                writeln!(out, "  \"{v}\";").unwrap();
            }
        }
        for a in &self.arrows {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label={}];",
                a.from, a.to, a.residue
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ArrowJson {
            from: String,
            i: i64,
            to: String,
        }
        #[derive(Serialize)]
        struct GraphJson<'a> {
            e: i64,
            charge: &'a [i64],
            ranks: Vec<Vec<String>>,
            arrows: Vec<ArrowJson>,
        }
        let json = GraphJson {
            e: self.charge.level(),
            charge: self.charge.entries(),
            ranks: self
                .layers
                .iter()
                .map(|layer| layer.iter().map(ToString::to_string).collect())
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    from: a.from.to_string(),
                    i: a.residue,
                    to: a.to.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&json).expect("graph serializes")
    }
}

/// The vertices of rank `0..=n_max` reachable from the empty multipartition.
pub fn crystal_graph(charge: &Multicharge, n_max: usize) -> CrystalGraph {
    let mut layers = vec![vec![Multipartition::empty(charge.len())]];
    let mut arrows = Vec::new();
    for _ in 0..n_max {
        let current = layers.last().unwrap();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for v in current {
            for i in 0..charge.level() {
                if let Some(w) = f_op(v, charge, i) {
                    if seen.insert(w.clone()) {
                        next.push(w.clone());
                    }
                    arrows.push(Arrow {
                        from: v.clone(),
                        residue: i,
                        to: w,
                    });
                }
            }
        }
        sort_canonically(&mut next);
        layers.push(next);
    }
    CrystalGraph {
        charge: charge.clone(),
        layers,
        arrows,
    }
}

/// The Uglov multipartitions of rank `n`, sorted by text form.
pub fn uglov_set(charge: &Multicharge, n: usize) -> Vec<Multipartition> {
    crystal_graph(charge, n).layers.pop().unwrap()
}
